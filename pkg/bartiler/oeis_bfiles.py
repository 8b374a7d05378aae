"""輸出 OEIS b-file。功能說明：
- 以 F_k(x;1,1) 的線性遞迴逐項產生 2k×n 鋪法數
- 每行格式為「n a(n)」，以空白分隔、換行結尾、無標頭
- 批次輸出 k=2..10 對應的 OEIS 序列檔案 b<序號>.txt"""
import logging
import sys
from itertools import islice
from pathlib import Path
from typing import Iterable, Iterator, Optional

from .errors import OutOfRange
from .gf_engine import F_main
from .poly_core import iter_coefficients

logger = logging.getLogger(__name__)

# k → OEIS 序號
OEIS_IDS = {
    2: 'A005178',
    3: 'A236577',
    4: 'A236582',
    5: 'A247117',
    6: 'A250663',
    7: 'A250664',
    8: 'A250665',
    9: 'A250666',
    10: 'A250667',
}


def bfile_lines(k: int, max_n: int, a_val: int = 1, b_val: int = 1) -> Iterator[str]:
    """產生 "n a(n)"，0 ≤ n ≤ max_n
    Args: k: 條狀磚長度, max_n: 最大索引
    Returns: 字串迭代器（不含換行）"""
    if k < 2:
        raise OutOfRange(f"k 必須 ≥ 2: {k}")
    if max_n < 0:
        raise OutOfRange(f"max_n 必須為非負整數: {max_n}")
    coefficients = iter_coefficients(F_main(k), a_val, b_val)
    for n, value in enumerate(islice(coefficients, max_n + 1)):
        yield f"{n} {value}"


def write_bfile(path: Path, lines: Iterable[str]) -> int:
    """寫入 b-file，回傳行數"""
    count = 0
    with open(path, 'w', encoding='utf-8', newline='\n') as handle:
        for line in lines:
            handle.write(line + '\n')
            count += 1
    return count


def export_bfiles(out_dir='bfiles', max_n: int = 1000, ks: Optional[Iterable[int]] = None) -> bool:
    """批次輸出各 k 的 b-file
    Args: out_dir: 輸出資料夾, max_n: 每個檔案的最大索引, ks: 要輸出的 k（預設為 OEIS_IDS 全部）
    Returns: 全部成功為 True"""
    logger.info("=" * 60)
    logger.info("開始輸出 OEIS b-file")
    logger.info("=" * 60)
    try:
        target = Path(out_dir)
        target.mkdir(parents=True, exist_ok=True)
        selected = sorted(OEIS_IDS) if ks is None else list(ks)
        for k in selected:
            name = f"b{OEIS_IDS[k][1:]}.txt" if k in OEIS_IDS else f"b_k{k}.txt"
            count = write_bfile(target / name, bfile_lines(k, max_n))
            logger.info(f"k={k}: 已寫入 {name}（{count} 行）")
        logger.info(f"輸出完成: 共 {len(selected)} 個檔案，位於 {target.resolve()}")
        logger.info("=" * 60)
        return True
    except Exception as e:
        logger.error(f"輸出 b-file 失敗: {str(e)}")
        import traceback
        traceback.print_exc()
        return False


if __name__ == '__main__':
    logging.basicConfig(level=logging.INFO, format='%(asctime)s - %(levelname)s - %(message)s')
    success = export_bfiles()
    sys.exit(0 if success else 1)
