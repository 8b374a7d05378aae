"""
k×1 長條磚鋪法的窮舉基準
- count_tilings：逐欄掃描的轉移矩陣 DP，回傳加權計數 Σ a^v b^h
- enumerate_tilings：回溯法逐一列出鋪法（與 DP 不共用任何程式路徑）
- 斷層判定、Graham 無斷層判準、Klarner 可鋪判準、Aggarwal–Ram 窄矩形公式

座標慣例：第 0 列在最下方、第 0 欄在最左方；磚的錨點是其左下角格子。
k=1 時 1×1 磚一律記為直放。
"""
from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from typing import Any, Dict, FrozenSet, Iterator, List, Optional, Sequence, Tuple

from .combinatorics import binom
from .errors import CapacityExceeded, OutOfRange, PreconditionViolated, RangeViolation
from .poly_core import BiPoly, ZERO

logger = logging.getLogger(__name__)

DEFAULT_STATE_CAPACITY = 1 << 24
DEFAULT_TILING_CAP = 10 ** 7

EMPIRICAL_KINDS = ('h', 'v', 'u', 'w')

# 掃描中一欄的輪廓：每列還要往右凸出幾欄（0 表示齊平）
TilingState = Tuple[int, ...]


@dataclass(frozen=True)
class Bar:
    """一塊已放置的磚：dir 為 'H'（橫）或 'V'（直），(row, col) 為左下角"""
    dir: str
    row: int
    col: int

    def to_json(self) -> Dict[str, Any]:
        return {"dir": self.dir, "row": self.row, "col": self.col}


@dataclass(frozen=True)
class Tiling:
    m: int
    n: int
    k: int
    bars: Tuple[Bar, ...]

    @property
    def vertical_count(self) -> int:
        return sum(1 for bar in self.bars if bar.dir == 'V')

    @property
    def horizontal_count(self) -> int:
        return sum(1 for bar in self.bars if bar.dir == 'H')

    def weight(self) -> BiPoly:
        """a^v b^h"""
        return BiPoly.monomial(1, self.vertical_count, self.horizontal_count)

    def to_json(self) -> Dict[str, Any]:
        return {"m": self.m, "n": self.n, "k": self.k, "bars": [bar.to_json() for bar in self.bars]}


@dataclass(frozen=True)
class FaultSet:
    """鋪法的斷層線：vertical 為 x 座標集合，horizontal 為 y 座標集合"""
    vertical: FrozenSet[int]
    horizontal: FrozenSet[int]
    m: int
    n: int

    @property
    def vertical_faults(self) -> FrozenSet[int]:
        return self.vertical

    @property
    def horizontal_faults(self) -> FrozenSet[int]:
        return self.horizontal

    @property
    def has_central_fault(self) -> bool:
        return self.m % 2 == 0 and (self.m // 2) in self.horizontal

    @property
    def vertically_fault_free(self) -> bool:
        return not self.vertical


# ---------------------------------------------------------------------------
# 轉移矩陣 DP
# ---------------------------------------------------------------------------

# 轉移表快取的上限（依輪廓狀態計）
TRANSITION_CACHE_SIZE = 1 << 16


@lru_cache(maxsize=TRANSITION_CACHE_SIZE)
def _column_transitions(state: TilingState, k: int) -> Tuple[Tuple[TilingState, int, int], ...]:
    """一欄內由上到下（依列索引）填滿所有空格的各種方式

    Returns:
        (下一欄輪廓, 直磚數, 橫磚數) 的序列
    """
    m = len(state)
    results: List[Tuple[TilingState, int, int]] = []
    nxt = [0] * m

    def fill(row: int, v: int, h: int) -> None:
        if row == m:
            results.append((tuple(nxt), v, h))
            return
        if state[row] > 0:
            nxt[row] = state[row] - 1
            fill(row + 1, v, h)
            return
        # 直放：本欄連續 k 格都要是空的
        if row + k <= m and all(state[r] == 0 for r in range(row, row + k)):
            for r in range(row, row + k):
                nxt[r] = 0
            fill(row + k, v + 1, h)
        # 橫放：往右凸出 k−1 欄；k=1 時與直放相同，不重複計入
        if k > 1:
            nxt[row] = k - 1
            fill(row + 1, v, h + 1)

    fill(0, 0, 0)
    return tuple(results)


def _advance(layer: Sequence[Tuple[TilingState, BiPoly]], k: int, columns_left: int) -> Dict[TilingState, Dict[Tuple[int, int], int]]:
    acc: Dict[TilingState, Dict[Tuple[int, int], int]] = {}
    for state, weight in layer:
        for nxt, v, h in _column_transitions(state, k):
            if nxt and max(nxt) > columns_left:
                continue
            bucket = acc.setdefault(nxt, {})
            for (da, db), c in weight.terms():
                key = (da + v, db + h)
                bucket[key] = bucket.get(key, 0) + c
    return acc


def count_tilings(m: int, n: int, k: int, threads: int = 1,
                  capacity: Optional[int] = None) -> BiPoly:
    """m×n 矩形以 k×1 長條磚鋪滿的加權計數 t(m,n;k)

    Args:
        m, n: 列數（高）與欄數（寬）
        k: 磚長
        threads: 每一層狀態分給幾個執行緒；結果與執行緒數無關
        capacity: 狀態數上限，預設 2^24

    Returns:
        BiPoly，a 記直磚、b 記橫磚；無鋪法時為零多項式
    """
    if m < 0 or n < 0 or k < 1:
        raise OutOfRange(f"需要 m,n ≥ 0 且 k ≥ 1: m={m}, n={n}, k={k}")
    capacity = capacity or DEFAULT_STATE_CAPACITY
    if m == 0 or n == 0:
        return BiPoly.constant(1)
    if k ** m > capacity:
        raise CapacityExceeded(f"輪廓狀態數上界 {k}^{m} 超過上限 {capacity}")

    layer: Dict[TilingState, BiPoly] = {(0,) * m: BiPoly.constant(1)}
    for column in range(n):
        columns_left = n - column - 1
        items = sorted(layer.items())
        if threads > 1 and len(items) > threads:
            chunks = [items[i::threads] for i in range(threads)]
            with ThreadPoolExecutor(max_workers=threads) as pool:
                partials = list(pool.map(lambda chunk: _advance(chunk, k, columns_left), chunks))
        else:
            partials = [_advance(items, k, columns_left)]
        merged: Dict[TilingState, Dict[Tuple[int, int], int]] = {}
        for partial in partials:
            for state, bucket in partial.items():
                target = merged.setdefault(state, {})
                for key, c in bucket.items():
                    target[key] = target.get(key, 0) + c
        layer = {state: BiPoly(bucket) for state, bucket in merged.items()}
        layer = {state: weight for state, weight in layer.items() if weight}
        if len(layer) > capacity:
            raise CapacityExceeded(f"第 {column} 欄的狀態數 {len(layer)} 超過上限 {capacity}")
        logger.debug(f"第 {column} 欄完成，狀態數 {len(layer)}")
    return layer.get((0,) * m, ZERO)


def klarner_tileable(m: int, n: int, k: int) -> bool:
    """m×n 可被 k×1 磚鋪滿 ⟺ k|m 或 k|n"""
    if m < 1 or n < 1 or k < 1:
        raise OutOfRange(f"需要正整數: m={m}, n={n}, k={k}")
    return m % k == 0 or n % k == 0


# ---------------------------------------------------------------------------
# 回溯列舉
# ---------------------------------------------------------------------------

def _rectangle_tilings(m: int, n: int, shapes: Sequence[Tuple[int, int]]) -> Iterator[Tuple[Tuple[int, int, int, int], ...]]:
    """以給定的 (高, 寬) 形狀回溯鋪滿 m×n，產生 (row, col, 高, 寬) 的序列

    每次挑選「最低列、最左欄」的空格放磚。
    """
    filled = [[False] * n for _ in range(m)]
    placed: List[Tuple[int, int, int, int]] = []
    total = m * n

    def first_empty(start: int) -> int:
        for index in range(start, total):
            row, col = divmod(index, n)
            if not filled[row][col]:
                return index
        return total

    def fits(row: int, col: int, height: int, width: int) -> bool:
        if row + height > m or col + width > n:
            return False
        return all(not filled[r][c] for r in range(row, row + height) for c in range(col, col + width))

    def mark(row: int, col: int, height: int, width: int, value: bool) -> None:
        for r in range(row, row + height):
            for c in range(col, col + width):
                filled[r][c] = value

    def walk(start: int) -> Iterator[Tuple[Tuple[int, int, int, int], ...]]:
        index = first_empty(start)
        if index == total:
            yield tuple(placed)
            return
        row, col = divmod(index, n)
        for height, width in shapes:
            if fits(row, col, height, width):
                mark(row, col, height, width, True)
                placed.append((row, col, height, width))
                yield from walk(index + 1)
                placed.pop()
                mark(row, col, height, width, False)

    if m == 0 or n == 0:
        yield ()
        return
    yield from walk(0)


def enumerate_tilings(m: int, n: int, k: int, cap: int = DEFAULT_TILING_CAP) -> Iterator[Tiling]:
    """逐一產生 m×n 的 k×1 鋪法（順序固定）；超過 cap 個時拋出 CapacityExceeded"""
    if m < 0 or n < 0 or k < 1:
        raise OutOfRange(f"需要 m,n ≥ 0 且 k ≥ 1: m={m}, n={n}, k={k}")
    shapes = [(k, 1)] if k == 1 else [(k, 1), (1, k)]
    produced = 0
    for placement in _rectangle_tilings(m, n, shapes):
        produced += 1
        if produced > cap:
            raise CapacityExceeded(f"{m}×{n} 的鋪法超過 {cap} 個")
        bars = tuple(Bar('V' if height == k else 'H', row, col) for row, col, height, _ in placement)
        yield Tiling(m, n, k, bars)


def _faults(m: int, n: int, rects: Sequence[Tuple[int, int, int, int]]) -> Tuple[FrozenSet[int], FrozenSet[int]]:
    vertical = set(range(1, n))
    horizontal = set(range(1, m))
    for row, col, height, width in rects:
        vertical.difference_update(range(col + 1, col + width))
        horizontal.difference_update(range(row + 1, row + height))
    return frozenset(vertical), frozenset(horizontal)


def fault_predicates(tiling: Tiling, m: Optional[int] = None, n: Optional[int] = None) -> FaultSet:
    """回傳所有垂直斷層 x 與水平斷層 y（沒有任何磚的內部穿過該線）"""
    m = tiling.m if m is None else m
    n = tiling.n if n is None else n
    k = tiling.k
    rects = [(bar.row, bar.col, k, 1) if bar.dir == 'V' else (bar.row, bar.col, 1, k) for bar in tiling.bars]
    vertical, horizontal = _faults(m, n, rects)
    return FaultSet(vertical, horizontal, m, n)


def _empirical_filter(kind: str, faults: FaultSet) -> bool:
    if kind == 'h':
        return faults.has_central_fault
    if kind == 'v':
        return faults.has_central_fault and faults.vertically_fault_free
    if kind == 'u':
        return faults.vertically_fault_free and not faults.has_central_fault
    if kind == 'w':
        return faults.vertically_fault_free
    raise ValueError(f"未知的序列種類: {kind}（可用 {', '.join(EMPIRICAL_KINDS)}）")


def empirical_series(kind: str, k: int, n: int, cap: int = DEFAULT_TILING_CAP) -> BiPoly:
    """2k×n 鋪法中符合條件者的加權和

    h: 有中央斷層；v: 有中央斷層且無垂直斷層；
    u: 無垂直斷層且無中央斷層；w: 無垂直斷層
    """
    if kind not in EMPIRICAL_KINDS:
        raise ValueError(f"未知的序列種類: {kind}（可用 {', '.join(EMPIRICAL_KINDS)}）")
    acc: Dict[Tuple[int, int], int] = {}
    for tiling in enumerate_tilings(2 * k, n, k, cap):
        if _empirical_filter(kind, fault_predicates(tiling)):
            key = (tiling.vertical_count, tiling.horizontal_count)
            acc[key] = acc.get(key, 0) + 1
    return BiPoly(acc)


def ar_structure_holds(tiling: Tiling, k: int) -> bool:
    """所有直磚是否都落在某 k 個連續的列之內"""
    rows = [bar.row for bar in tiling.bars if bar.dir == 'V']
    if not rows:
        return True
    return max(rows) == min(rows)


# ---------------------------------------------------------------------------
# 判準與公式
# ---------------------------------------------------------------------------

def _representations(total: int, k1: int, k2: int) -> int:
    """total = u·k1 + v·k2（u,v > 0）的表示法數"""
    count = 0
    u = 1
    while u * k1 < total:
        rest = total - u * k1
        if rest % k2 == 0:
            count += 1
        u += 1
    return count


def graham_fault_free_exists(m: int, n: int, k1: int, k2: int) -> bool:
    """Graham 判準：m×n 是否存在以 k1×k2 磚（兩種方向）的無斷層鋪法

    前提 gcd(k1,k2)=1 且 mn > k1k2。
    """
    if k1 < 1 or k2 < 1 or m < 1 or n < 1:
        raise PreconditionViolated(f"需要正整數: m={m}, n={n}, k1={k1}, k2={k2}")
    if gcd(k1, k2) != 1 or m * n <= k1 * k2:
        raise PreconditionViolated(f"需要 gcd(k1,k2)=1 且 mn > k1k2: m={m}, n={n}, k1={k1}, k2={k2}")
    divides = all(m % t == 0 or n % t == 0 for t in (k1, k2))
    two_ways = all(_representations(side, k1, k2) >= 2 for side in (m, n))
    not_six = {k1, k2} != {1, 2} or (m, n) != (6, 6)
    return divides and two_ways and not_six


def fault_free_exists_bruteforce(m: int, n: int, k1: int, k2: int, cap: int = DEFAULT_TILING_CAP) -> bool:
    """窮舉 k1×k2 磚的所有鋪法，檢查是否有無斷層者"""
    shapes = sorted({(k1, k2), (k2, k1)})
    seen = 0
    for placement in _rectangle_tilings(m, n, shapes):
        seen += 1
        if seen > cap:
            raise CapacityExceeded(f"{m}×{n} 的鋪法超過 {cap} 個")
        vertical, horizontal = _faults(m, n, placement)
        if not vertical and not horizontal:
            return True
    return False


def ar_narrow_count(m: int, ell: int, k: int) -> int:
    """k ≤ m < 2k 時 m×kℓ 的鋪法數 Σ_j (m−k+1)^j C(kj+ℓ−j, ℓ−j)"""
    if m < k or m >= 2 * k:
        raise RangeViolation(f"需要 k ≤ m < 2k: m={m}, k={k}")
    if ell < 0:
        raise RangeViolation(f"ℓ 必須為非負整數: {ell}")
    return sum((m - k + 1) ** j * binom(k * j + ell - j, ell - j) for j in range(ell + 1))
