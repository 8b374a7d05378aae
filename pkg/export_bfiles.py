"""
輸出 OEIS b-file
執行此腳本將為 k=2..10 各產生一個 b<序號>.txt
"""
import argparse
import logging
import sys

from bartiler.oeis_bfiles import OEIS_IDS, export_bfiles


def main():
    """主程式：輸出 b-file"""
    parser = argparse.ArgumentParser(description='輸出 F_k(x;1,1) 係數的 OEIS b-file')
    parser.add_argument('--out', default='bfiles', help='輸出資料夾（預設 bfiles）')
    parser.add_argument('--max', type=int, default=1000, help='最大索引 n（預設 1000）')
    parser.add_argument('--k', type=int, action='append', choices=sorted(OEIS_IDS),
                        help='只輸出指定的 k，可重複指定')
    args = parser.parse_args()

    logging.basicConfig(level=logging.INFO, format='%(asctime)s - %(levelname)s - %(message)s')
    success = export_bfiles(args.out, max_n=args.max, ks=args.k)
    sys.exit(0 if success else 1)


if __name__ == '__main__':
    main()
