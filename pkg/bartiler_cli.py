"""
bartiler - 命令列啟動腳本
在根目錄提供一個簡單的入口點來執行命令列工具
"""
import sys

from bartiler.cli import main

if __name__ == '__main__':
    sys.exit(main())
