"""
bartiler 驗證工具 - GUI 啟動腳本
在根目錄提供一個簡單的入口點來啟動 GUI
"""
from bartiler.verify_gui import main

if __name__ == '__main__':
    main()
