"""bartiler 驗證工具 - 圖形化介面
使用 tkinter 和 ttk 執行各驗證套件與 b-file 輸出"""
import tkinter as tk
from tkinter import ttk, messagebox
import threading
import logging
from datetime import datetime

from .config_helper import BarTilerConfig, VERIFY_LEVELS
from .oeis_bfiles import export_bfiles
from .verify_suites import SUITE_NAMES, run_suite

logger = logging.getLogger(__name__)

SUITE_LABELS = {
    'fn': 'f_N 與奇數組合',
    'det': '行列式與 φ_r',
    'hadamard': 'Hadamard 乘積',
    'oracle': '生成函數 vs 窮舉',
    'srht': '對稱函數 / SRHT',
}


class TextHandler(logging.Handler):
    """自訂日誌處理器，將日誌輸出到 Text widget"""
    def __init__(self, text_widget):
        super().__init__()
        self.text_widget = text_widget

    def emit(self, record):
        try:
            msg = self.format(record)
            # 使用 after 確保線程安全
            self.text_widget.after(0, self._append_text, msg)
        except Exception:
            pass

    def _append_text(self, msg):
        self.text_widget.insert(tk.END, msg + '\n')
        self.text_widget.see(tk.END)


class LogWriter:
    """把 run_suite 的 PASS/FAIL 行轉成日誌"""
    def __init__(self, target: logging.Logger):
        self.target = target
        self._buffer = ''

    def write(self, text: str) -> int:
        self._buffer += text
        while '\n' in self._buffer:
            line, self._buffer = self._buffer.split('\n', 1)
            if line.startswith('FAIL'):
                self.target.error(line)
            else:
                self.target.info(line)
        return len(text)

    def flush(self) -> None:
        if self._buffer:
            self.target.info(self._buffer)
            self._buffer = ''


class VerifyGUI:
    """驗證工具主視窗"""
    def __init__(self, root, config_file='config.ini'):
        self.root = root
        self.root.title("bartiler 驗證工具")
        self.root.geometry("820x600")
        self.root.resizable(True, True)
        self.config = BarTilerConfig(config_file)
        self.is_running = False
        self.buttons = []
        self._create_widgets()
        self._setup_logging()

    def _create_widgets(self):
        main_frame = ttk.Frame(self.root, padding="10")
        main_frame.grid(row=0, column=0, sticky="nsew")
        self.root.columnconfigure(0, weight=1)
        self.root.rowconfigure(0, weight=1)
        main_frame.columnconfigure(1, weight=1)
        main_frame.rowconfigure(1, weight=1)

        title_label = ttk.Label(main_frame, text="k×1 長條磚鋪法驗證", font=("Arial", 16, "bold"))
        title_label.grid(row=0, column=0, columnspan=2, pady=(0, 20))

        button_frame = ttk.LabelFrame(main_frame, text="功能選單", padding="10")
        button_frame.grid(row=1, column=0, sticky="nsew", padx=(0, 10))
        button_width = 20

        ttk.Label(button_frame, text="驗證等級").grid(row=0, column=0, sticky="w")
        self.level_var = tk.StringVar(value=self.config.level)
        level_box = ttk.Combobox(button_frame, textvariable=self.level_var, values=VERIFY_LEVELS,
                                 state="readonly", width=button_width - 2)
        level_box.grid(row=1, column=0, pady=(0, 10), sticky="ew")

        row = 2
        for index, suite in enumerate(SUITE_NAMES, start=1):
            label = f"{index}. {SUITE_LABELS[suite]}"
            self._add_button(button_frame, row, label, lambda s=suite, t=label: self._verify(s, t), button_width)
            row += 1
        self._add_button(button_frame, row, f"{len(SUITE_NAMES) + 1}. 全部驗證",
                         lambda: self._verify('all', '全部驗證'), button_width)
        row += 1
        self._add_button(button_frame, row, "輸出 OEIS b-file", self._export_bfiles, button_width)
        row += 1
        btn_clear = ttk.Button(button_frame, text="清除日誌", command=self._clear_log, width=button_width)
        btn_clear.grid(row=row, column=0, pady=5, sticky="ew")

        log_frame = ttk.LabelFrame(main_frame, text="執行日誌", padding="10")
        log_frame.grid(row=1, column=1, sticky="nsew")
        log_frame.columnconfigure(0, weight=1)
        log_frame.rowconfigure(0, weight=1)
        log_text_frame = ttk.Frame(log_frame)
        log_text_frame.grid(row=0, column=0, sticky="nsew")
        log_text_frame.columnconfigure(0, weight=1)
        log_text_frame.rowconfigure(0, weight=1)

        self.log_text = tk.Text(log_text_frame, wrap=tk.WORD, font=("Consolas", 9), bg="#f5f5f5", fg="#333333")
        self.log_text.grid(row=0, column=0, sticky="nsew")
        scrollbar = ttk.Scrollbar(log_text_frame, orient=tk.VERTICAL, command=self.log_text.yview)
        scrollbar.grid(row=0, column=1, sticky="ns")
        self.log_text.configure(yscrollcommand=scrollbar.set)

        self.status_label = ttk.Label(main_frame, text="就緒", relief=tk.SUNKEN, anchor=tk.W)
        self.status_label.grid(row=2, column=0, columnspan=2, sticky="ew", pady=(10, 0))

    def _add_button(self, frame, row, text, command, width):
        button = ttk.Button(frame, text=text, command=command, width=width)
        button.grid(row=row, column=0, pady=5, sticky="ew")
        self.buttons.append(button)

    def _setup_logging(self):
        root_logger = logging.getLogger()
        for handler in root_logger.handlers[:]:
            root_logger.removeHandler(handler)
        formatter = logging.Formatter('%(asctime)s - %(levelname)s - %(message)s')
        text_handler = TextHandler(self.log_text)
        text_handler.setLevel(logging.INFO)
        text_handler.setFormatter(formatter)
        root_logger.setLevel(self.config.log_level('INFO'))
        root_logger.addHandler(text_handler)
        logger.info("=" * 60)
        logger.info("bartiler 驗證工具已啟動")
        logger.info(f"啟動時間: {datetime.now().strftime('%Y-%m-%d %H:%M:%S')}")
        logger.info("=" * 60)

    def _update_status(self, message):
        self.status_label.config(text=message)
        self.root.update_idletasks()

    def _set_buttons_state(self, enabled):
        state = tk.NORMAL if enabled else tk.DISABLED
        for button in self.buttons:
            button.config(state=state)
        self.is_running = not enabled

    def _run_task(self, label, action):
        """在背景執行緒執行 action()（回傳 bool），結束後以訊息框回報"""
        if self.is_running:
            messagebox.showwarning("警告", "已有任務正在執行中，請稍候...")
            return
        self._set_buttons_state(False)
        self._update_status(f"正在執行：{label}...")

        def run():
            try:
                logger.info(f"開始執行：{label}")
                success = action()
                if success:
                    logger.info(f"✓ {label}完成")
                    self.root.after(0, lambda: messagebox.showinfo("完成", f"{label}完成！"))
                else:
                    logger.error(f"✗ {label}失敗")
                    self.root.after(0, lambda: messagebox.showerror("錯誤", f"{label}失敗，請查看日誌"))
            except Exception as e:
                logger.error(f"執行錯誤: {str(e)}")
                import traceback
                logger.error(traceback.format_exc())
                self.root.after(0, lambda: messagebox.showerror("錯誤", f"執行錯誤: {str(e)}"))
            finally:
                self.root.after(0, self._set_buttons_state, True)
                self.root.after(0, lambda: self._update_status("就緒"))

        thread = threading.Thread(target=run, daemon=True)
        thread.start()

    def _verify(self, suite, label):
        level = self.level_var.get()
        config = self.config
        self._run_task(label, lambda: run_suite(
            suite, level=level, seed=config.seed, stream=LogWriter(logger), trials=config.trials,
            capacity=config.state_capacity, threads=config.threads,
        ))

    def _export_bfiles(self):
        self._run_task("輸出 OEIS b-file", lambda: export_bfiles('bfiles', max_n=1000))

    def _clear_log(self):
        self.log_text.delete(1.0, tk.END)
        logger.info("日誌已清除")


def main():
    root = tk.Tk()
    VerifyGUI(root)
    root.mainloop()


if __name__ == '__main__':
    main()
