"""
設定檔讀取工具模組
從 config.ini 讀取 oracle 容量、驗證參數與日誌等級
"""
import configparser
import logging
import os
from typing import Optional

from .errors import ConfigError
from .tiling_oracle import DEFAULT_STATE_CAPACITY, DEFAULT_TILING_CAP

logger = logging.getLogger(__name__)

DEFAULT_SEED = 20140101
DEFAULT_TRIALS = 5
VERIFY_LEVELS = ('quick', 'full')
LOG_LEVELS = ('DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL')
CAPACITY_ENV = 'BARTILER_CAPACITY'


class BarTilerConfig:
    """設定輔助類別：config.ini → 具型別的設定值"""

    def __init__(self, config_file='config.ini', environ=None):
        """
        初始化設定

        Args:
            config_file: 設定檔路徑；檔案不存在時全部使用預設值
            environ: 環境變數字典（預設為 os.environ）
        """
        self.config_file = config_file
        self.environ = os.environ if environ is None else environ
        self.config = configparser.ConfigParser()
        read = self.config.read(config_file, encoding='utf-8')
        if read:
            logger.debug(f"已讀取設定檔: {config_file}")
        else:
            logger.debug(f"找不到設定檔 {config_file}，使用預設值")

    def _positive_int(self, section: str, key: str, default: int) -> int:
        if section not in self.config or key not in self.config[section]:
            return default
        raw = self.config[section][key].strip()
        try:
            value = int(raw)
        except ValueError:
            raise ConfigError(f"[{section}] {key} 必須是整數，收到 '{raw}'") from None
        if value <= 0:
            raise ConfigError(f"[{section}] {key} 必須是正整數，收到 {value}")
        return value

    @property
    def state_capacity(self) -> int:
        """DP 狀態數上限；環境變數 BARTILER_CAPACITY 優先於設定檔"""
        env = self.environ.get(CAPACITY_ENV)
        if env:
            try:
                value = int(env)
            except ValueError:
                raise ConfigError(f"環境變數 {CAPACITY_ENV} 必須是整數，收到 '{env}'") from None
            if value <= 0:
                raise ConfigError(f"環境變數 {CAPACITY_ENV} 必須是正整數，收到 {value}")
            return value
        return self._positive_int('ORACLE', 'state_capacity', DEFAULT_STATE_CAPACITY)

    @property
    def tiling_cap(self) -> int:
        return self._positive_int('ORACLE', 'tiling_cap', DEFAULT_TILING_CAP)

    @property
    def threads(self) -> int:
        return self._positive_int('ORACLE', 'threads', 1)

    @property
    def seed(self) -> int:
        return self._positive_int('VERIFY', 'seed', DEFAULT_SEED)

    @property
    def trials(self) -> int:
        return self._positive_int('VERIFY', 'trials', DEFAULT_TRIALS)

    @property
    def level(self) -> str:
        value = self.config.get('VERIFY', 'level', fallback='quick').strip().lower()
        if value not in VERIFY_LEVELS:
            raise ConfigError(f"[VERIFY] level 必須是 {' / '.join(VERIFY_LEVELS)}，收到 '{value}'")
        return value

    def log_level(self, default: str = 'WARNING') -> int:
        value = self.config.get('LOGGING', 'level', fallback=default).strip().upper()
        if value not in LOG_LEVELS:
            raise ConfigError(f"[LOGGING] level 必須是 {' / '.join(LOG_LEVELS)}，收到 '{value}'")
        return getattr(logging, value)

    def resolve_capacity(self, override: Optional[int] = None) -> int:
        """命令列參數 > 環境變數 > 設定檔 > 預設值"""
        if override is not None:
            if override <= 0:
                raise ConfigError(f"--capacity 必須是正整數，收到 {override}")
            return override
        return self.state_capacity
