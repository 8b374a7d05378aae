import logging
import re
import textwrap
from pathlib import Path

import pytest

from bartiler.config_helper import CAPACITY_ENV, DEFAULT_SEED, BarTilerConfig
from bartiler.errors import ConfigError
from bartiler.tiling_oracle import DEFAULT_STATE_CAPACITY, DEFAULT_TILING_CAP


def write_ini(tmp_path, text):
    path = tmp_path / 'config.ini'
    path.write_text(text, encoding='utf-8')
    return str(path)


def test_missing_file_uses_defaults(tmp_path):
    config = BarTilerConfig(str(tmp_path / 'missing.ini'), environ={})
    assert config.state_capacity == DEFAULT_STATE_CAPACITY
    assert config.tiling_cap == DEFAULT_TILING_CAP
    assert config.threads == 1
    assert config.seed == DEFAULT_SEED
    assert config.level == 'quick'
    assert config.log_level() == logging.WARNING
    assert config.log_level('INFO') == logging.INFO


def test_reads_sections(tmp_path):
    path = write_ini(tmp_path, """
[ORACLE]
state_capacity = 4096
threads = 3

[VERIFY]
seed = 7
level = FULL
trials = 2

[LOGGING]
level = debug
""")
    config = BarTilerConfig(path, environ={})
    assert config.state_capacity == 4096
    assert config.threads == 3
    assert config.seed == 7
    assert config.trials == 2
    assert config.level == 'full'
    assert config.log_level() == logging.DEBUG


def test_environment_overrides_capacity(tmp_path):
    path = write_ini(tmp_path, "[ORACLE]\nstate_capacity = 4096\n")
    config = BarTilerConfig(path, environ={CAPACITY_ENV: '128'})
    assert config.state_capacity == 128
    assert config.resolve_capacity() == 128
    assert config.resolve_capacity(64) == 64


@pytest.mark.parametrize("text, attribute", [
    ("[ORACLE]\nstate_capacity = lots\n", 'state_capacity'),
    ("[ORACLE]\nthreads = 0\n", 'threads'),
    ("[VERIFY]\nlevel = thorough\n", 'level'),
])
def test_invalid_values(tmp_path, text, attribute):
    config = BarTilerConfig(write_ini(tmp_path, text), environ={})
    with pytest.raises(ConfigError):
        getattr(config, attribute)


def test_invalid_log_level(tmp_path):
    config = BarTilerConfig(write_ini(tmp_path, "[LOGGING]\nlevel = LOUD\n"), environ={})
    with pytest.raises(ConfigError):
        config.log_level()


def test_invalid_environment_and_override(tmp_path):
    config = BarTilerConfig(str(tmp_path / 'missing.ini'), environ={CAPACITY_ENV: '-5'})
    with pytest.raises(ConfigError):
        config.state_capacity
    with pytest.raises(ConfigError):
        BarTilerConfig(str(tmp_path / 'missing.ini'), environ={}).resolve_capacity(0)


def test_documented_snippets_parse(tmp_path):
    guide = Path(__file__).resolve().parents[1] / '使用者設定指南.md'
    blocks = re.findall(r"```ini\n(.*?)```", guide.read_text(encoding='utf-8'), re.S)
    assert len(blocks) == 3
    config = BarTilerConfig(write_ini(tmp_path, '\n'.join(textwrap.dedent(b) for b in blocks)), environ={})
    assert config.state_capacity == 16777216
    assert config.tiling_cap == 10000000
    assert config.threads == 1
    assert config.seed == 20140101
    assert config.level == 'quick'
    assert config.trials == 5
    assert config.log_level() == logging.WARNING


def test_shipped_config_parses():
    config = BarTilerConfig(str(Path(__file__).resolve().parents[1] / 'config.ini'), environ={})
    assert config.state_capacity == DEFAULT_STATE_CAPACITY
    assert config.level == 'quick'


def test_trailing_comment_is_part_of_value(tmp_path):
    config = BarTilerConfig(write_ini(tmp_path, "[ORACLE]\nthreads = 2   # 兩個\n"), environ={})
    with pytest.raises(ConfigError):
        config.threads
