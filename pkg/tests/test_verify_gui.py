import logging

import pytest

pytest.importorskip("tkinter")

from bartiler.verify_gui import SUITE_LABELS, LogWriter  # noqa: E402
from bartiler.verify_suites import SUITE_NAMES  # noqa: E402


def test_every_suite_has_a_label():
    assert set(SUITE_LABELS) == set(SUITE_NAMES)


def test_log_writer_routes_lines(caplog):
    target = logging.getLogger('bartiler.test_gui')
    writer = LogWriter(target)
    with caplog.at_level(logging.INFO, logger='bartiler.test_gui'):
        writer.write("PASS fn/a\nFAIL fn/b: n=3\npartial")
        assert [(r.levelno, r.getMessage()) for r in caplog.records] == [
            (logging.INFO, "PASS fn/a"),
            (logging.ERROR, "FAIL fn/b: n=3"),
        ]
        writer.flush()
    assert caplog.records[-1].getMessage() == "partial"
