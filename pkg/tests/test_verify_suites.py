import io

import pytest

from bartiler.verify_suites import (
    BIG_COUNT_31_3141,
    SUITE_NAMES,
    SUITES,
    CheckResult,
    VerifyContext,
    run_check,
    run_suite,
)


def test_every_suite_has_checks():
    assert set(SUITES) == set(SUITE_NAMES)
    for checks in SUITES.values():
        assert checks


@pytest.mark.parametrize("suite", ['fn', 'det', 'hadamard', 'srht'])
def test_quick_suites_pass(suite):
    stream = io.StringIO()
    assert run_suite(suite, stream=stream)
    lines = stream.getvalue().splitlines()
    assert len(lines) == len(SUITES[suite])
    assert all(line.startswith(f"PASS {suite}/") for line in lines)


@pytest.mark.slow
def test_quick_oracle_suite_passes():
    stream = io.StringIO()
    assert run_suite('oracle', stream=stream)
    assert "FAIL" not in stream.getvalue()


@pytest.mark.slow
def test_full_level_passes():
    stream = io.StringIO()
    assert run_suite('all', level='full', stream=stream)
    assert "FAIL" not in stream.getvalue()


def test_unknown_suite_and_level():
    with pytest.raises(ValueError):
        run_suite('nope')
    with pytest.raises(ValueError):
        run_suite('fn', level='exhaustive')


def test_run_check_reports_witness_and_exceptions():
    ctx = VerifyContext()
    assert run_check('ok', lambda c: None, ctx) == CheckResult('ok', True, '')
    assert run_check('bad', lambda c: 'n=3', ctx) == CheckResult('bad', False, 'n=3')

    def boom(c):
        raise ZeroDivisionError('division by zero')

    result = run_check('boom', boom, ctx)
    assert not result.passed
    assert result.counterexample.startswith('ZeroDivisionError')


def test_failing_check_is_written(monkeypatch):
    monkeypatch.setitem(SUITES, 'fn', [('always fails', lambda c: 'witness')])
    stream = io.StringIO()
    assert not run_suite('fn', stream=stream)
    assert stream.getvalue() == "FAIL fn/always fails: witness\n"


def test_context_levels():
    quick, full = VerifyContext(), VerifyContext(level='full')
    assert quick.pick(1, 2) == 1
    assert full.pick(1, 2) == 2
    assert quick.rng(3).random() == VerifyContext().rng(3).random()


def test_big_count_constant_shape():
    assert BIG_COUNT_31_3141.isdigit()
    assert len(BIG_COUNT_31_3141) == 250
