from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from bartiler.combinatorics import (
    OddComposition,
    TCompComposition,
    c_closed,
    canonical_form,
    enumerate_oc,
    f_poly,
    is_palpha_set,
    oc_count_by_parts,
    oc_leq_count,
    palpha,
    s_histogram,
    s_stat,
    sigma,
    sigma_word,
    slide_canonical_reference,
    tcomp_enumerate,
)
from bartiler.errors import NotOddComposition, OutOfRange, SumExceedsN
from bartiler.poly_core import XPoly
from bartiler.verify_suites import F_AT_ONE


@st.composite
def odd_compositions(draw, max_n=12):
    """總和不超過 N 的奇數組合"""
    N = draw(st.integers(1, max_n))
    parts = []
    remaining = N
    while remaining and draw(st.booleans()):
        part = draw(st.integers(0, (remaining - 1) // 2)) * 2 + 1
        parts.append(part)
        remaining -= part
    return N, tuple(parts)


def compositions(n):
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in compositions(n - first):
            yield (first,) + rest


# σ_N

@pytest.mark.parametrize("N, word", [
    (7, (7, 1, 6, 2, 5, 3, 4)),
    (6, (6, 1, 5, 2, 4, 3)),
    (1, (1,)),
])
def test_sigma_word(N, word):
    assert sigma_word(N) == word


def test_sigma_is_permutation():
    for N in range(1, 15):
        assert sorted(sigma_word(N)) == list(range(1, N + 1))


def test_sigma_out_of_range():
    with pytest.raises(OutOfRange):
        sigma(3, 4)
    with pytest.raises(OutOfRange):
        sigma(3, 0)


# 奇數組合

def test_odd_composition_validation():
    with pytest.raises(NotOddComposition):
        OddComposition((2,), 4)
    with pytest.raises(NotOddComposition):
        OddComposition((1, -1), 4)
    with pytest.raises(SumExceedsN):
        OddComposition((3, 3), 4)
    assert OddComposition((), 1).length == 0


def test_enumerate_oc_small():
    assert [oc.parts for oc in enumerate_oc(3)] == [(), (1,), (1, 1), (1, 1, 1), (3,)]


def test_enumerate_oc_prefix_first():
    seen = set()
    for oc in enumerate_oc(7):
        if oc.parts:
            assert oc.parts[:-1] in seen
        seen.add(oc.parts)


@pytest.mark.parametrize("N", range(1, 16))
def test_enumerate_oc_count_is_fibonacci(N):
    fib = [1, 1]
    while len(fib) < N + 3:
        fib.append(fib[-1] + fib[-2])
    assert len(enumerate_oc(N)) == fib[N + 1]


@pytest.mark.parametrize("N, alpha, expected", [
    (6, (1, 3, 1), 12),
    (15, (1, 3, 5, 3, 1), 43),
    (5, (), 0),
])
def test_s_stat_examples(N, alpha, expected):
    assert s_stat(N, alpha) == expected


def test_palpha_example():
    assert palpha(15, (1, 3, 5, 3, 1)) == frozenset({15, 2, 11, 6, 9})


# 標準形

@pytest.mark.parametrize("N, alpha, expected", [
    (15, (1, 3, 5, 3, 1), (1, 1, 1, 1, 5)),
    (4, (1,), (1,)),
    (4, (3, 1), (1, 1)),
    (5, (), ()),
])
def test_canonical_form_examples(N, alpha, expected):
    assert canonical_form(N, alpha).parts == expected


@given(odd_compositions())
def test_canonical_form_preserves_statistics(case):
    N, alpha = case
    canon = canonical_form(N, alpha)
    assert canon.length == len(alpha)
    assert s_stat(N, canon) == s_stat(N, alpha)
    assert all(p == 1 for p in canon.parts[:-1])


@pytest.mark.parametrize("N", range(1, 9))
def test_canonical_form_matches_sliding(N):
    for oc in enumerate_oc(N):
        assert canonical_form(N, oc) == slide_canonical_reference(N, oc)


# c_s(N) 與 f_N

@pytest.mark.parametrize("s, N, expected", [
    (0, 3, 1),
    (5, 4, -2),
    (1, 2, 0),
    (2, 2, -1),
    (3, 2, -1),
])
def test_c_closed_examples(s, N, expected):
    assert c_closed(s, N) == expected


def test_c_closed_range():
    with pytest.raises(OutOfRange):
        c_closed(7, 3)
    with pytest.raises(OutOfRange):
        c_closed(-1, 3)


def test_f_poly_small():
    assert f_poly(1) == XPoly.from_terms({(0, 0, 0): 1, (1, 0, 1): -1})
    assert f_poly(2) == XPoly.from_terms({(0, 0, 0): 1, (2, 1, 1): -1, (3, 0, 2): -1})


@pytest.mark.parametrize("N", range(1, 9))
def test_f_poly_dual_route(N):
    assert f_poly(N, 'closed') == f_poly(N, 'combinatorial')


@pytest.mark.slow
@pytest.mark.parametrize("N", range(9, 13))
def test_f_poly_dual_route_large(N):
    assert f_poly(N, 'closed') == f_poly(N, 'combinatorial')


@pytest.mark.parametrize("N, row", sorted(F_AT_ONE.items()))
def test_f_poly_at_one_table(N, row):
    assert tuple(f_poly(N).evaluate(1, 1)) == tuple(row)


@pytest.mark.parametrize("N", range(1, 10))
def test_f_poly_degree_and_no_cancellation(N):
    p = f_poly(N)
    assert p.degree == N * (N + 1) // 2
    histogram = s_histogram(N)
    for s, c in enumerate(p.evaluate(1, 1)):
        assert abs(c) == histogram.get(s, 0)


@pytest.mark.parametrize("N", range(1, 9))
def test_f_poly_length_matches_b_exponent(N):
    for oc in enumerate_oc(N):
        s = s_stat(N, oc)
        assert (2 * s) // (N + 1) == oc.length


def test_f_poly_unknown_mode():
    with pytest.raises(ValueError):
        f_poly(3, 'magic')


# 計數

@pytest.mark.parametrize("n, k, expected", [
    (5, 3, 3),
    (4, 3, 0),
    (0, 0, 1),
    (3, 0, 0),
])
def test_oc_count_by_parts(n, k, expected):
    assert oc_count_by_parts(n, k) == expected


def test_oc_counts_match_enumeration():
    for n in range(1, 11):
        ocs = enumerate_oc(n)
        for k in range(0, n + 1):
            exact = sum(1 for oc in ocs if oc.length == k and oc.total == n)
            at_most = sum(1 for oc in ocs if oc.length == k)
            assert oc_count_by_parts(n, k) == exact
            assert oc_leq_count(n, k) == at_most


def test_oc_leq_count_example():
    assert oc_leq_count(4, 2) == 3


# P_α

def test_is_palpha_set_accepts_images():
    assert is_palpha_set({15, 2, 11, 6, 9}, 15)
    assert not is_palpha_set(set(), 4)
    assert not is_palpha_set({5}, 4)


@pytest.mark.parametrize("N", range(1, 8))
def test_is_palpha_set_exhaustive(N):
    images = {palpha(N, oc) for oc in enumerate_oc(N) if oc.parts}
    for size in range(1, N + 1):
        for subset in combinations(range(1, N + 1), size):
            assert is_palpha_set(subset, N) == (frozenset(subset) in images)


# TComp

def test_tcomp_enumerate_matches_brute_force():
    for k in range(2, 6):
        for N in range(0, 11):
            expected = [c for c in compositions(N)
                        if all(p <= k - 1 for p in c) and all(x + y >= k for x, y in zip(c, c[1:]))]
            assert [t.parts for t in tcomp_enumerate(N, k)] == sorted(expected)


def test_tcomp_edges():
    assert [t.parts for t in tcomp_enumerate(0, 3)] == [()]
    assert [t.parts for t in tcomp_enumerate(1, 3)] == [(1,)]
    assert [t.parts for t in tcomp_enumerate(5, 2)] == [(1, 1, 1, 1, 1)]
    with pytest.raises(OutOfRange):
        TCompComposition((1, 1), 3)
