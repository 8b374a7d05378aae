import random
from math import comb

import pytest
from hypothesis import given, strategies as st

from bartiler.combinatorics import f_poly, s_histogram
from bartiler.errors import MalformedPartition, NotASC, OddTarget, SizeMismatch
from bartiler.poly_core import Substitution, XPoly, substitute
from bartiler.symfunc import (
    Partition,
    asc_one_k,
    denominator_from_srht,
    e_mu,
    elementary_symmetric,
    enumerate_asc,
    enumerate_partitions,
    frob_condition,
    from_frobenius,
    inverse_kostka,
    inverse_kostka_row,
    pairwise_products,
    partition_basics,
    plethysm_e_coeffs,
    plethysm_e_expansion,
    ribbon_sign,
    schur_dual_jacobi_trudi,
    srht_enumerate,
)


@st.composite
def partitions(draw, max_size=12):
    n = draw(st.integers(0, max_size))
    parts = []
    remaining = n
    while remaining:
        part = draw(st.integers(1, min(remaining, parts[-1] if parts else remaining)))
        parts.append(part)
        remaining -= part
    return Partition(tuple(parts))


def distinct_partition_counts(top):
    counts = [1] + [0] * top
    for part in range(1, top + 1):
        for total in range(top, part - 1, -1):
            counts[total] += counts[total - part]
    return counts


# 分割

def test_partition_basics_example():
    info = partition_basics((7, 6, 4, 2, 2, 1))
    assert info.conjugate.parts == (6, 5, 3, 3, 2, 2, 1)
    assert info.rank == 3
    assert info.frobenius.arms == (6, 4, 1)
    assert info.frobenius.legs == (5, 3, 0)
    assert info.is_asc
    assert not info.is_threshold
    assert str(info.frobenius) == "(6,4,1 | 5,3,0)"


@pytest.mark.parametrize("lam, asc, threshold", [
    ((1,), False, False),
    ((2,), True, False),
    ((1, 1), False, True),
    ((), True, True),
    ((3, 3), True, False),
])
def test_asc_and_threshold_flags(lam, asc, threshold):
    info = partition_basics(lam)
    assert info.is_asc == asc
    assert info.is_threshold == threshold


@pytest.mark.parametrize("parts", [(1, 2), (0,), (-1,), (2, 0, 1)])
def test_malformed_partition(parts):
    with pytest.raises(MalformedPartition):
        Partition(parts)


@given(partitions())
def test_conjugate_involution_and_threshold_duality(lam):
    conj = lam.conjugate()
    assert conj.conjugate() == lam
    assert conj.size == lam.size
    assert conj.rank == lam.rank
    assert lam.is_threshold == conj.is_asc


@given(partitions())
def test_frobenius_round_trip(lam):
    coords = lam.frobenius()
    assert from_frobenius(coords.arms, coords.legs) == lam


def test_enumerate_partitions_counts():
    assert [sum(1 for _ in enumerate_partitions(n)) for n in range(8)] == [1, 1, 2, 3, 5, 7, 11, 15]
    assert [lam.parts for lam in enumerate_partitions(3)] == [(3,), (2, 1), (1, 1, 1)]


# ASC

def test_enumerate_asc_small():
    assert [lam.parts for lam in enumerate_asc(2)] == [(2,)]
    assert {lam.parts for lam in enumerate_asc(6)} == {(4, 1, 1), (3, 3)}
    assert [lam.parts for lam in enumerate_asc(0)] == [()]


def test_enumerate_asc_counts():
    counts = distinct_partition_counts(12)
    for N in range(13):
        asc = enumerate_asc(2 * N)
        assert len(asc) == counts[N]
        assert all(lam.is_asc and lam.size == 2 * N for lam in asc)


def test_enumerate_asc_odd_target():
    with pytest.raises(OddTarget):
        enumerate_asc(5)


# Ribbon 與 SRHT

def test_ribbon_sign_example():
    assert ribbon_sign((7, 5, 3, 1), (4, 2)) == -1
    assert ribbon_sign((3,), ()) == 1
    assert ribbon_sign((1, 1), ()) == -1


@pytest.mark.parametrize("outer, inner", [
    ((2, 2), ()),
    ((2, 1), (1,)),
    ((2, 1), (2, 1)),
    ((1,), (2,)),
])
def test_ribbon_sign_rejects_non_ribbons(outer, inner):
    with pytest.raises(MalformedPartition):
        ribbon_sign(outer, inner)


def test_srht_single_cell():
    (dec,) = srht_enumerate((1,), (1,))
    assert dec.sign == 1
    assert dec.sizes == (1,)


def test_srht_size_mismatch():
    with pytest.raises(SizeMismatch):
        srht_enumerate((2, 1), (2,))


def test_srht_decomposition_covers_partition():
    lam = Partition((4, 3, 1))
    for dec in srht_enumerate(lam, (4, 3, 1)) + srht_enumerate(lam, (5, 2, 1)):
        cells = set()
        for ribbon in dec.ribbons:
            assert not cells & ribbon.cells
            cells |= ribbon.cells
        assert cells == lam.cells()


@pytest.mark.parametrize("lam, mu, expected", [
    ((1, 1, 1), (1, 1, 1), 1),
    ((1, 1), (2,), -1),
    ((2,), (2,), 1),
    ((2,), (1, 1), 0),
    ((1, 1), (1, 1), 1),
])
def test_inverse_kostka_small(lam, mu, expected):
    assert inverse_kostka(mu, lam) == expected


@pytest.mark.parametrize("size", range(1, 6))
def test_inverse_kostka_numerically(size):
    rng = random.Random(size)
    for lam in enumerate_partitions(size):
        row = inverse_kostka_row(lam)
        for _ in range(4):
            gamma = [rng.randint(-4, 4) for _ in range(size)]
            e = elementary_symmetric(gamma)
            expected = schur_dual_jacobi_trudi(lam.conjugate(), gamma)
            assert sum(c * e_mu(mu, e) for mu, c in row.items()) == expected


# Frobenius 條件

@pytest.mark.parametrize("k, expected", [(2, False), (3, False), (4, True), (5, True), (6, True), (7, False)])
def test_frob_condition_hook(k, expected):
    assert frob_condition((4, 1, 1), k) == expected


def test_frob_condition_rejects_non_asc():
    with pytest.raises(NotASC):
        frob_condition((1,), 3)


def test_srht_for_hook_shape():
    (dec,) = srht_enumerate((4, 1, 1), (4, 1, 1))
    assert dec.sign == 1
    assert srht_enumerate((4, 1, 1), (3, 1, 1, 1)) == []


@pytest.mark.parametrize("size", range(0, 13, 2))
def test_srht_uniqueness_and_frobenius(size):
    for lam in enumerate_asc(size):
        for k in range(2, 6):
            for q in range(size // k + 1):
                mu = (k,) * q + (1,) * (size - k * q)
                found = len(srht_enumerate(lam, mu))
                assert found <= 1
                if q != lam.rank:
                    assert found == 0
            if k * lam.rank <= size:
                mu = (k,) * lam.rank + (1,) * (size - k * lam.rank)
                nonempty = bool(srht_enumerate(lam, mu))
            else:
                nonempty = False
            assert nonempty == frob_condition(lam, k)


def test_asc_one_k_example():
    assert [lam.parts for lam in asc_one_k(6, 3)] == [(3, 3)]
    assert [lam.parts for lam in asc_one_k(6, 4)] == [(4, 1, 1)]


@pytest.mark.parametrize("k", range(2, 6))
def test_asc_one_k_matches_s_histogram(k):
    histogram = s_histogram(k - 1)
    for s in range(comb(k, 2) + 1):
        assert len(asc_one_k(2 * s, k)) == histogram.get(s, 0)


# plethysm

def test_plethysm_small():
    assert plethysm_e_coeffs(0, 3) == {(): 1}
    assert plethysm_e_coeffs(1, 2) == {(2,): 1}


def test_e2_of_e2_is_single_threshold_schur():
    (shape,) = [lam.conjugate() for lam in enumerate_asc(4)]
    assert shape.parts == (2, 1, 1)


@pytest.mark.parametrize("s", range(0, 5))
def test_threshold_schur_expansion(s):
    rng = random.Random(100 + s)
    shapes = [lam.conjugate() for lam in enumerate_asc(2 * s)]
    for _ in range(4):
        gamma = [rng.randint(-5, 5) for _ in range(4)]
        pairs = pairwise_products(gamma)
        lhs = elementary_symmetric(pairs)[s]
        assert lhs == sum(schur_dual_jacobi_trudi(shape, gamma) for shape in shapes)


@pytest.mark.parametrize("k", [3, 4])
def test_plethysm_expansion_numerically(k):
    rng = random.Random(k)
    for s in range(comb(k, 2) + 1):
        expansion = plethysm_e_expansion(s, max_part=k)
        for _ in range(3):
            gamma = [rng.randint(-5, 5) for _ in range(k)]
            e = elementary_symmetric(gamma)
            lhs = elementary_symmetric(pairwise_products(gamma))[s]
            assert lhs == sum(c * e_mu(mu, e) for mu, c in expansion.items())


# Hadamard 分母

def test_denominator_from_srht_k2():
    assert denominator_from_srht(2) == XPoly.from_terms({(0, 0, 0): 1, (1, 0, 1): 1})


@pytest.mark.parametrize("k", range(2, 5))
def test_denominator_from_srht(k):
    assert denominator_from_srht(k) == substitute(f_poly(k - 1), Substitution.b_power(1, sign=-1))


@pytest.mark.slow
@pytest.mark.parametrize("k", [5, 6])
def test_denominator_from_srht_large(k):
    assert denominator_from_srht(k) == substitute(f_poly(k - 1), Substitution.b_power(1, sign=-1))


# 數值工具

def test_elementary_symmetric():
    assert elementary_symmetric([1, 2, 3]) == [1, 6, 11, 6]
    assert elementary_symmetric([]) == [1]


def test_schur_dual_jacobi_trudi():
    assert schur_dual_jacobi_trudi((1, 1), [1, 2, 3]) == 11
    assert schur_dual_jacobi_trudi((2,), [1, 2, 3]) == 25
    assert schur_dual_jacobi_trudi((), [1, 2, 3]) == 1
