from math import comb

import pytest

from bartiler import verify_suites
from bartiler.combinatorics import f_poly
from bartiler.errors import OutOfRange
from bartiler.gf_engine import (
    C_rational,
    F_from_faults,
    F_main,
    H_rational,
    PolyMatrix,
    U_rational,
    V_rational,
    adjugate,
    big_count,
    build_A,
    build_M,
    coprime_spot_check,
    det_poly,
    hadamard_rational,
    independent_monomials,
    phi,
    phi_by_recursion,
    phi_multilinear,
    tcomp_series,
    transfer_matrix_parts,
)
from bartiler.poly_core import (
    A,
    B,
    ONE,
    X,
    BiPoly,
    Substitution,
    XPoly,
    XSeries,
    hadamard_product,
    reciprocal_one_minus,
    series_invert,
    substitute,
)
from bartiler.tiling_oracle import count_tilings, empirical_series
from bartiler.verify_suites import (
    BIG_COUNT_31_3141,
    F3_SERIES_AT_ONE,
    REDUCED_F2_DEN,
    REDUCED_F2_NUM,
    REDUCED_F2_SERIES,
    KNOWN_F3_DEN,
    KNOWN_F3_NUM,
    VerifyContext,
    _hadamard_numerator,
)


def at_a1_bk(p, k):
    return substitute(substitute(p, Substitution.a_to_one()), Substitution.b_power(k))


def bx(db, dx):
    return XPoly.from_terms({(dx, 0, db): 1})


# 轉移矩陣

def test_build_A_shape():
    zero = XPoly()
    assert build_A(2).rows == ((bx(2, 1),),)
    assert build_A(3).rows == ((zero, bx(3, 2)), (bx(3, 1), bx(3, 2)))
    assert build_A(4).size == 3
    with pytest.raises(OutOfRange):
        build_A(1)


def test_det_small_cases():
    assert det_poly(PolyMatrix.identity(1) - build_A(2)) == ONE - B ** 2 * X
    assert det_poly(PolyMatrix.identity(2) - build_A(3)) == ONE - B ** 3 * X ** 2 - B ** 6 * X ** 3


@pytest.mark.parametrize("k", range(2, 8))
def test_det_equals_f_at_a1_bk(k):
    matrix = build_A(k)
    assert det_poly(PolyMatrix.identity(k - 1) - matrix) == at_a1_bk(f_poly(k - 1), k)


def test_adjugate_times_matrix_is_determinant():
    matrix = PolyMatrix.identity(3) - build_A(4)
    adj = adjugate(matrix)
    det = det_poly(matrix)
    for i in range(3):
        for j in range(3):
            entry = sum((adj.entry(i, t) * matrix.entry(t, j) for t in range(3)), XPoly())
            assert entry == (det if i == j else XPoly())


def test_poly_matrix_must_be_square():
    with pytest.raises(ValueError):
        PolyMatrix(((XPoly(), XPoly()),))


# φ_r

def test_phi_three_variables():
    expected = {
        frozenset(): 1,
        frozenset({2}): -1,
        frozenset({3}): -1,
        frozenset({1, 3}): -1,
        frozenset({1, 2, 3}): 1,
    }
    assert phi_multilinear(3) == expected
    assert phi_by_recursion(3) == expected
    values = independent_monomials(3)
    assert det_poly(PolyMatrix.identity(3) - build_M(3, values)) == 1 - B ** 2 - B ** 4 - B ** 5 + B ** 7


def test_phi_one_variable():
    assert phi_multilinear(1) == {frozenset(): 1, frozenset({1}): -1}
    assert phi(1, [X]) == ONE - X


@pytest.mark.parametrize("r", range(1, 9))
def test_phi_recursion_matches_definition(r):
    assert phi_by_recursion(r) == phi_multilinear(r)


@pytest.mark.parametrize("r", range(1, 7))
def test_determinant_identity(r):
    values = independent_monomials(r)
    assert det_poly(PolyMatrix.identity(r) - build_M(r, values)) == phi(r, values)


@pytest.mark.parametrize("k", range(2, 7))
def test_phi_specialises_to_f(k):
    values = [bx(k, i) for i in range(1, k)]
    assert phi(k - 1, values) == at_a1_bk(f_poly(k - 1), k)


def test_phi_rejects_wrong_arity():
    with pytest.raises(ValueError):
        phi(3, [X])
    with pytest.raises(ValueError):
        build_M(2, [X])


# C(x) 與互質性

@pytest.mark.parametrize("k", range(2, 5))
def test_transfer_matrix_matches_tcomp(k):
    assert C_rational(k).series(12) == tcomp_series(k, 12)


def test_transfer_parts_k2():
    parts = transfer_matrix_parts(2)
    assert parts.Q == ONE - B ** 2 * X
    assert parts.P == B ** 4 * X ** 2


@pytest.mark.parametrize("k", range(2, 5))
def test_coprime_spot_check(k):
    assert coprime_spot_check(k, trials=10, seed=k)


# V_k、U_k

@pytest.mark.parametrize("k", [2, 3])
def test_V_series_head(k):
    series = V_rational(k).series(k)
    assert series.coeff(1) == A ** 2
    for n in range(2, k):
        assert not series.coeff(n)
    assert series.coeff(k) == 2 * A ** k * B ** k + B ** (2 * k)


@pytest.mark.parametrize("k, top", [(2, 6), (3, 6)])
def test_V_and_U_match_census(k, top):
    v_series = V_rational(k).series(top)
    u_series = U_rational(k).series(top)
    for n in range(1, top + 1):
        assert v_series.coeff(n) == empirical_series('v', k, n)
        assert u_series.coeff(n) == empirical_series('u', k, n)


@pytest.mark.parametrize("k", [2, 3, 4])
def test_U_coefficients(k):
    series = U_rational(k).series(4 * k)
    for n in range(4 * k + 1):
        if n == 0 or n % k:
            assert not series.coeff(n)
            continue
        ell = n // k
        expected = (k - 1) * comb(k + ell - 3, ell - 1) * A ** k * B ** ((2 * ell - 1) * k)
        assert series.coeff(n) == expected


def test_U_k2_closed_form():
    assert U_rational(2).series(6).coeffs == (
        BiPoly(), BiPoly(), A ** 2 * B ** 2, BiPoly(), A ** 2 * B ** 6, BiPoly(), A ** 2 * B ** 10,
    )


# Hadamard

def test_hadamard_rational_n2():
    gf = hadamard_rational(2)
    assert gf.num == ONE - B * X
    assert gf.den == (ONE - (A ** 2 + 2 * B) * X + B ** 2 * X ** 2) * (ONE + B * X)


@pytest.mark.parametrize("N", [2, 3])
def test_hadamard_rational_matches_termwise_product(N):
    base = series_invert(ONE - A * X - B * X ** N, 15)
    assert hadamard_rational(N).series(15) == hadamard_product(base, base)


@pytest.mark.slow
@pytest.mark.parametrize("N", [4, 5])
def test_hadamard_rational_matches_termwise_product_large(N):
    base = series_invert(ONE - A * X - B * X ** N, 30)
    assert hadamard_rational(N).series(30) == hadamard_product(base, base)


@pytest.mark.parametrize("N", [2, 3, 4])
def test_V_denominator_is_f_at_b_power(N):
    assert V_rational(N).den == substitute(f_poly(N - 1), Substitution.b_power(N))


@pytest.mark.parametrize("N", [2, 3, 4])
def test_one_minus_inverse_hadamard_has_denominator_f(N):
    order = 16
    base = series_invert(ONE - A * X - B * X ** N, order)
    termwise = hadamard_product(base, base)
    j_series = XSeries(order, [ONE]) - series_invert(XPoly(termwise.coeffs), order)
    product = j_series * f_poly(N - 1)
    top = N + comb(N, 2)
    assert product.coeff(top)
    assert all(not product.coeff(n) for n in range(top + 1, order + 1))


def test_hadamard_numerator_check_rejects_wrong_f(monkeypatch):
    ctx = VerifyContext()
    assert _hadamard_numerator(ctx) is None

    def wrong_f(N, mode='closed'):
        return ONE - X ** (N * (N + 1) // 2)

    monkeypatch.setattr(verify_suites, 'f_poly', wrong_f)
    assert _hadamard_numerator(ctx) is not None


def test_hadamard_fibonacci_squares():
    assert hadamard_rational(2).series(5).evaluate(1, 1) == [1, 1, 4, 9, 25, 64]


@pytest.mark.parametrize("k", [2, 3])
def test_H_is_one_over_one_minus_V(k):
    assert reciprocal_one_minus(V_rational(k)).series(12) == H_rational(k).series(12)


@pytest.mark.parametrize("k", [2, 3])
def test_H_counts_central_fault_tilings(k):
    series = H_rational(k).series(5)
    for n in range(1, 6):
        assert series.coeff(n) == empirical_series('h', k, n)


# F_k

def test_F2_known_form():
    gf = F_main(2)
    assert gf.num * REDUCED_F2_DEN == REDUCED_F2_NUM * gf.den
    common = ONE - B ** 2 * X
    assert gf.num.exact_div(common) == REDUCED_F2_NUM
    assert gf.den.exact_div(common) == REDUCED_F2_DEN
    assert gf.series(4).coeffs == REDUCED_F2_SERIES


def test_F3_known_form():
    gf = F_main(3)
    assert gf.num == KNOWN_F3_NUM
    assert gf.den == KNOWN_F3_DEN
    assert tuple(gf.series(9).evaluate(1, 1)) == F3_SERIES_AT_ONE


def test_F2_x3_coefficient_is_four_by_three_count():
    assert F_main(2).series(3).coeff(3) == count_tilings(4, 3, 2)


@pytest.mark.parametrize("k", range(2, 7))
def test_F_degrees(k):
    gf = F_main(k)
    assert gf.num.degree == 3 * comb(k, 2)
    assert gf.den.degree == 3 * comb(k, 2) + k


@pytest.mark.parametrize("k, top", [(2, 8), (3, 6)])
def test_F_matches_transfer_matrix_dp(k, top):
    series = F_main(k).series(top)
    for n in range(top + 1):
        assert series.coeff(n) == count_tilings(2 * k, n, k)


@pytest.mark.slow
@pytest.mark.parametrize("k, top", [(2, 12), (3, 9), (4, 8)])
def test_F_matches_transfer_matrix_dp_large(k, top):
    series = F_main(k).series(top)
    for n in range(top + 1):
        assert series.coeff(n) == count_tilings(2 * k, n, k)


@pytest.mark.parametrize("k", [2, 3])
def test_fault_route_matches_main_form(k):
    assert F_from_faults(k).series(10) == F_main(k).series(10)


def test_F_main_rejects_small_k():
    with pytest.raises(OutOfRange):
        F_main(1)


# 大數計數

@pytest.mark.parametrize("k, n, expected", [
    (3, 9, 783),
    (2, 4, 36),
    (2, 0, 1),
    (4, 3, 1),
])
def test_big_count_small(k, n, expected):
    assert big_count(k, n) == expected


@pytest.mark.slow
def test_big_count_62_by_3141():
    assert str(big_count(31, 3141)) == BIG_COUNT_31_3141


def test_big_count_rejects_bad_input():
    with pytest.raises(OutOfRange):
        big_count(2, -1)
