"""
驗證套件
每個套件是一串具名檢查；每項檢查回傳 None（通過）或第一個反例的文字描述。
run_suite 逐項輸出 "PASS 名稱" 或 "FAIL 名稱: 反例"，全部通過才回傳 True。
"""
import logging
import random
import sys
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Callable, Dict, List, Optional, TextIO, Tuple

from .combinatorics import (
    c_closed,
    canonical_form,
    enumerate_oc,
    f_poly,
    is_palpha_set,
    palpha,
    s_histogram,
    s_stat,
    slide_canonical_reference,
)
from .config_helper import DEFAULT_SEED, DEFAULT_TRIALS, VERIFY_LEVELS
from .gf_engine import (
    C_rational,
    F_from_faults,
    F_main,
    H_rational,
    U_rational,
    V_rational,
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
    PolyMatrix,
)
from .poly_core import (
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
from .symfunc import (
    asc_one_k,
    denominator_from_srht,
    e_mu,
    elementary_symmetric,
    enumerate_asc,
    enumerate_partitions,
    frob_condition,
    inverse_kostka_row,
    pairwise_products,
    partition_basics,
    plethysm_e_expansion,
    ribbon_sign,
    schur_dual_jacobi_trudi,
    srht_enumerate,
)
from .tiling_oracle import (
    DEFAULT_STATE_CAPACITY,
    ar_narrow_count,
    ar_structure_holds,
    count_tilings,
    empirical_series,
    enumerate_tilings,
    fault_free_exists_bruteforce,
    fault_predicates,
    graham_fault_free_exists,
    klarner_tileable,
)

logger = logging.getLogger(__name__)

SUITE_NAMES = ('fn', 'det', 'hadamard', 'oracle', 'srht')

# F_2、F_3 的既知形式（F_2 為約去 1−b²x 之後的形式）
REDUCED_F2_NUM = XPoly.from_terms({(0, 0, 0): 1, (2, 0, 4): -1})
REDUCED_F2_DEN = XPoly.from_terms({
    (0, 0, 0): 1, (1, 2, 0): -1, (2, 2, 2): -3, (2, 0, 4): -2, (3, 2, 4): -1, (4, 0, 8): 1,
})
REDUCED_F2_SERIES = (
    BiPoly.constant(1),
    BiPoly({(2, 0): 1}),
    BiPoly({(4, 0): 1, (2, 2): 3, (0, 4): 1}),
    BiPoly({(6, 0): 1, (4, 2): 6, (2, 4): 4}),
    BiPoly({(8, 0): 1, (6, 2): 9, (4, 4): 16, (2, 6): 9, (0, 8): 1}),
)
KNOWN_F3_NUM = XPoly.from_terms({
    (0, 0, 0): 1, (2, 1, 3): -1, (3, 0, 6): -3, (5, 1, 9): 2, (6, 0, 12): 3, (8, 1, 15): -1, (9, 0, 18): -1,
})
KNOWN_F3_DEN = XPoly.from_terms({
    (0, 0, 0): 1, (1, 2, 0): -1, (2, 1, 3): -1, (3, 3, 3): -3, (3, 0, 6): -4, (4, 2, 6): 1,
    (5, 4, 6): 2, (5, 1, 9): 3, (6, 3, 9): 4, (6, 0, 12): 6, (7, 2, 12): 1, (8, 1, 15): -3,
    (9, 3, 15): -1, (9, 0, 18): -4, (10, 2, 18): -1, (11, 1, 21): 1, (12, 0, 24): 1,
})
F3_SERIES_AT_ONE = (1, 1, 1, 6, 13, 22, 64, 155, 321, 783)

# 62×3141 矩形的 31×1 鋪法數
BIG_COUNT_31_3141 = (
    "13402557618801701815685444925429379056914684414597971761745488045182"
    "60506181047183540953319585706522974237498150073347365953548828874598"
    "60849814074167537144921607298786734849307555723438800870146833283846"
    "5955126575180559822761044422243837857742218930"
)

# f_N(x;1,1)，N = 1..6，依 x 次方的係數
F_AT_ONE = {
    1: (1, -1),
    2: (1, 0, -1, -1),
    3: (1, 0, -1, -1, -1, 0, 1),
    4: (1, 0, 0, -1, -1, -2, -1, 0, 1, 0, 1),
    5: (1, 0, 0, -1, -1, -1, -2, -1, 0, 2, 2, 0, 1, 0, 0, -1),
    6: (1, 0, 0, 0, -1, -1, -1, -3, -2, -1, 0, 2, 2, 0, 3, 2, 0, 0, -1, 0, 0, -1),
}

# t(4,3;2)：4×3 矩形的骨牌加權計數
T432_COUNT = BiPoly({(6, 0): 1, (4, 2): 6, (2, 4): 4})


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    counterexample: str = ''


@dataclass(frozen=True)
class VerifyContext:
    """檢查的執行參數"""
    level: str = 'quick'
    seed: int = DEFAULT_SEED
    trials: int = DEFAULT_TRIALS
    capacity: int = DEFAULT_STATE_CAPACITY
    threads: int = 1

    @property
    def full(self) -> bool:
        return self.level == 'full'

    def pick(self, quick, full):
        return full if self.full else quick

    def rng(self, salt: int = 0) -> random.Random:
        return random.Random(self.seed + salt)


CheckFn = Callable[[VerifyContext], Optional[str]]
SUITES: Dict[str, List[Tuple[str, CheckFn]]] = {name: [] for name in SUITE_NAMES}


def check(suite: str, name: str) -> Callable[[CheckFn], CheckFn]:
    def register(fn: CheckFn) -> CheckFn:
        SUITES[suite].append((name, fn))
        return fn
    return register


def _at_a1_bk(p: XPoly, k: int) -> XPoly:
    """p(x;1,b^k)"""
    return substitute(substitute(p, Substitution.a_to_one()), Substitution.b_power(k))


# ---------------------------------------------------------------------------
# fn：奇數組合與 f_N
# ---------------------------------------------------------------------------

@check('fn', 'f_N 封閉式與組合式一致')
def _fn_dual_route(ctx: VerifyContext) -> Optional[str]:
    for N in range(1, ctx.pick(8, 12) + 1):
        if f_poly(N, 'closed') != f_poly(N, 'combinatorial'):
            return f"N={N}"
    return None


@check('fn', 'f_N(x;1,1) 表列值')
def _fn_table(ctx: VerifyContext) -> Optional[str]:
    for N, expected in F_AT_ONE.items():
        got = tuple(f_poly(N).evaluate(1, 1))
        if got != expected:
            return f"N={N}: {got}"
    return None


@check('fn', '標準形保持 S_N 與長度')
def _fn_canonical(ctx: VerifyContext) -> Optional[str]:
    for N in range(1, ctx.pick(8, 10) + 1):
        for oc in enumerate_oc(N):
            closed = canonical_form(N, oc)
            if closed != slide_canonical_reference(N, oc):
                return f"N={N}, α={oc.parts}: 封閉式 {closed.parts}"
            if s_stat(N, closed) != s_stat(N, oc) or closed.length != oc.length:
                return f"N={N}, α={oc.parts}"
    return None


@check('fn', 'ℓ(α) = ⌊2S_N(α)/(N+1)⌋')
def _fn_length(ctx: VerifyContext) -> Optional[str]:
    for N in range(1, ctx.pick(8, 10) + 1):
        for oc in enumerate_oc(N):
            if oc.length != (2 * s_stat(N, oc)) // (N + 1):
                return f"N={N}, α={oc.parts}"
    return None


@check('fn', '|c_s(N)| 等於 S_N=s 的組合數')
def _fn_no_cancellation(ctx: VerifyContext) -> Optional[str]:
    for N in range(1, ctx.pick(8, 10) + 1):
        histogram = s_histogram(N)
        for s in range(N * (N + 1) // 2 + 1):
            if abs(c_closed(s, N)) != histogram.get(s, 0):
                return f"N={N}, s={s}"
        for s in histogram:
            lengths = {oc.length for oc in enumerate_oc(N) if s_stat(N, oc) == s}
            if len(lengths) != 1:
                return f"N={N}, s={s} 對應多個長度 {sorted(lengths)}"
    return None


@check('fn', '|OC_{≤N}| 為 Fibonacci 數')
def _fn_fibonacci(ctx: VerifyContext) -> Optional[str]:
    fib = [0, 1]
    while len(fib) < 25:
        fib.append(fib[-1] + fib[-2])
    for N in range(1, ctx.pick(16, 20) + 1):
        if len(enumerate_oc(N)) != fib[N + 2]:
            return f"N={N}"
    return None


@check('fn', 'P_α 集合刻劃')
def _fn_palpha(ctx: VerifyContext) -> Optional[str]:
    for N in range(1, ctx.pick(6, 8) + 1):
        images = {palpha(N, oc) for oc in enumerate_oc(N) if oc.parts}
        for size in range(1, N + 1):
            for subset in combinations(range(1, N + 1), size):
                if is_palpha_set(subset, N) != (frozenset(subset) in images):
                    return f"N={N}, S={subset}"
    return None


# ---------------------------------------------------------------------------
# det：轉移矩陣行列式與 φ_r
# ---------------------------------------------------------------------------

@check('det', 'det(I−A(x)) = f_{k−1}(x;1,b^k)')
def _det_transfer_denominator(ctx: VerifyContext) -> Optional[str]:
    for k in range(2, ctx.pick(5, 7) + 1):
        matrix = build_A(k)
        got = det_poly(PolyMatrix.identity(matrix.size) - matrix)
        if got != _at_a1_bk(f_poly(k - 1), k):
            return f"k={k}: {got}"
    return None


@check('det', 'D_r = φ_r（獨立單項式）')
def _det_phi(ctx: VerifyContext) -> Optional[str]:
    for r in range(1, ctx.pick(6, 8) + 1):
        values = independent_monomials(r)
        got = det_poly(PolyMatrix.identity(r) - build_M(r, values))
        if got != phi(r, values):
            return f"r={r}"
    return None


@check('det', 'φ_r 遞迴式')
def _det_phi_recursion(ctx: VerifyContext) -> Optional[str]:
    for r in range(1, ctx.pick(6, 8) + 1):
        if phi_by_recursion(r) != phi_multilinear(r):
            return f"r={r}"
    return None


@check('det', 'φ_{k−1}(b^k x^i) = f_{k−1}(x;1,b^k)')
def _det_phi_fk(ctx: VerifyContext) -> Optional[str]:
    for k in range(2, ctx.pick(5, 7) + 1):
        values = [XPoly.from_terms({(i, 0, k): 1}) for i in range(1, k)]
        if phi(k - 1, values) != _at_a1_bk(f_poly(k - 1), k):
            return f"k={k}"
    return None


@check('det', 'C(x) 轉移矩陣與 TComp 列舉一致')
def _det_tcomp(ctx: VerifyContext) -> Optional[str]:
    order = ctx.pick(12, 18)
    for k in range(2, ctx.pick(4, 5) + 1):
        if C_rational(k).series(order) != tcomp_series(k, order):
            return f"k={k}"
    return None


@check('det', 'P_k 與 Q_k 互質（抽查）')
def _det_coprime(ctx: VerifyContext) -> Optional[str]:
    for k in range(2, 6):
        if not coprime_spot_check(k, trials=20, seed=ctx.seed + k):
            return f"k={k}"
    return None


# ---------------------------------------------------------------------------
# hadamard：Hadamard 乘積
# ---------------------------------------------------------------------------

@check('hadamard', '封閉式等於逐項乘積')
def _hadamard_closed_form(ctx: VerifyContext) -> Optional[str]:
    order = ctx.pick(15, 30)
    for N in range(2, ctx.pick(3, 5) + 1):
        base = series_invert(ONE - A * X - B * X ** N, order)
        if hadamard_rational(N).series(order) != hadamard_product(base, base):
            return f"N={N}, T={order}"
    return None


@check('hadamard', 'N=2 於 a=b=1 為 Fibonacci 平方')
def _hadamard_fibonacci(ctx: VerifyContext) -> Optional[str]:
    got = hadamard_rational(2).series(5).evaluate(1, 1)
    return None if got == [1, 1, 4, 9, 25, 64] else f"{got}"


@check('hadamard', 'H_k = 1/(1−V_k)')
def _hadamard_h_from_v(ctx: VerifyContext) -> Optional[str]:
    order = ctx.pick(12, 20)
    for k in range(2, ctx.pick(3, 4) + 1):
        if reciprocal_one_minus(V_rational(k)).series(order) != H_rational(k).series(order):
            return f"k={k}, T={order}"
    return None


@check('hadamard', 'J = 1−1/H 的分母為 f_{N−1}')
def _hadamard_numerator(ctx: VerifyContext) -> Optional[str]:
    order = ctx.pick(16, 24)
    for N in range(2, ctx.pick(4, 5) + 1):
        f_prev = f_poly(N - 1)
        # 齊次化後的轉移矩陣分母就是 f_{N−1}(x;a,b^N)
        if V_rational(N).den != substitute(f_prev, Substitution.b_power(N)):
            return f"N={N}: V_N 的分母 {V_rational(N).den}"
        base = series_invert(ONE - A * X - B * X ** N, order)
        termwise = hadamard_product(base, base)
        j_series = XSeries(order, [ONE]) - series_invert(XPoly(termwise.coeffs), order)
        # f_{N−1}·J 必須是次數 N + C(N,2) 的多項式
        product = j_series * f_prev
        top = N + comb(N, 2)
        tail = [n for n in range(top + 1, order + 1) if product.coeff(n)]
        if tail or not product.coeff(top):
            return f"N={N}: f_{N - 1}·J 不是 {top} 次多項式"
    return None


# ---------------------------------------------------------------------------
# oracle：生成函數與窮舉計數
# ---------------------------------------------------------------------------

@check('oracle', 't(4,3;2) 與 F_2 的 x³ 係數')
def _oracle_t432(ctx: VerifyContext) -> Optional[str]:
    dp = count_tilings(4, 3, 2, threads=ctx.threads, capacity=ctx.capacity)
    gf = F_main(2).series(3).coeff(3)
    if dp != T432_COUNT or gf != T432_COUNT:
        return f"DP={dp}, F_2={gf}"
    return None


@check('oracle', 'F_2 的既知形式與級數')
def _oracle_f2(ctx: VerifyContext) -> Optional[str]:
    gf = F_main(2)
    if gf.num * REDUCED_F2_DEN != REDUCED_F2_NUM * gf.den:
        return f"交叉相乘不相等: {gf}"
    common = ONE - B ** 2 * X
    if gf.num.exact_div(common) != REDUCED_F2_NUM or gf.den.exact_div(common) != REDUCED_F2_DEN:
        return "約去 1−b²x 後與既知形式不同"
    series = gf.series(4).coeffs
    if series != REDUCED_F2_SERIES:
        return f"級數 {gf.series(4)}"
    return None


@check('oracle', 'F_3 的既知形式與級數')
def _oracle_f3(ctx: VerifyContext) -> Optional[str]:
    gf = F_main(3)
    if gf.num != KNOWN_F3_NUM:
        return f"分子 {gf.num}"
    if gf.den != KNOWN_F3_DEN:
        return f"分母 {gf.den}"
    got = tuple(gf.series(9).evaluate(1, 1))
    return None if got == F3_SERIES_AT_ONE else f"級數 {got}"


@check('oracle', '分子次數 3C(k,2)、分母次數 3C(k,2)+k')
def _oracle_degrees(ctx: VerifyContext) -> Optional[str]:
    for k in range(2, ctx.pick(4, 6) + 1):
        gf = F_main(k)
        if gf.num.degree != 3 * comb(k, 2) or gf.den.degree != 3 * comb(k, 2) + k:
            return f"k={k}: num {gf.num.degree}, den {gf.den.degree}"
    return None


@check('oracle', 'F_k 係數等於 DP 的 t(2k,n;k)')
def _oracle_master(ctx: VerifyContext) -> Optional[str]:
    bounds = ctx.pick({2: 8, 3: 6}, {2: 12, 3: 9, 4: 8})
    for k, top in bounds.items():
        series = F_main(k).series(top)
        for n in range(top + 1):
            dp = count_tilings(2 * k, n, k, threads=ctx.threads, capacity=ctx.capacity)
            if series.coeff(n) != dp:
                return f"k={k}, n={n}: F_k={series.coeff(n)}, DP={dp}"
    return None


@check('oracle', '1/(1−W_k) 與 F_k 級數一致')
def _oracle_fault_route(ctx: VerifyContext) -> Optional[str]:
    order = ctx.pick(10, 16)
    for k in range(2, ctx.pick(3, 4) + 1):
        if F_from_faults(k).series(order) != F_main(k).series(order):
            return f"k={k}, T={order}"
    return None


@check('oracle', 'U_k、V_k 與窮舉篩選一致')
def _oracle_uv(ctx: VerifyContext) -> Optional[str]:
    bounds = ctx.pick({2: 6, 3: 6}, {2: 8, 3: 9})
    for k, top in bounds.items():
        u_series = U_rational(k).series(top)
        v_series = V_rational(k).series(top)
        for n in range(1, top + 1):
            for kind, series in (('u', u_series), ('v', v_series)):
                census = empirical_series(kind, k, n)
                if census != series.coeff(n):
                    return f"{kind}, k={k}, n={n}: 窮舉 {census}, 生成函數 {series.coeff(n)}"
    return None


@check('oracle', 'Klarner 可鋪判準')
def _oracle_klarner(ctx: VerifyContext) -> Optional[str]:
    top = ctx.pick(6, 8)
    for k in range(1, 5):
        for m in range(1, top + 1):
            for n in range(1, top + 1):
                count = count_tilings(m, n, k, capacity=ctx.capacity)
                if bool(count) != klarner_tileable(m, n, k):
                    return f"m={m}, n={n}, k={k}"
    return None


@check('oracle', '轉置對稱與齊次性')
def _oracle_transpose(ctx: VerifyContext) -> Optional[str]:
    swap = Substitution(a=(1, 0, 1), b=(1, 1, 0))
    top = ctx.pick(6, 8)
    for k in range(2, 4):
        for m in range(1, top + 1):
            for n in range(1, top + 1):
                count = count_tilings(m, n, k, capacity=ctx.capacity)
                if substitute(count, swap) != count_tilings(n, m, k, capacity=ctx.capacity):
                    return f"轉置 m={m}, n={n}, k={k}"
                if count and not count.is_homogeneous(m * n // k):
                    return f"齊次 m={m}, n={n}, k={k}"
    return None


@check('oracle', 'DP 與逐一列舉一致')
def _oracle_enumeration(ctx: VerifyContext) -> Optional[str]:
    for k in range(1, 4):
        for m in range(0, 7):
            for n in range(0, 7):
                total = sum((tiling.weight() for tiling in enumerate_tilings(m, n, k)), BiPoly())
                if total != count_tilings(m, n, k, capacity=ctx.capacity):
                    return f"m={m}, n={n}, k={k}"
    return None


@check('oracle', 'Graham 無斷層判準')
def _oracle_graham(ctx: VerifyContext) -> Optional[str]:
    for k in (2, 3):
        for n in range(1, 9):
            if graham_fault_free_exists(2 * k, n, k, 1):
                return f"({2 * k},{n},{k},1)"
    if graham_fault_free_exists(6, 6, 1, 2):
        return "(6,6,1,2)"
    cases = ctx.pick([(5, 6, 2, 3), (6, 8, 1, 2), (5, 6, 1, 2)],
                     [(5, 6, 2, 3), (6, 8, 1, 2), (5, 6, 1, 2), (6, 6, 1, 2), (6, 7, 1, 3)])
    for case in cases:
        if graham_fault_free_exists(*case) != fault_free_exists_bruteforce(*case):
            return f"窮舉不一致 {case}"
    return None


@check('oracle', '窄矩形中的直磚集中於 k 列')
def _oracle_ar_structure(ctx: VerifyContext) -> Optional[str]:
    for k in (2, 3):
        for m in range(k + 1, 2 * k):
            for ell in range(1, 4):
                for tiling in enumerate_tilings(m, k * ell, k):
                    if fault_predicates(tiling).vertically_fault_free and not ar_structure_holds(tiling, k):
                        return f"m={m}, n={k * ell}, k={k}: {tiling.to_json()}"
    return None


@check('oracle', 'Aggarwal–Ram 窄矩形公式')
def _oracle_ar_narrow(ctx: VerifyContext) -> Optional[str]:
    for k in (2, 3):
        for m in range(k, 2 * k):
            for ell in range(0, 4):
                dp = count_tilings(m, k * ell, k, capacity=ctx.capacity).evaluate(1, 1)
                if ar_narrow_count(m, ell, k) != dp:
                    return f"m={m}, ℓ={ell}, k={k}: DP={dp}"
    return None


@check('oracle', '62×3141 的鋪法數')
def _oracle_big_count(ctx: VerifyContext) -> Optional[str]:
    if not ctx.full:
        got = str(big_count(3, 9))
        return None if got == '783' else f"k=3, n=9: {got}"
    got = str(big_count(31, 3141))
    return None if got == BIG_COUNT_31_3141 else f"{len(got)} 位數: {got[:20]}…"


# ---------------------------------------------------------------------------
# srht：對稱函數
# ---------------------------------------------------------------------------

@check('srht', '分割的共軛、rank 與 ASC/threshold')
def _srht_partition_basics(ctx: VerifyContext) -> Optional[str]:
    for size in range(ctx.pick(10, 14) + 1):
        for lam in enumerate_partitions(size):
            info = partition_basics(lam)
            if info.conjugate.conjugate() != lam or info.conjugate.rank != info.rank:
                return f"λ={lam}"
            if info.is_threshold != info.conjugate.is_asc:
                return f"threshold λ={lam}"
    info = partition_basics((7, 6, 4, 2, 2, 1))
    if info.rank != 3 or (info.frobenius.arms, info.frobenius.legs) != ((6, 4, 1), (5, 3, 0)) or not info.is_asc:
        return "λ=(7,6,4,2,2,1)"
    if ribbon_sign((7, 5, 3, 1), (4, 2)) != -1:
        return "(7,5,3,1)/(4,2) 的 ribbon 符號"
    return None


@check('srht', 'ASC 分割數等於相異分割數')
def _srht_asc_count(ctx: VerifyContext) -> Optional[str]:
    top = ctx.pick(12, 15)
    distinct = [1] + [0] * top
    for part in range(1, top + 1):
        for total in range(top, part - 1, -1):
            distinct[total] += distinct[total - part]
    for N in range(top + 1):
        asc = enumerate_asc(2 * N)
        if len(asc) != distinct[N] or not all(lam.is_asc and lam.size == 2 * N for lam in asc):
            return f"N={N}"
    return None


@check('srht', 'SRHT 唯一性與 Frobenius 條件')
def _srht_uniqueness(ctx: VerifyContext) -> Optional[str]:
    for size in range(0, ctx.pick(12, 16) + 1, 2):
        for lam in enumerate_asc(size):
            for k in range(2, 6):
                for q in range(size // k + 1):
                    mu = (k,) * q + (1,) * (size - k * q)
                    found = len(srht_enumerate(lam, mu))
                    if q != lam.rank and found:
                        return f"λ={lam}, k={k}, q={q} ≠ rank"
                    if found > 1:
                        return f"λ={lam}, k={k}: {found} 個分解"
                if k * lam.rank <= size:
                    mu = (k,) * lam.rank + (1,) * (size - k * lam.rank)
                    nonempty = bool(srht_enumerate(lam, mu))
                else:
                    nonempty = False
                if nonempty != frob_condition(lam, k):
                    return f"λ={lam}, k={k}: SRHT {nonempty}"
    return None


@check('srht', 'ASC_{1,k}(2s) 與 S_{k−1} 的對應')
def _srht_bijection(ctx: VerifyContext) -> Optional[str]:
    for k in range(2, ctx.pick(5, 6) + 1):
        histogram = s_histogram(k - 1)
        for s in range(comb(k, 2) + 1):
            if len(asc_one_k(2 * s, k)) != histogram.get(s, 0):
                return f"k={k}, s={s}"
    return None


@check('srht', 's_{λ′} = Σ K′ e_μ（數值）')
def _srht_inverse_kostka(ctx: VerifyContext) -> Optional[str]:
    rng = ctx.rng(1)
    for size in range(1, ctx.pick(6, 8) + 1):
        for lam in enumerate_partitions(size):
            row = inverse_kostka_row(lam)
            for _ in range(ctx.trials):
                gamma = [rng.randint(-4, 4) for _ in range(size)]
                e = elementary_symmetric(gamma)
                lhs = schur_dual_jacobi_trudi(lam.conjugate(), gamma)
                rhs = sum(c * e_mu(mu, e) for mu, c in row.items())
                if lhs != rhs:
                    return f"λ={lam}, γ={gamma}"
    return None


@check('srht', 'e_s∘e_2 = Σ threshold s_λ（數值）')
def _srht_threshold(ctx: VerifyContext) -> Optional[str]:
    rng = ctx.rng(2)
    for s in range(0, 5):
        shapes = [lam.conjugate() for lam in enumerate_asc(2 * s)]
        for _ in range(ctx.trials):
            gamma = [rng.randint(-5, 5) for _ in range(4)]
            pairs = pairwise_products(gamma)
            lhs = elementary_symmetric(pairs)[s] if s <= len(pairs) else 0
            rhs = sum(schur_dual_jacobi_trudi(shape, gamma) for shape in shapes)
            if lhs != rhs:
                return f"s={s}, γ={gamma}"
    return None


@check('srht', 'e_s∘e_2 的 e_μ 展開（數值）')
def _srht_plethysm(ctx: VerifyContext) -> Optional[str]:
    rng = ctx.rng(3)
    for k in ctx.pick((3, 4), (3, 4, 5)):
        for s in range(comb(k, 2) + 1):
            expansion = plethysm_e_expansion(s, max_part=k)
            for _ in range(ctx.trials):
                gamma = [rng.randint(-5, 5) for _ in range(k)]
                e = elementary_symmetric(gamma)
                lhs = elementary_symmetric(pairwise_products(gamma))[s]
                rhs = sum(c * e_mu(mu, e) for mu, c in expansion.items())
                if lhs != rhs:
                    return f"k={k}, s={s}, γ={gamma}"
    return None


@check('srht', '由 SRHT 推得的分母等於 f_{k−1}(x;a,−b)')
def _srht_denominator(ctx: VerifyContext) -> Optional[str]:
    for k in range(2, ctx.pick(4, 6) + 1):
        expected = substitute(f_poly(k - 1), Substitution.b_power(1, sign=-1))
        got = denominator_from_srht(k)
        if got != expected:
            return f"k={k}: {got}"
    return None


# ---------------------------------------------------------------------------
# 執行
# ---------------------------------------------------------------------------

def run_check(name: str, fn: CheckFn, ctx: VerifyContext) -> CheckResult:
    try:
        witness = fn(ctx)
    except Exception as e:
        logger.error(f"檢查「{name}」執行失敗: {str(e)}")
        return CheckResult(name, False, f"{type(e).__name__}: {e}")
    return CheckResult(name, witness is None, witness or '')


def run_suite(name: str = 'all', level: str = 'quick', seed: int = DEFAULT_SEED,
              stream: Optional[TextIO] = None, trials: int = DEFAULT_TRIALS,
              capacity: int = DEFAULT_STATE_CAPACITY, threads: int = 1) -> bool:
    """執行驗證套件

    Args:
        name: 套件名稱或 'all'
        level: 'quick' 或 'full'
        seed: 隨機檢查的種子
        stream: 輸出 PASS/FAIL 的位置（預設 stdout）

    Returns:
        全部通過為 True
    """
    if name != 'all' and name not in SUITES:
        raise ValueError(f"未知的驗證套件: {name}（可用 all, {', '.join(SUITE_NAMES)}）")
    if level not in VERIFY_LEVELS:
        raise ValueError(f"未知的驗證等級: {level}")
    out = stream or sys.stdout
    ctx = VerifyContext(level, seed, trials, capacity, threads)
    names = SUITE_NAMES if name == 'all' else (name,)

    logger.info("=" * 60)
    logger.info(f"開始驗證: {', '.join(names)}（{level}）")
    logger.info("=" * 60)
    failures = 0
    for suite in names:
        for check_name, fn in SUITES[suite]:
            logger.info(f"[{suite}] {check_name}...")
            result = run_check(check_name, fn, ctx)
            if result.passed:
                out.write(f"PASS {suite}/{result.name}\n")
            else:
                failures += 1
                out.write(f"FAIL {suite}/{result.name}: {result.counterexample}\n")
    out.flush()
    if failures:
        logger.warning(f"驗證結束：{failures} 項失敗")
    else:
        logger.info("驗證結束：全部通過")
    logger.info("=" * 60)
    return failures == 0
