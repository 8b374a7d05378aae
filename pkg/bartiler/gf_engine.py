"""
生成函數組裝模組
- 轉移矩陣 A(x)、多項式行列式與伴隨矩陣
- 多變數行列式 D_r 與 φ_r（直接定義與遞迴兩種算法）
- V_k（經轉移矩陣）、U_k、Hadamard 乘積的封閉形式
- 主定理 F_k 以及極大 n 的計數
"""
from __future__ import annotations

import logging
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, FrozenSet, List, Sequence, Tuple

import sympy

from .combinatorics import enumerate_oc, f_poly, sigma, tcomp_enumerate
from .errors import OutOfRange
from .poly_core import (
    A,
    B,
    ONE,
    X,
    BiPoly,
    RationalGF,
    Substitution,
    XPoly,
    XSeries,
    coeff_at,
    reciprocal_one_minus,
    sqrt_pair_product,
    substitute,
)

logger = logging.getLogger(__name__)

Multilinear = Dict[FrozenSet[int], int]


@dataclass(frozen=True)
class PolyMatrix:
    """XPoly 元素的方陣"""
    rows: Tuple[Tuple[XPoly, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(row) for row in self.rows)
        if any(len(row) != len(rows) for row in rows):
            raise ValueError("PolyMatrix 必須是方陣")
        object.__setattr__(self, 'rows', rows)

    @classmethod
    def identity(cls, size: int) -> 'PolyMatrix':
        one, zero = XPoly([ONE]), XPoly()
        return cls(tuple(tuple(one if i == j else zero for j in range(size)) for i in range(size)))

    @property
    def size(self) -> int:
        return len(self.rows)

    def entry(self, i: int, j: int) -> XPoly:
        return self.rows[i][j]

    def __sub__(self, other: 'PolyMatrix') -> 'PolyMatrix':
        if self.size != other.size:
            raise ValueError(f"矩陣大小不一致: {self.size} 與 {other.size}")
        return PolyMatrix(tuple(tuple(p - q for p, q in zip(r1, r2)) for r1, r2 in zip(self.rows, other.rows)))

    def minor(self, drop_row: int, drop_col: int) -> 'PolyMatrix':
        return PolyMatrix(tuple(
            tuple(entry for j, entry in enumerate(row) if j != drop_col)
            for i, row in enumerate(self.rows) if i != drop_row
        ))

    def __str__(self) -> str:
        return '\n'.join('(' + ', '.join(str(entry) for entry in row) + ')' for row in self.rows)


@dataclass(frozen=True)
class TransferParts:
    """V_k 建構中在 a=1 的各個部分：C(x) = P̃/Q，P = vA·adj(I−A)·uᵀ"""
    A: PolyMatrix
    Q: XPoly
    P: XPoly
    P_tilde: XPoly
    adjugate: PolyMatrix


def build_A(k: int) -> PolyMatrix:
    """(k−1)×(k−1) 矩陣，(i,j) 元素在 i+j ≥ k 時為 b^k x^j，否則為 0（1 起算）"""
    if k < 2:
        raise OutOfRange(f"k 必須 ≥ 2: {k}")
    size = k - 1
    zero = XPoly()
    return PolyMatrix(tuple(
        tuple(XPoly.from_terms({(j, 0, k): 1}) if i + j >= k else zero for j in range(1, size + 1))
        for i in range(1, size + 1)
    ))


def build_M(r: int, assignment: Sequence[XPoly]) -> PolyMatrix:
    """M_r：(i,j) 元素在 i+j ≥ r+1 時為 x_j，否則為 0"""
    if len(assignment) != r:
        raise ValueError(f"需要 {r} 個代入值，收到 {len(assignment)}")
    zero = XPoly()
    return PolyMatrix(tuple(
        tuple(assignment[j - 1] if i + j >= r + 1 else zero for j in range(1, r + 1))
        for i in range(1, r + 1)
    ))


def det_poly(M: PolyMatrix) -> XPoly:
    """以餘因子展開計算行列式，依欄子集合做記憶化（2^n 個子問題）"""
    n = M.size
    memo: Dict[int, XPoly] = {}

    def minor_det(row: int, mask: int) -> XPoly:
        if row == n:
            return XPoly([ONE])
        if mask in memo:
            return memo[mask]
        total = XPoly()
        sign = 1
        for j in range(n):
            if not (mask >> j) & 1:
                continue
            entry = M.rows[row][j]
            if entry:
                term = entry * minor_det(row + 1, mask & ~(1 << j))
                total = total + term if sign > 0 else total - term
            sign = -sign
        memo[mask] = total
        return total

    return minor_det(0, (1 << n) - 1)


def adjugate(M: PolyMatrix) -> PolyMatrix:
    """伴隨矩陣 adj(M)_{ij} = (−1)^{i+j} det(M 去掉第 j 列第 i 行)"""
    n = M.size
    if n == 1:
        return PolyMatrix(((XPoly([ONE]),),))
    cofactors = [[det_poly(M.minor(i, j)) for j in range(n)] for i in range(n)]
    return PolyMatrix(tuple(
        tuple(cofactors[j][i] if (i + j) % 2 == 0 else -cofactors[j][i] for j in range(n))
        for i in range(n)
    ))


# ---------------------------------------------------------------------------
# φ_r
# ---------------------------------------------------------------------------

def phi_multilinear(r: int) -> Multilinear:
    """φ_r 的多重線性表示 {變數索引集合: 係數}，直接對 OC_{≤r} 求和"""
    poly: Multilinear = {}
    for oc in enumerate_oc(r):
        key = frozenset(sigma(r, s) for s in oc.partial_sums())
        poly[key] = poly.get(key, 0) + (-1) ** ((oc.length + 1) // 2)
    return {key: c for key, c in poly.items() if c}


def phi_by_recursion(r: int) -> Multilinear:
    """φ_r = (1 − x_1x_r + x_r ∂/∂x_{r−1}) φ_{r−2}(x_2,…,x_{r−1})

    偏微分直接作用在多重線性表示上：含 x_{r−1} 的單項式刪去該變數，其餘消失。
    """
    if r < 1:
        raise OutOfRange(f"r 必須為正整數: {r}")
    if r == 1:
        return {frozenset(): 1, frozenset({1}): -1}
    if r == 2:
        return {frozenset(): 1, frozenset({2}): -1, frozenset({1, 2}): -1}
    inner = {frozenset(i + 1 for i in key): c for key, c in phi_by_recursion(r - 2).items()}
    result: Multilinear = {}

    def add(key: FrozenSet[int], c: int) -> None:
        result[key] = result.get(key, 0) + c

    for key, c in inner.items():
        add(key, c)
        add(key | {1, r}, -c)
        if r - 1 in key:
            add((key - {r - 1}) | {r}, c)
    return {key: c for key, c in result.items() if c}


def assign_multilinear(poly: Multilinear, assignment: Sequence[XPoly]) -> XPoly:
    """把 x_i 代入 assignment[i−1]"""
    total = XPoly()
    for key, c in sorted(poly.items(), key=lambda item: sorted(item[0])):
        term = XPoly([BiPoly.constant(c)])
        for index in sorted(key):
            term = term * assignment[index - 1]
        total = total + term
    return total


def phi(r: int, assignment: Sequence[XPoly]) -> XPoly:
    """φ_r 在給定代入值下的值"""
    if len(assignment) != r:
        raise ValueError(f"需要 {r} 個代入值，收到 {len(assignment)}")
    return assign_multilinear(phi_multilinear(r), assignment)


def independent_monomials(r: int) -> List[XPoly]:
    """以 b 的不同次方 b^{2^{i−1}} 代表互相獨立的 x_1..x_r（多重線性時不會混淆）"""
    return [XPoly([BiPoly.monomial(1, 0, 1 << (i - 1))]) for i in range(1, r + 1)]


# ---------------------------------------------------------------------------
# V_k、U_k、H_k
# ---------------------------------------------------------------------------

def transfer_matrix_parts(k: int) -> TransferParts:
    """計算 Q = det(I−A)、adj(I−A)、P = vA·adj·uᵀ、P̃ = (1+vuᵀ)Q + P"""
    matrix = build_A(k)
    size = k - 1
    shifted = PolyMatrix.identity(size) - matrix
    Q = det_poly(shifted)
    adj = adjugate(shifted)
    v = [XPoly.from_terms({(j, 0, k): 1}) for j in range(1, size + 1)]
    vA = [sum((v[i] * matrix.entry(i, j) for i in range(size)), XPoly()) for j in range(size)]
    P = XPoly()
    for j in range(size):
        if vA[j]:
            for col in range(size):
                P = P + vA[j] * adj.entry(j, col)
    vu = sum(v, XPoly())
    P_tilde = (vu + 1) * Q + P
    return TransferParts(matrix, Q, P, P_tilde, adj)


def C_rational(k: int) -> RationalGF:
    """C(x) = Σ_n Σ_{β∈TComp(n,k)} b^{k·ℓ(β)} x^n，以轉移矩陣求得"""
    parts = transfer_matrix_parts(k)
    return RationalGF(parts.P_tilde, parts.Q)


def tcomp_series(k: int, order: int) -> XSeries:
    """直接列舉 TComp 得到的 C(x) 截斷級數"""
    coeffs = []
    for n in range(order + 1):
        acc: Dict[Tuple[int, int], int] = {}
        for beta in tcomp_enumerate(n, k):
            key = (0, k * beta.length)
            acc[key] = acc.get(key, 0) + 1
        coeffs.append(BiPoly(acc))
    return XSeries(order, coeffs)


def _substitute_rational(R: RationalGF, mapping: Substitution) -> RationalGF:
    return RationalGF(substitute(R.num, mapping), substitute(R.den, mapping))


def V_rational(k: int) -> RationalGF:
    """V_k(x;a,b)：有中央斷層、無垂直斷層的 2k×n 鋪法生成函數

    先在 a=1 組出 x + b^{2k}x^k + 2b^k x^k C(x)，再以 x → a²x、b → b/a 補回齊次性。
    """
    if k < 2:
        raise OutOfRange(f"k 必須 ≥ 2: {k}")
    parts = transfer_matrix_parts(k)
    xk = X ** k
    num = (X + B ** (2 * k) * xk) * parts.Q + (2 * B ** k) * xk * parts.P_tilde
    return _substitute_rational(RationalGF(num, parts.Q), Substitution.homogenize())


def U_rational(k: int) -> RationalGF:
    """U_k = (k−1)a^k b^k x^k / (1 − b^{2k}x^k)^{k−1}：無中央斷層、無垂直斷層"""
    if k < 2:
        raise OutOfRange(f"k 必須 ≥ 2: {k}")
    num = XPoly.from_terms({(k, k, k): k - 1})
    den = (ONE - B ** (2 * k) * X ** k) ** (k - 1)
    return RationalGF(num, den)


def W_rational(k: int) -> RationalGF:
    """W_k = V_k + U_k：所有無垂直斷層的 2k×n 鋪法"""
    return V_rational(k) + U_rational(k)


def F_from_faults(k: int) -> RationalGF:
    """F_k = 1/(1 − W_k)：依垂直斷層切開的另一條組裝路線"""
    return reciprocal_one_minus(W_rational(k))


def hadamard_rational(N: int) -> RationalGF:
    """(1/p_N) * (1/p_N) 的封閉形式，p_N = 1 − ax − bx^N

    num = f_{N−1}(x;a,b)，den = p_N(√x)p_N(−√x)·f_{N−1}(x;a,−b)
    """
    if N < 2:
        raise OutOfRange(f"N 必須 ≥ 2: {N}")
    p = ONE - A * X - B * X ** N
    f_prev = f_poly(N - 1)
    den = sqrt_pair_product(p) * substitute(f_prev, Substitution.b_power(1, sign=-1))
    return RationalGF(f_prev, den)


def H_rational(k: int) -> RationalGF:
    """H_k：有中央斷層的鋪法，等於 hadamard_rational(k) 中 b → b^k"""
    return _substitute_rational(hadamard_rational(k), Substitution.b_power(k))


def F_main(k: int) -> RationalGF:
    """2k×n 鋪法的加權生成函數 F_k(x;a,b)，依主定理的乘積形式建構（不約分）

    num = (1−b^{2k}x^k)^{k−1}·f_{k−1}(x;a,b^k)
    den = p_k(√x;a,b^k)p_k(−√x;a,b^k)·(1−b^{2k}x^k)^{k−1}·f_{k−1}(x;a,−b^k)
          − (k−1)a^k b^k x^k·f_{k−1}(x;a,b^k)
    """
    if k < 2:
        raise OutOfRange(f"k 必須 ≥ 2: {k}")
    f_prev = f_poly(k - 1)
    f_plus = substitute(f_prev, Substitution.b_power(k))
    f_minus = substitute(f_prev, Substitution.b_power(k, sign=-1))
    block = (ONE - B ** (2 * k) * X ** k) ** (k - 1)
    pair = sqrt_pair_product(ONE - A * X - B ** k * X ** k)
    num = block * f_plus
    den = pair * block * f_minus - XPoly.from_terms({(k, k, k): k - 1}) * f_plus
    return RationalGF(num, den)


def big_count(k: int, n: int) -> int:
    """2k×n 矩形的 k×1 鋪法總數（a=b=1），以線性遞迴求得"""
    if k < 2 or n < 0:
        raise OutOfRange(f"需要 k ≥ 2 且 n ≥ 0: k={k}, n={n}")
    gf = F_main(k)
    logger.info(f"F_{k} 分母次數 {gf.den.degree}，開始遞迴至 n={n}")
    return coeff_at(gf, n, 1, 1)


# ---------------------------------------------------------------------------
# 互質性抽查
# ---------------------------------------------------------------------------

def _to_sympy_poly(p: XPoly, b_val: Fraction, symbol: sympy.Symbol) -> sympy.Poly:
    values = [Fraction(v) for v in p.evaluate(1, b_val)]
    coeffs = [sympy.Rational(v.numerator, v.denominator) for v in reversed(values)] or [sympy.Integer(0)]
    return sympy.Poly(coeffs, symbol, domain='QQ')


def coprime_spot_check(k: int, trials: int = 20, seed: int = 0) -> bool:
    """在隨機有理數 b 下檢查 gcd(P_k, Q_k) = 1（於 Q[x]）"""
    parts = transfer_matrix_parts(k)
    rng = random.Random(seed)
    symbol = sympy.Symbol('x')
    for _ in range(trials):
        b_val = Fraction(rng.randint(1, 40), rng.randint(1, 40)) * rng.choice((1, -1))
        g = sympy.gcd(_to_sympy_poly(parts.P, b_val, symbol), _to_sympy_poly(parts.Q, b_val, symbol))
        if g.degree() > 0:
            logger.warning(f"k={k}, b={b_val} 時 P_k 與 Q_k 有公因式 {g.as_expr()}")
            return False
    return True
