"""
對稱函數驗證層
分割、ASC / threshold 判定、Frobenius 座標、特殊 rim-hook 分解（SRHT）、
反 Kostka 數、plethysm e_s∘e_2 的基本對稱函數展開，
以及 Hadamard 分母的獨立推導。
數值檢驗使用對偶 Jacobi–Trudi 行列式（sympy 計算整數行列式）。
"""
from __future__ import annotations

import logging
from collections import Counter, deque
from dataclasses import dataclass
from itertools import combinations
from math import comb, prod
from typing import Dict, FrozenSet, Iterator, List, Optional, Sequence, Tuple, Union

import sympy

from .errors import MalformedPartition, NotASC, OddTarget, SizeMismatch
from .poly_core import XPoly

logger = logging.getLogger(__name__)

Cell = Tuple[int, int]


@dataclass(frozen=True)
class FrobeniusCoords:
    arms: Tuple[int, ...]
    legs: Tuple[int, ...]

    def __str__(self) -> str:
        return f"({','.join(map(str, self.arms))} | {','.join(map(str, self.legs))})"


@dataclass(frozen=True)
class Partition:
    """弱遞減的正整數序列"""
    parts: Tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p <= 0 for p in parts):
            raise MalformedPartition(f"分割的部分必須為正整數: {parts}")
        if any(x < y for x, y in zip(parts, parts[1:])):
            raise MalformedPartition(f"分割必須弱遞減: {parts}")
        object.__setattr__(self, 'parts', parts)

    @classmethod
    def of(cls, value: Union['Partition', Sequence[int]]) -> 'Partition':
        if isinstance(value, Partition):
            return value
        return cls(tuple(p for p in value if p))

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def conjugate(self) -> 'Partition':
        if not self.parts:
            return self
        return Partition(tuple(sum(1 for p in self.parts if p > j) for j in range(self.parts[0])))

    @property
    def rank(self) -> int:
        """Durfee 方塊大小：滿足 λ_i ≥ i 的最大 i"""
        return sum(1 for i, p in enumerate(self.parts, start=1) if p >= i)

    def frobenius(self) -> FrobeniusCoords:
        conj = self.conjugate().parts
        d = self.rank
        return FrobeniusCoords(tuple(self.parts[i] - i - 1 for i in range(d)),
                               tuple(conj[i] - i - 1 for i in range(d)))

    @property
    def is_asc(self) -> bool:
        conj = self.conjugate().parts
        return all(self.parts[i] == conj[i] + 1 for i in range(self.rank))

    @property
    def is_threshold(self) -> bool:
        conj = self.conjugate().parts
        return all(conj[i] == self.parts[i] + 1 for i in range(self.rank))

    def cells(self) -> FrozenSet[Cell]:
        """(列, 欄)，皆由 0 起算，第 0 列在最上方"""
        return frozenset((i, j) for i, p in enumerate(self.parts) for j in range(p))

    def __str__(self) -> str:
        return f"({','.join(map(str, self.parts))})"


@dataclass(frozen=True)
class PartitionSummary:
    conjugate: Partition
    rank: int
    frobenius: FrobeniusCoords
    is_asc: bool
    is_threshold: bool


@dataclass(frozen=True)
class Ribbon:
    cells: FrozenSet[Cell]
    rows: int

    @property
    def size(self) -> int:
        return len(self.cells)

    @property
    def sign(self) -> int:
        return -1 if (self.rows - 1) % 2 else 1


@dataclass(frozen=True)
class RimHookDecomposition:
    """由內而外的特殊 rim hook 序列"""
    ribbons: Tuple[Ribbon, ...]

    @property
    def sign(self) -> int:
        return prod(ribbon.sign for ribbon in self.ribbons)

    @property
    def sizes(self) -> Tuple[int, ...]:
        return tuple(sorted((ribbon.size for ribbon in self.ribbons), reverse=True))


PartitionLike = Union[Partition, Sequence[int]]


def partition_basics(lam: PartitionLike) -> PartitionSummary:
    """共軛、rank、Frobenius 座標、ASC、threshold"""
    p = Partition.of(lam)
    return PartitionSummary(p.conjugate(), p.rank, p.frobenius(), p.is_asc, p.is_threshold)


def from_frobenius(arms: Sequence[int], legs: Sequence[int]) -> Partition:
    """由 Frobenius 座標 (arms | legs) 還原分割"""
    d = len(arms)
    if len(legs) != d:
        raise MalformedPartition(f"arms 與 legs 長度不同: {arms} | {legs}")
    rows = [arms[i] + i + 1 for i in range(d)]
    cols = [legs[i] + i + 1 for i in range(d)]
    height = cols[0] if cols else 0
    for i in range(d, height):
        rows.append(sum(1 for c in cols if c > i))
    return Partition(tuple(rows))


def _distinct_partitions(n: int, max_part: Optional[int] = None) -> Iterator[Tuple[int, ...]]:
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in _distinct_partitions(n - first, first - 1):
            yield (first,) + rest


def enumerate_partitions(n: int, max_part: Optional[int] = None) -> Iterator[Partition]:
    """n 的所有分割，依字典序遞減"""
    if max_part is None:
        max_part = n
    if n == 0:
        yield Partition(())
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in enumerate_partitions(n - first, first):
            yield Partition((first,) + rest.parts)


def enumerate_asc(two_n: int) -> List[Partition]:
    """2N 的所有 ASC 分割，由 N 的相異分割 f 以 Frobenius 座標 (f | f−1) 建出"""
    if two_n < 0 or two_n % 2:
        raise OddTarget(f"ASC 分割的大小必須是非負偶數: {two_n}")
    return [from_frobenius(f, tuple(x - 1 for x in f)) for f in _distinct_partitions(two_n // 2)]


def _special_peels(parts: Tuple[int, ...]) -> Iterator[Tuple[Ribbon, Tuple[int, ...]]]:
    """移除含左下角格子的 rim hook 的所有方式：(ribbon, 剩下的分割)"""
    ell = len(parts)
    for r0 in range(ell):
        cells = []
        for i in range(r0, ell):
            keep = parts[i + 1] - 1 if i + 1 < ell else 0
            cells.extend((i, j) for j in range(keep, parts[i]))
        rest = parts[:r0] + tuple(parts[i + 1] - 1 for i in range(r0, ell - 1))
        rest = tuple(p for p in rest if p > 0)
        yield Ribbon(frozenset(cells), ell - r0), rest


def _peel_all(parts: Tuple[int, ...], budget: Optional[Counter],
              max_part: Optional[int]) -> Iterator[List[Ribbon]]:
    if not parts:
        yield []
        return
    for ribbon, rest in _special_peels(parts):
        size = ribbon.size
        if max_part is not None and size > max_part:
            continue
        if budget is not None:
            if budget[size] == 0:
                continue
            budget[size] -= 1
        for inner in _peel_all(rest, budget, max_part):
            yield inner + [ribbon]
        if budget is not None:
            budget[size] += 1


def srht_enumerate(lam: PartitionLike, mu: PartitionLike) -> List[RimHookDecomposition]:
    """λ 分解成特殊 rim hook、且各段長度排序後等於 μ 的所有方式"""
    lam_p, mu_p = Partition.of(lam), Partition.of(mu)
    if lam_p.size != mu_p.size:
        raise SizeMismatch(f"|λ|={lam_p.size} 與 |μ|={mu_p.size} 不相等")
    budget = Counter(mu_p.parts)
    return [RimHookDecomposition(tuple(ribbons)) for ribbons in _peel_all(lam_p.parts, budget, None)]


def srht_all(lam: PartitionLike, max_part: Optional[int] = None) -> Iterator[RimHookDecomposition]:
    """λ 的所有特殊 rim-hook 分解（可限制每段長度）"""
    for ribbons in _peel_all(Partition.of(lam).parts, None, max_part):
        yield RimHookDecomposition(tuple(ribbons))


def inverse_kostka(mu: PartitionLike, lam: PartitionLike) -> int:
    """K'_{μλ} = Σ_{S∈SRHT(λ,μ)} sgn(S)"""
    return sum(dec.sign for dec in srht_enumerate(lam, mu))


def inverse_kostka_row(lam: PartitionLike) -> Dict[Tuple[int, ...], int]:
    """{μ: K'_{μλ}}，只列非零者"""
    acc: Dict[Tuple[int, ...], int] = {}
    for dec in srht_all(lam):
        acc[dec.sizes] = acc.get(dec.sizes, 0) + dec.sign
    return {mu: c for mu, c in acc.items() if c}


def ribbon_sign(outer: PartitionLike, inner: PartitionLike) -> int:
    """斜形 outer/inner 若為 ribbon，回傳 (−1)^{列數−1}"""
    out_p, in_p = Partition.of(outer), Partition.of(inner)
    inner_parts = in_p.parts + (0,) * (out_p.length - in_p.length)
    if in_p.length > out_p.length or any(i > o for i, o in zip(inner_parts, out_p.parts)):
        raise MalformedPartition(f"{in_p} 不包含於 {out_p}")
    cells = {(i, j) for i, p in enumerate(out_p.parts) for j in range(inner_parts[i], p)}
    if not cells:
        raise MalformedPartition("空斜形不是 ribbon")
    if any({(i + 1, j), (i, j + 1), (i + 1, j + 1)} <= cells for i, j in cells):
        raise MalformedPartition(f"{out_p}/{in_p} 含 2×2 方塊")
    start = next(iter(cells))
    seen = {start}
    queue = deque([start])
    while queue:
        i, j = queue.popleft()
        for nb in ((i + 1, j), (i - 1, j), (i, j + 1), (i, j - 1)):
            if nb in cells and nb not in seen:
                seen.add(nb)
                queue.append(nb)
    if seen != cells:
        raise MalformedPartition(f"{out_p}/{in_p} 不連通")
    rows = len({i for i, _ in cells})
    return -1 if (rows - 1) % 2 else 1


def frob_condition(lam: PartitionLike, k: int) -> bool:
    """ASC 分割 λ 的 Frobenius arms f_1>…>f_d（f_{d+1}=0）是否對所有 j 滿足
    f_j + f_{d+1−j} ≥ k 且 f_{j+1} + f_{d+1−j} < k"""
    p = Partition.of(lam)
    if not p.is_asc:
        raise NotASC(f"{p} 不是 ASC 分割")
    f = p.frobenius().arms
    d = len(f)
    padded = f + (0,)
    for j in range(d):
        mirror = f[d - 1 - j]
        if f[j] + mirror < k or padded[j + 1] + mirror >= k:
            return False
    return True


def _one_k_shape(two_s: int, k: int, q: int) -> Optional[Tuple[int, ...]]:
    rest = two_s - k * q
    if rest < 0:
        return None
    return (k,) * q + (1,) * rest


def asc_one_k(two_s: int, k: int) -> List[Partition]:
    """ASC_{1,k}(2s)：SRHT(λ, (k^rank 1^rest)) 非空的 ASC 分割"""
    out = []
    for lam in enumerate_asc(two_s):
        mu = _one_k_shape(two_s, k, lam.rank)
        if mu is not None and srht_enumerate(lam, mu):
            out.append(lam)
    return out


def plethysm_e_coeffs(s: int, k: int) -> Dict[Tuple[int, ...], int]:
    """e_s∘e_2 展開中部分只含 {1,k} 的 μ 之係數 a_μ"""
    acc: Dict[Tuple[int, ...], int] = {}
    for lam in enumerate_asc(2 * s):
        mu = _one_k_shape(2 * s, k, lam.rank)
        if mu is None:
            continue
        decs = srht_enumerate(lam, mu)
        if decs:
            acc[mu] = acc.get(mu, 0) + sum(dec.sign for dec in decs)
    return {mu: c for mu, c in acc.items() if c}


def plethysm_e_expansion(s: int, max_part: Optional[int] = None) -> Dict[Tuple[int, ...], int]:
    """e_s∘e_2 = Σ_μ a_μ e_μ 的完整係數（可只保留部分 ≤ max_part 的 μ）"""
    acc: Dict[Tuple[int, ...], int] = {}
    for lam in enumerate_asc(2 * s):
        for dec in srht_all(lam, max_part):
            acc[dec.sizes] = acc.get(dec.sizes, 0) + dec.sign
    return {mu: c for mu, c in acc.items() if c}


def denominator_from_srht(k: int) -> XPoly:
    """以 e_1=a、e_k=(−1)^{k+1}b、其餘為 0 代入 Σ_s (−1)^s x^s (e_s∘e_2)

    結果應等於 f_{k−1}(x;a,−b)。
    """
    if k < 2:
        raise ValueError(f"k 必須 ≥ 2: {k}")
    ek_sign = -1 if k % 2 == 0 else 1
    terms: Dict[Tuple[int, int, int], int] = {}
    for s in range(comb(k, 2) + 1):
        for mu, a_mu in plethysm_e_coeffs(s, k).items():
            q = mu.count(k)
            r = len(mu) - q
            key = (s, r, q)
            terms[key] = terms.get(key, 0) + (-1) ** s * a_mu * ek_sign ** q
    return XPoly.from_terms(terms)


# ---------------------------------------------------------------------------
# 數值檢驗
# ---------------------------------------------------------------------------

def elementary_symmetric(values: Sequence[int]) -> List[int]:
    """[e_0, e_1, …, e_n]"""
    e = [1] + [0] * len(values)
    for v in values:
        for j in range(len(e) - 1, 0, -1):
            e[j] += v * e[j - 1]
    return e


def e_mu(mu: Sequence[int], e: Sequence[int]) -> int:
    return prod(e[part] if part < len(e) else 0 for part in mu)


def schur_dual_jacobi_trudi(lam: PartitionLike, values: Sequence[int]) -> int:
    """s_λ = det(e_{λ'_i − i + j})"""
    conj = Partition.of(lam).conjugate().parts
    if not conj:
        return 1
    e = elementary_symmetric(values)

    def entry(m: int) -> int:
        return e[m] if 0 <= m < len(e) else 0

    size = len(conj)
    matrix = sympy.Matrix(size, size, lambda i, j: entry(conj[i] - i + j))
    return int(matrix.det())


def pairwise_products(values: Sequence[int]) -> List[int]:
    return [x * y for x, y in combinations(values, 2)]
