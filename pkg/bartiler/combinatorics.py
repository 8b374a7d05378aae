"""
奇數組合與 f_N 多項式模組
包含：
- 標準排列 σ_N 與統計量 S_N
- OC_{≤N}（總和不超過 N 的奇數組合）列舉與計數
- 滑動標準形、c_s(N) 封閉公式
- f_N(x;a,b) 的封閉式與組合式兩種建構
- P_α 集合判定、TComp 列舉
"""
from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import accumulate
from math import comb
from typing import Dict, FrozenSet, Iterable, List, Sequence, Tuple, Union

from .errors import NotOddComposition, OutOfRange, SumExceedsN
from .poly_core import XPoly

logger = logging.getLogger(__name__)

F_MODES = ('closed', 'combinatorial')


@dataclass(frozen=True)
class OddComposition:
    """OC_{≤N} 的元素：每一部分皆為正奇數，總和不超過 N"""
    parts: Tuple[int, ...]
    n: int

    def __post_init__(self):
        object.__setattr__(self, 'parts', tuple(int(p) for p in self.parts))
        if self.n < 1:
            raise OutOfRange(f"N 必須為正整數: {self.n}")
        bad = [p for p in self.parts if p <= 0 or p % 2 == 0]
        if bad:
            raise NotOddComposition(f"{self.parts} 含有非正奇數的部分: {bad}")
        if sum(self.parts) > self.n:
            raise SumExceedsN(f"{self.parts} 總和 {sum(self.parts)} 超過 N={self.n}")

    @property
    def length(self) -> int:
        return len(self.parts)

    @property
    def total(self) -> int:
        return sum(self.parts)

    def partial_sums(self) -> Tuple[int, ...]:
        return tuple(accumulate(self.parts))

    def to_json(self) -> List[int]:
        return list(self.parts)


@dataclass(frozen=True)
class TCompComposition:
    """TComp(N,k) 的元素：每部分 ≤ k−1，相鄰兩部分和 ≥ k"""
    parts: Tuple[int, ...]
    k: int

    def __post_init__(self):
        object.__setattr__(self, 'parts', tuple(int(p) for p in self.parts))
        if any(p < 1 or p > self.k - 1 for p in self.parts):
            raise OutOfRange(f"{self.parts} 的部分必須介於 1 與 {self.k - 1}")
        if any(x + y < self.k for x, y in zip(self.parts, self.parts[1:])):
            raise OutOfRange(f"{self.parts} 有相鄰兩部分和小於 {self.k}")

    @property
    def length(self) -> int:
        return len(self.parts)

    def to_json(self) -> List[int]:
        return list(self.parts)


OddLike = Union[OddComposition, Sequence[int]]


def _as_oc(N: int, alpha: OddLike) -> OddComposition:
    if isinstance(alpha, OddComposition):
        if alpha.n != N:
            return OddComposition(alpha.parts, N)
        return alpha
    return OddComposition(tuple(alpha), N)


def binom(n: int, r: int) -> int:
    """二項式係數；r<0 或 r>n（含 n<0）時為 0"""
    if r < 0 or n < 0 or r > n:
        return 0
    return comb(n, r)


def sigma(N: int, i: int) -> int:
    """標準排列 σ_N：i 為偶數時 i/2，奇數時 N+(1−i)/2"""
    if not 1 <= i <= N:
        raise OutOfRange(f"σ_{N} 的定義域是 1..{N}，收到 {i}")
    if i % 2 == 0:
        return i // 2
    return N + (1 - i) // 2


def sigma_word(N: int) -> Tuple[int, ...]:
    return tuple(sigma(N, i) for i in range(1, N + 1))


def enumerate_oc(N: int) -> List[OddComposition]:
    """列出 OC_{≤N}（含空組合），依字典序且前綴在前"""
    if N < 1:
        raise OutOfRange(f"N 必須為正整數: {N}")
    out: List[OddComposition] = []
    prefix: List[int] = []

    def walk(remaining: int) -> None:
        out.append(OddComposition(tuple(prefix), N))
        for part in range(1, remaining + 1, 2):
            prefix.append(part)
            walk(remaining - part)
            prefix.pop()

    walk(N)
    return out


def s_stat(N: int, alpha: OddLike) -> int:
    """S_N(α) = Σ σ_N(部分和)；空組合為 0"""
    oc = _as_oc(N, alpha)
    return sum(sigma(N, s) for s in oc.partial_sums())


def canonical_form(N: int, alpha: OddLike) -> OddComposition:
    """滑動標準形 (1,…,1,a)，以封閉公式計算

    奇數長度 2ℓ+1 → (1^{2ℓ}, α₁+α₃+…−ℓ)；偶數長度 2ℓ → (1^{2ℓ−1}, α₂+α₄+…−ℓ+1)
    """
    oc = _as_oc(N, alpha)
    parts = oc.parts
    if not parts:
        return oc
    ell = len(parts) // 2
    if len(parts) % 2:
        return OddComposition((1,) * (2 * ell) + (sum(parts[0::2]) - ell,), N)
    return OddComposition((1,) * (2 * ell - 1) + (sum(parts[1::2]) - ell + 1,), N)


def slide_canonical_reference(N: int, alpha: OddLike) -> OddComposition:
    """以逐次「盡量往左滑」求標準形，只作為 canonical_form 的對照"""
    parts = list(_as_oc(N, alpha).parts)
    while True:
        j = next((idx for idx in range(len(parts) - 1) if parts[idx] != 1), None)
        if j is None:
            return OddComposition(tuple(parts), N)
        if j < len(parts) - 2:
            parts[j + 2] = parts[j] + parts[j + 2] - 1
        parts[j] = 1


def c_closed(s: int, N: int) -> int:
    """f_N 中 x^s 的係數 c_s(N)（四種情況的封閉公式）"""
    top = N * (N + 1) // 2
    if not 0 <= s <= top:
        raise OutOfRange(f"s 必須介於 0 與 {top}，收到 {s}")
    if s == 0:
        return 1
    half = N // 2
    length = (2 * s) // (N + 1)
    q1, r1 = divmod(s, N + 1)
    q0, r0 = divmod(s, N)
    if length % 2 == 1 and r1 > half:
        return (-1) ** (q1 + 1) * binom(N - r1, q1) * binom(q1 + r1 - half - 1, q1)
    if length % 2 == 0 and r0 <= half:
        return (-1) ** q0 * binom(r0 - 1, q0 - 1) * binom(half - r0 + q0, q0)
    return 0


@lru_cache(maxsize=None)
def f_poly(N: int, mode: str = 'closed') -> XPoly:
    """f_N(x;a,b)

    Args:
        N: 正整數
        mode: 'closed' 使用 c_s(N) 封閉公式；'combinatorial' 對 OC_{≤N} 做帶號求和

    Returns:
        x 次數為 N(N+1)/2 的 XPoly
    """
    if N < 1:
        raise OutOfRange(f"N 必須為正整數: {N}")
    terms: Dict[Tuple[int, int, int], int] = {}
    if mode == 'closed':
        for s in range(N * (N + 1) // 2 + 1):
            c = c_closed(s, N)
            if c:
                terms[(s, (2 * s) % (N + 1), (2 * s) // (N + 1))] = c
    elif mode == 'combinatorial':
        for oc in enumerate_oc(N):
            s = s_stat(N, oc)
            key = (s, (2 * s) % (N + 1), oc.length)
            terms[key] = terms.get(key, 0) + (-1) ** ((oc.length + 1) // 2)
    else:
        raise ValueError(f"未知的 f_N 建構方式: {mode}（可用 {', '.join(F_MODES)}）")
    return XPoly.from_terms(terms)


def s_histogram(N: int) -> Dict[int, int]:
    """{s: 使 S_N(α)=s 的 α 個數}"""
    return dict(Counter(s_stat(N, oc) for oc in enumerate_oc(N)))


def oc_count_by_parts(n: int, k: int) -> int:
    """n 分成 k 個奇數部分的組合數 C((n+k)/2−1, k−1)"""
    if n < 0 or k < 0:
        raise OutOfRange(f"n、k 必須為非負整數: n={n}, k={k}")
    if n == 0 and k == 0:
        return 1
    if (n + k) % 2:
        return 0
    return binom((n + k) // 2 - 1, k - 1)


def oc_leq_count(n: int, k: int) -> int:
    """總和 ≤ n、恰 k 個奇數部分的組合數 C(⌊(n+k)/2⌋, k)"""
    if n < 0 or k < 0:
        raise OutOfRange(f"n、k 必須為非負整數: n={n}, k={k}")
    return binom((n + k) // 2, k)


def palpha(N: int, alpha: OddLike) -> FrozenSet[int]:
    """P_α = {σ_N(部分和)}"""
    oc = _as_oc(N, alpha)
    return frozenset(sigma(N, s) for s in oc.partial_sums())


def is_palpha_set(S: Iterable[int], N: int) -> bool:
    """判斷非空集合 S ⊆ [N] 是否為某個 P_α

    S = {x_1 > … > x_ℓ}，x_{ℓ+1} = 0，須對所有 i 滿足
    x_i + x_{ℓ+1−i} ≥ N+1 且 x_{i+1} + x_{ℓ+1−i} < N+1。
    """
    xs = sorted(set(S), reverse=True)
    if not xs or xs[0] > N or xs[-1] < 1:
        return False
    ell = len(xs)
    padded = xs + [0]
    for i in range(ell):
        mirror = xs[ell - 1 - i]
        if padded[i] + mirror < N + 1:
            return False
        if padded[i + 1] + mirror >= N + 1:
            return False
    return True


def tcomp_enumerate(N: int, k: int) -> List[TCompComposition]:
    """列出 TComp(N,k)，字典序"""
    if N < 0 or k < 2:
        raise OutOfRange(f"需要 N ≥ 0 且 k ≥ 2: N={N}, k={k}")
    out: List[TCompComposition] = []
    prefix: List[int] = []

    def walk(remaining: int) -> None:
        if remaining == 0:
            out.append(TCompComposition(tuple(prefix), k))
            return
        low = max(1, k - prefix[-1]) if prefix else 1
        for part in range(low, min(k - 1, remaining) + 1):
            prefix.append(part)
            walk(remaining - part)
            prefix.pop()

    walk(N)
    return out
