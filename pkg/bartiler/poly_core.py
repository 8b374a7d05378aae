"""
多項式核心模組
Z[a,b][x] 上的精確整數運算：
- BiPoly：a、b 的稀疏多項式（a 記直放磚數，b 記橫放磚數）
- XPoly / XSeries：係數為 BiPoly 的 x 多項式與截斷級數
- RationalGF：分母常數項為 1 的有理生成函數
以及 Hadamard 乘積、p(x)p(−x) 壓縮、變數代換與線性遞迴取係數
"""
from __future__ import annotations

import logging
import operator
from dataclasses import dataclass
from itertools import islice, zip_longest
from typing import Any, Dict, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

from .errors import (
    NegativeExponent,
    NonUnitConstantTerm,
    NotDivisible,
    OddTermSurvived,
    OutOfRange,
    TruncationMismatch,
)

logger = logging.getLogger(__name__)

Monomial = Tuple[int, int]


def _accumulate(acc: Dict[Monomial, int], p: 'BiPoly', q: 'BiPoly', sign: int = 1) -> None:
    """把 sign·p·q 的各項累加進 acc（就地修改）"""
    q_items = q._terms.items()
    for (a1, b1), c1 in p._terms.items():
        c1 *= sign
        for (a2, b2), c2 in q_items:
            key = (a1 + a2, b1 + b2)
            acc[key] = acc.get(key, 0) + c1 * c2


def _format_monomial(da: int, db: int) -> str:
    parts = []
    if da:
        parts.append('a' if da == 1 else f'a^{da}')
    if db:
        parts.append('b' if db == 1 else f'b^{db}')
    return ''.join(parts)


class BiPoly:
    """Z[a,b] 上的稀疏多項式

    內部以 {(a 次方, b 次方): 係數} 儲存，零係數一律不存，
    因此相等的多項式有相同的表示。建立後不可變。
    """

    __slots__ = ('_terms', '_hash')

    def __init__(self, terms: Optional[Dict[Monomial, int]] = None):
        clean: Dict[Monomial, int] = {}
        for (da, db), c in (terms or {}).items():
            if da < 0 or db < 0:
                raise NegativeExponent(f"BiPoly 不允許負次方: a^{da} b^{db}")
            if c:
                try:
                    clean[(int(da), int(db))] = operator.index(c)
                except TypeError:
                    raise TypeError(f"BiPoly 係數必須是整數，收到 {c!r}") from None
        self._terms = clean
        self._hash: Optional[int] = None

    @classmethod
    def _from_accumulator(cls, acc: Dict[Monomial, int]) -> 'BiPoly':
        obj = cls.__new__(cls)
        obj._terms = {key: c for key, c in acc.items() if c}
        obj._hash = None
        return obj

    @classmethod
    def constant(cls, c: int) -> 'BiPoly':
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, c: int, da: int, db: int) -> 'BiPoly':
        """c·a^da·b^db"""
        return cls({(da, db): c})

    @staticmethod
    def _coerce(other: Any) -> Optional['BiPoly']:
        if isinstance(other, BiPoly):
            return other
        if isinstance(other, int):
            return BiPoly.constant(other)
        return None

    # 基本查詢
    def terms(self) -> List[Tuple[Monomial, int]]:
        """依 (a 次方, b 次方) 遞增排序的 [(單項式, 係數)]"""
        return sorted(self._terms.items())

    def coefficient(self, da: int, db: int) -> int:
        return self._terms.get((da, db), 0)

    def constant_term(self) -> int:
        return self._terms.get((0, 0), 0)

    def total_degrees(self) -> List[int]:
        return sorted({da + db for da, db in self._terms})

    def is_homogeneous(self, degree: Optional[int] = None) -> bool:
        """所有單項式總次數相同（且等於 degree，若有給定）；零多項式視為齊次"""
        degrees = self.total_degrees()
        if not degrees:
            return True
        if len(degrees) > 1:
            return False
        return degree is None or degrees[0] == degree

    def evaluate(self, a_val: Any = 1, b_val: Any = 1) -> Any:
        """代入 a、b 的數值（整數或 Fraction）"""
        if a_val == 1 and b_val == 1:
            return sum(self._terms.values())
        return sum(c * a_val ** da * b_val ** db for (da, db), c in self._terms.items())

    # 運算
    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return self._terms == q._terms

    def __hash__(self) -> int:
        if self._hash is None:
            if set(self._terms) <= {(0, 0)}:
                self._hash = hash(self.constant_term())
            else:
                self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __neg__(self) -> 'BiPoly':
        return BiPoly._from_accumulator({key: -c for key, c in self._terms.items()})

    def __add__(self, other: Any) -> 'BiPoly':
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        acc = dict(self._terms)
        for key, c in q._terms.items():
            acc[key] = acc.get(key, 0) + c
        return BiPoly._from_accumulator(acc)

    __radd__ = __add__

    def __sub__(self, other: Any) -> 'BiPoly':
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return self + (-q)

    def __rsub__(self, other: Any) -> 'BiPoly':
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return q + (-self)

    def __mul__(self, other: Any) -> 'BiPoly':
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        acc: Dict[Monomial, int] = {}
        _accumulate(acc, self, q)
        return BiPoly._from_accumulator(acc)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> 'BiPoly':
        if exponent < 0:
            raise ValueError("BiPoly 只支援非負整數次方")
        result = ONE
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    # 輸出
    def __str__(self) -> str:
        if not self._terms:
            return '0'
        # a 次方遞減、b 次方遞增，例如 a^6 + 6a^4b^2 + 4a^2b^4
        ordered = sorted(self._terms.items(), key=lambda item: (-item[0][0], item[0][1]))
        pieces = []
        for index, ((da, db), c) in enumerate(ordered):
            mono = _format_monomial(da, db)
            magnitude = abs(c)
            body = f"{magnitude}{mono}" if (magnitude != 1 or not mono) else mono
            if index == 0:
                pieces.append(f"-{body}" if c < 0 else body)
            else:
                pieces.append(f" - {body}" if c < 0 else f" + {body}")
        return ''.join(pieces)

    def __repr__(self) -> str:
        return f"BiPoly({str(self)!r})"

    def to_json(self) -> List[Dict[str, Any]]:
        return [{"a": da, "b": db, "c": str(c)} for (da, db), c in self.terms()]

    @classmethod
    def from_json(cls, data: Iterable[Dict[str, Any]]) -> 'BiPoly':
        return cls({(int(t["a"]), int(t["b"])): int(t["c"]) for t in data})


ZERO = BiPoly()
ONE = BiPoly.constant(1)
A = BiPoly.monomial(1, 1, 0)
B = BiPoly.monomial(1, 0, 1)

Coefficient = Union[BiPoly, int]


def _as_bipoly(value: Coefficient) -> BiPoly:
    coerced = BiPoly._coerce(value)
    if coerced is None:
        raise TypeError(f"無法轉換為 BiPoly: {value!r}")
    return coerced


def _convolve(p: Sequence[BiPoly], q: Sequence[BiPoly], limit: Optional[int] = None) -> List[BiPoly]:
    """係數序列的摺積；limit 為保留的最高 x 次方"""
    if not p or not q:
        return []
    top = len(p) + len(q) - 2
    if limit is not None:
        top = min(top, limit)
    acc: List[Dict[Monomial, int]] = [{} for _ in range(top + 1)]
    for i, pi in enumerate(p):
        if i > top:
            break
        if not pi:
            continue
        for j, qj in enumerate(q):
            if i + j > top:
                break
            if qj:
                _accumulate(acc[i + j], pi, qj)
    return [BiPoly._from_accumulator(bucket) for bucket in acc]


def _format_x_terms(coeffs: Sequence[BiPoly]) -> str:
    pieces: List[str] = []
    for i, c in enumerate(coeffs):
        if not c:
            continue
        xpart = '' if i == 0 else ('x' if i == 1 else f'x^{i}')
        terms = c.terms()
        if len(terms) == 1:
            text = str(c)
            negative = text.startswith('-')
            body = text.lstrip('-')
            if xpart and body == '1':
                body = ''
            body = f"{body}{xpart}"
        else:
            negative = all(coef < 0 for _, coef in terms)
            inner = -c if negative else c
            body = f"({inner}){xpart}"
        if not pieces:
            pieces.append(f"-{body}" if negative else body)
        else:
            pieces.append(f" - {body}" if negative else f" + {body}")
    return ''.join(pieces) if pieces else '0'


class XPoly:
    """係數為 BiPoly 的 x 多項式（依 x 次方的稠密序列，尾端零項已去除）"""

    __slots__ = ('_coeffs',)

    def __init__(self, coeffs: Iterable[Coefficient] = ()):
        cs = [_as_bipoly(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self._coeffs: Tuple[BiPoly, ...] = tuple(cs)

    @classmethod
    def from_terms(cls, terms: Dict[Tuple[int, int, int], int]) -> 'XPoly':
        """由 {(x 次方, a 次方, b 次方): 係數} 建立"""
        if not terms:
            return cls()
        top = max(key[0] for key in terms)
        buckets: List[Dict[Monomial, int]] = [{} for _ in range(top + 1)]
        for (dx, da, db), c in terms.items():
            if dx < 0:
                raise NegativeExponent(f"x 不允許負次方: x^{dx}")
            buckets[dx][(da, db)] = buckets[dx].get((da, db), 0) + c
        return cls(BiPoly(bucket) for bucket in buckets)

    @staticmethod
    def _coerce(other: Any) -> Optional['XPoly']:
        if isinstance(other, XPoly):
            return other
        if isinstance(other, (BiPoly, int)):
            return XPoly([other])
        return None

    @property
    def coeffs(self) -> Tuple[BiPoly, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        """最高非零 x 次方；零多項式為 -1"""
        return len(self._coeffs) - 1

    def coeff(self, i: int) -> BiPoly:
        if 0 <= i < len(self._coeffs):
            return self._coeffs[i]
        return ZERO

    def __iter__(self) -> Iterator[BiPoly]:
        return iter(self._coeffs)

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other: object) -> bool:
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return self._coeffs == q._coeffs

    def __hash__(self) -> int:
        if len(self._coeffs) <= 1:
            return hash(self.coeff(0))
        return hash(self._coeffs)

    def __neg__(self) -> 'XPoly':
        return XPoly(-c for c in self._coeffs)

    def __add__(self, other: Any) -> 'XPoly':
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return XPoly(p + r for p, r in zip_longest(self._coeffs, q._coeffs, fillvalue=ZERO))

    __radd__ = __add__

    def __sub__(self, other: Any) -> 'XPoly':
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return self + (-q)

    def __rsub__(self, other: Any) -> 'XPoly':
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return q + (-self)

    def __mul__(self, other: Any) -> 'XPoly':
        if isinstance(other, (BiPoly, int)):
            return self.scale(other)
        if not isinstance(other, XPoly):
            return NotImplemented
        return XPoly(_convolve(self._coeffs, other._coeffs))

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> 'XPoly':
        if exponent < 0:
            raise ValueError("XPoly 只支援非負整數次方")
        result = XPoly([ONE])
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def scale(self, c: Coefficient) -> 'XPoly':
        factor = _as_bipoly(c)
        return XPoly(coef * factor for coef in self._coeffs)

    def shift(self, n: int) -> 'XPoly':
        """乘上 x^n"""
        if not self._coeffs:
            return self
        return XPoly([ZERO] * n + list(self._coeffs))

    def negate_x(self) -> 'XPoly':
        """p(−x)"""
        return XPoly(-c if i % 2 else c for i, c in enumerate(self._coeffs))

    def evaluate(self, a_val: Any = 1, b_val: Any = 1) -> List[Any]:
        """代入 a、b 數值後的單變數係數串列"""
        return [c.evaluate(a_val, b_val) for c in self._coeffs]

    def truncate(self, order: int) -> 'XSeries':
        return XSeries(order, self._coeffs[:order + 1])

    def exact_div(self, divisor: 'XPoly') -> 'XPoly':
        """精確除法；divisor 常數項須為 1，有餘式則拋出 NotDivisible"""
        if divisor.coeff(0) != ONE:
            raise NonUnitConstantTerm(f"除式常數項不是 1: {divisor.coeff(0)}")
        if not self._coeffs:
            return XPoly()
        quotient_degree = self.degree - divisor.degree
        if quotient_degree < 0:
            raise NotDivisible(f"次數 {self.degree} 的多項式不能被次數 {divisor.degree} 的多項式整除")
        quotient = XPoly((series_invert(divisor, quotient_degree) * self).coeffs)
        if quotient * divisor != self:
            raise NotDivisible("多項式除法有非零餘式")
        return quotient

    def __str__(self) -> str:
        return _format_x_terms(self._coeffs)

    def __repr__(self) -> str:
        return f"XPoly({str(self)!r})"

    def to_json(self) -> List[List[Dict[str, Any]]]:
        return [c.to_json() for c in self._coeffs]

    @classmethod
    def from_json(cls, data: Iterable[Iterable[Dict[str, Any]]]) -> 'XPoly':
        return cls(BiPoly.from_json(c) for c in data)


X = XPoly([ZERO, ONE])


class XSeries:
    """截斷至 x^T 的冪級數，恰有 T+1 個 BiPoly 係數"""

    __slots__ = ('order', '_coeffs')

    def __init__(self, order: int, coeffs: Iterable[Coefficient] = ()):
        if order < 0:
            raise OutOfRange(f"截斷階數必須為非負整數: {order}")
        cs = [_as_bipoly(c) for c in islice(coeffs, order + 1)]
        cs.extend([ZERO] * (order + 1 - len(cs)))
        self.order = order
        self._coeffs: Tuple[BiPoly, ...] = tuple(cs)

    @property
    def coeffs(self) -> Tuple[BiPoly, ...]:
        return self._coeffs

    def coeff(self, n: int) -> BiPoly:
        if not 0 <= n <= self.order:
            raise OutOfRange(f"x^{n} 超出截斷階數 {self.order}")
        return self._coeffs[n]

    def __getitem__(self, n: int) -> BiPoly:
        return self.coeff(n)

    def _check(self, other: 'XSeries') -> None:
        if self.order != other.order:
            raise TruncationMismatch(f"截斷階數不一致: {self.order} 與 {other.order}")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, XSeries):
            return NotImplemented
        return self.order == other.order and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash((self.order, self._coeffs))

    def __add__(self, other: 'XSeries') -> 'XSeries':
        self._check(other)
        return XSeries(self.order, (p + q for p, q in zip(self._coeffs, other._coeffs)))

    def __sub__(self, other: 'XSeries') -> 'XSeries':
        self._check(other)
        return XSeries(self.order, (p - q for p, q in zip(self._coeffs, other._coeffs)))

    def __mul__(self, other: Any) -> 'XSeries':
        if isinstance(other, XSeries):
            self._check(other)
            return XSeries(self.order, _convolve(self._coeffs, other._coeffs, self.order))
        if isinstance(other, XPoly):
            return XSeries(self.order, _convolve(self._coeffs, other.coeffs, self.order))
        if isinstance(other, (BiPoly, int)):
            factor = _as_bipoly(other)
            return XSeries(self.order, (c * factor for c in self._coeffs))
        return NotImplemented

    __rmul__ = __mul__

    def evaluate(self, a_val: Any = 1, b_val: Any = 1) -> List[Any]:
        return [c.evaluate(a_val, b_val) for c in self._coeffs]

    def __str__(self) -> str:
        return f"{_format_x_terms(self._coeffs)} + O(x^{self.order + 1})"

    def __repr__(self) -> str:
        return f"XSeries({self.order}, {str(self)!r})"

    def to_json(self) -> List[List[Dict[str, Any]]]:
        return [c.to_json() for c in self._coeffs]


@dataclass(frozen=True)
class RationalGF:
    """有理生成函數 num/den，den 常數項必為 1；不做約分"""
    num: XPoly
    den: XPoly

    def __post_init__(self):
        if self.den.coeff(0) != ONE:
            raise NonUnitConstantTerm(f"分母常數項必須為 1，目前為 {self.den.coeff(0)}")

    def series(self, order: int) -> XSeries:
        return rational_to_series(self, order)

    def coeff_at(self, n: int, a_val: int = 1, b_val: int = 1) -> int:
        return coeff_at(self, n, a_val, b_val)

    def __add__(self, other: 'RationalGF') -> 'RationalGF':
        if not isinstance(other, RationalGF):
            return NotImplemented
        if self.den == other.den:
            return RationalGF(self.num + other.num, self.den)
        return RationalGF(self.num * other.den + other.num * self.den, self.den * other.den)

    def __str__(self) -> str:
        return f"({self.num}) / ({self.den})"

    def to_json(self) -> Dict[str, Any]:
        return {"num": self.num.to_json(), "den": self.den.to_json()}


def bipoly_arith(p: BiPoly, q: BiPoly, op: str) -> BiPoly:
    """Z[a,b] 的加、減、乘

    Args:
        p, q: 運算元
        op: 'add'、'sub' 或 'mul'

    Returns:
        運算結果
    """
    if op == 'add':
        return p + q
    if op == 'sub':
        return p - q
    if op == 'mul':
        return p * q
    raise ValueError(f"不支援的運算: {op}")


def series_invert(p: XPoly, order: int) -> XSeries:
    """回傳 S 使 p·S ≡ 1 (mod x^{T+1})；p 常數項須為 1"""
    if p.coeff(0) != ONE:
        raise NonUnitConstantTerm(f"常數項不是 1，無法反轉: {p.coeff(0)}")
    out: List[BiPoly] = [ONE]
    taps = [(i, c) for i, c in enumerate(p.coeffs) if i and c]
    for n in range(1, order + 1):
        acc: Dict[Monomial, int] = {}
        for i, c in taps:
            if i > n:
                break
            _accumulate(acc, c, out[n - i], -1)
        out.append(BiPoly._from_accumulator(acc))
    return XSeries(order, out)


def hadamard_product(left: XSeries, right: XSeries) -> XSeries:
    """逐項相乘 (A*B)_n = A_n·B_n"""
    left._check(right)
    return XSeries(left.order, (p * q for p, q in zip(left.coeffs, right.coeffs)))


def rational_to_series(R: RationalGF, order: int) -> XSeries:
    return series_invert(R.den, order) * R.num


def iter_coefficients(R: RationalGF, a_val: int = 1, b_val: int = 1) -> Iterator[int]:
    """代入 a、b 後，依 c_n = num_n − Σ den_i·c_{n−i} 逐項產生係數

    只保留最後 deg(den) 個值（環狀緩衝），適合極大的 n。
    """
    num = R.num.evaluate(a_val, b_val)
    den = R.den.evaluate(a_val, b_val)
    if not den or den[0] != 1:
        raise NonUnitConstantTerm(f"代入 a={a_val}, b={b_val} 後分母常數項不是 1")
    width = len(den) - 1
    taps = [(i, den[i]) for i in range(1, width + 1) if den[i]]
    ring = [0] * width
    n = 0
    while True:
        c = num[n] if n < len(num) else 0
        for i, d in taps:
            c -= d * ring[(n - i) % width]
        if width:
            ring[n % width] = c
        yield c
        n += 1


def coeff_at(R: RationalGF, n: int, a_val: int = 1, b_val: int = 1) -> int:
    """代入 a、b 後 x^n 的係數，O(n·deg den) 次整數運算"""
    if n < 0:
        raise OutOfRange(f"係數索引必須為非負整數: {n}")
    return next(islice(iter_coefficients(R, a_val, b_val), n, None))


def reciprocal_one_minus(R: RationalGF) -> RationalGF:
    """1/(1−R)，要求 R(0)=0"""
    if R.num.coeff(0):
        raise NonUnitConstantTerm("1/(1−R) 需要 R 的常數項為 0")
    return RationalGF(R.den, R.den - R.num)


def sqrt_pair_product(p: XPoly) -> XPoly:
    """回傳 q 使 q(x²) = p(x)·p(−x)"""
    r = p * p.negate_x()
    survivors = [i for i in range(1, len(r.coeffs), 2) if r.coeff(i)]
    if survivors:
        raise OddTermSurvived(f"p(x)p(−x) 出現奇次項: x^{survivors[0]}")
    return XPoly(r.coeffs[::2])


@dataclass(frozen=True)
class Substitution:
    """單項式代換，每個變數對應 (係數, a 次方, b 次方)

    a → s·a^i·b^j，b → s·a^i·b^j，x → s·a^i·b^j·x。
    次方可以是負數（例如 b → b·a⁻¹），只要代換後每一項都還是多項式。
    """
    a: Tuple[int, int, int] = (1, 1, 0)
    b: Tuple[int, int, int] = (1, 0, 1)
    x: Tuple[int, int, int] = (1, 0, 0)

    @classmethod
    def b_power(cls, k: int, sign: int = 1) -> 'Substitution':
        """b → sign·b^k"""
        return cls(b=(sign, 0, k))

    @classmethod
    def a_to_one(cls) -> 'Substitution':
        return cls(a=(1, 0, 0))

    @classmethod
    def x_scale(cls, c: int) -> 'Substitution':
        return cls(x=(c, 0, 0))

    @classmethod
    def homogenize(cls) -> 'Substitution':
        """x → a²x 與 b → b·a⁻¹ 的合成：x^n 的係數補上 a 次方成為 2n 次齊次式"""
        return cls(b=(1, -1, 1), x=(1, 2, 0))

    def apply(self, c: int, da: int, db: int, dx: int = 0) -> Tuple[int, int, int]:
        sa, aa, ab = self.a
        sb, ba, bb = self.b
        sx, xa, xb = self.x
        ea = aa * da + ba * db + xa * dx
        eb = ab * da + bb * db + xb * dx
        if ea < 0 or eb < 0:
            raise NegativeExponent(f"代換後出現負次方: a^{ea} b^{eb} (原項 a^{da} b^{db} x^{dx})")
        return c * sa ** da * sb ** db * sx ** dx, ea, eb


def _substitute_bipoly(p: BiPoly, mapping: Substitution, dx: int) -> BiPoly:
    acc: Dict[Monomial, int] = {}
    for (da, db), c in p._terms.items():
        coef, ea, eb = mapping.apply(c, da, db, dx)
        acc[(ea, eb)] = acc.get((ea, eb), 0) + coef
    return BiPoly._from_accumulator(acc)


def substitute(p: Union[BiPoly, XPoly], mapping: Substitution) -> Union[BiPoly, XPoly]:
    """對 BiPoly 或 XPoly 做單項式代換，回傳同型別"""
    if isinstance(p, BiPoly):
        return _substitute_bipoly(p, mapping, 0)
    if isinstance(p, XPoly):
        return XPoly(_substitute_bipoly(c, mapping, n) for n, c in enumerate(p.coeffs))
    raise TypeError(f"不支援代換的型別: {type(p).__name__}")
