"""Exact univariate polynomials and rational functions over Q, plus real-root isolation.

Coefficients are stored as :class:`fractions.Fraction` in ascending powers.
Floats only enter at root refinement and at explicit ``evalf`` calls.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Iterable, Sequence, Union

Scalar = Union[int, Fraction]


def as_fraction(value) -> Fraction:
    """Convert ints, Fractions and ``"p/q"`` strings to a Fraction.

    Floats are converted through their decimal repr so that ``0.1`` becomes 1/10
    rather than the nearest binary fraction.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, _RationalABC)):
        return Fraction(value)
    if isinstance(value, float):
        if not math.isfinite(value):
            raise ValueError(f"cannot represent {value!r} exactly")
        return Fraction(repr(value))
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot convert {type(value).__name__} to Fraction")


class RatPoly:
    """Dense polynomial with exact rational coefficients, ascending powers.

    Trailing zeros are stripped, so the zero polynomial has ``coeffs == ()``
    and ``degree == -1``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("RatPoly is immutable")

    # construction helpers

    @classmethod
    def const(cls, c: Scalar) -> "RatPoly":
        return cls((c,))

    @classmethod
    def monomial(cls, power: int, c: Scalar = 1) -> "RatPoly":
        return cls([0] * power + [c])

    @classmethod
    def x(cls) -> "RatPoly":
        return cls((0, 1))

    @classmethod
    def from_roots(cls, roots: Iterable) -> "RatPoly":
        p = cls.const(1)
        for r in roots:
            p = p * cls((-as_fraction(r), 1))
        return p

    # basic properties

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lead(self) -> Fraction:
        if not self.coeffs:
            return Fraction(0)
        return self.coeffs[-1]

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __getitem__(self, i: int) -> Fraction:
        """Coefficient of x**i (zero beyond the degree)."""
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, RatPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == RatPoly.const(other).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"RatPoly({[str(c) for c in self.coeffs]})"

    def __str__(self) -> str:
        return self.to_str()

    def to_str(self, var: str = "x") -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = -c if c < 0 else c
            if i == 0:
                body = str(mag)
            else:
                mono = var if i == 1 else f"{var}^{i}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    # arithmetic

    @staticmethod
    def _coerce(other) -> "RatPoly":
        if isinstance(other, RatPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return RatPoly.const(other)
        return NotImplemented

    def __neg__(self) -> "RatPoly":
        return RatPoly(-c for c in self.coeffs)

    def __pos__(self) -> "RatPoly":
        return self

    def __add__(self, other) -> "RatPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return RatPoly(out)

    __radd__ = __add__

    def __sub__(self, other) -> "RatPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "RatPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other) -> "RatPoly":
        if isinstance(other, (int, Fraction)):
            return RatPoly(c * other for c in self.coeffs)
        if not isinstance(other, RatPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return RatPoly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
        return RatPoly(out)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RatPoly":
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division of polynomial by zero scalar")
            inv = 1 / Fraction(other)
            return RatPoly(c * inv for c in self.coeffs)
        if isinstance(other, RatPoly):
            q, r = divmod(self, other)
            if r:
                raise ArithmeticError(f"{other} does not divide {self}")
            return q
        return NotImplemented

    def __pow__(self, k: int) -> "RatPoly":
        if not isinstance(k, int) or k < 0:
            raise ValueError("only non-negative integer powers are supported")
        result = RatPoly.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __divmod__(self, d: "RatPoly"):
        if not isinstance(d, RatPoly):
            d = RatPoly._coerce(d)
            if d is NotImplemented:
                return d
        if d.is_zero():
            raise ZeroDivisionError("polynomial division by the zero polynomial")
        rem = list(self.coeffs)
        dd = d.degree
        if len(rem) - 1 < dd:
            return RatPoly(), self
        inv_lead = 1 / d.lead
        quot = [Fraction(0)] * (len(rem) - dd)
        for k in range(len(rem) - 1 - dd, -1, -1):
            c = rem[k + dd] * inv_lead
            quot[k] = c
            if c:
                for j, dj in enumerate(d.coeffs):
                    rem[k + j] -= c * dj
        return RatPoly(quot), RatPoly(rem[:dd])

    def __floordiv__(self, d):
        return divmod(self, d)[0]

    def __mod__(self, d):
        return divmod(self, d)[1]

    # calculus and evaluation

    def derivative(self, order: int = 1) -> "RatPoly":
        if order < 0:
            raise ValueError("derivative order must be non-negative")
        cs = list(self.coeffs)
        for _ in range(order):
            cs = [i * c for i, c in enumerate(cs)][1:]
        return RatPoly(cs)

    def taylor_coeff(self, i: int) -> Fraction:
        """i-th derivative at 0, i.e. ``i! * coeff[i]``."""
        return self[i] * math.factorial(i)

    def __call__(self, x):
        """Horner evaluation. Exact for Fraction/int/RatPoly arguments."""
        if isinstance(x, float):
            return self.evalf(x)
        acc = Fraction(0) if not isinstance(x, RatPoly) else RatPoly()
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def evalf(self, x: float) -> float:
        acc = 0.0
        for c in reversed(self.coeffs):
            acc = acc * x + float(c)
        return acc

    def compose(self, inner: "RatPoly") -> "RatPoly":
        return self(inner)

    def monic(self) -> "RatPoly":
        if self.is_zero():
            raise ZeroDivisionError("zero polynomial has no monic form")
        return self / self.lead

    def primitive_sign(self) -> int:
        return 1 if self.lead > 0 else -1

    def float_coeffs(self) -> list[float]:
        return [float(c) for c in self.coeffs]


X = RatPoly.x()


def poly_arith(p: RatPoly, q: RatPoly, op: str) -> RatPoly:
    """Dispatch helper: ``op`` in {"add", "sub", "mul"}."""
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    raise ValueError(f"unknown operation {op!r}")


def poly_divmod(p: RatPoly, d: RatPoly) -> tuple[RatPoly, RatPoly]:
    return divmod(p, d)


def poly_derivative(p: RatPoly, order: int = 1) -> RatPoly:
    return p.derivative(order)


def poly_gcd(p: RatPoly, q: RatPoly) -> RatPoly:
    """Monic gcd (zero only when both inputs are zero)."""
    a, b = p, q
    while b:
        a, b = b, a % b
    if a.is_zero():
        return a
    return a.monic()


def square_free_decomposition(p: RatPoly) -> list[tuple[RatPoly, int]]:
    """Yun's algorithm: ``p = lead * prod(f_i ** m_i)`` with each f_i monic and square-free."""
    if p.is_zero():
        raise ValueError("zero polynomial has no square-free decomposition")
    if p.degree == 0:
        return []
    dp = p.derivative()
    a = poly_gcd(p, dp)
    b = p.monic() / a
    c = dp / p.lead / a
    d = c - b.derivative()
    out = []
    i = 1
    while b.degree > 0:
        g = poly_gcd(b, d)
        if g.degree > 0:
            out.append((g, i))
        b = b / g
        c = d / g
        d = c - b.derivative()
        i += 1
    return out


def is_square_free(p: RatPoly) -> bool:
    return poly_gcd(p, p.derivative()).degree <= 0


# Sturm sequences and real root isolation


def primitive_part(p: RatPoly) -> RatPoly:
    """Positive rational multiple of ``p`` with coprime integer coefficients."""
    if p.is_zero():
        return p
    den = 1
    for c in p.coeffs:
        den = den * c.denominator // math.gcd(den, c.denominator)
    ints = [int(c * den) for c in p.coeffs]
    g = 0
    for v in ints:
        g = math.gcd(g, v)
    return RatPoly([Fraction(v // g) for v in ints])


def sturm_sequence(p: RatPoly) -> list[RatPoly]:
    """Sturm chain, each member rescaled by a positive constant to keep numbers small."""
    seq = [primitive_part(p), primitive_part(p.derivative())]
    while seq[-1].degree > 0:
        r = seq[-2] % seq[-1]
        if r.is_zero():
            break
        seq.append(primitive_part(-r))
    return seq


def _sign(v: Fraction) -> int:
    return (v > 0) - (v < 0)


def _int_sign(coeffs, x: Fraction) -> int:
    # sign of den^d * p(num/den) for integer coefficients, all in integers
    num, den = x.numerator, x.denominator
    acc = coeffs[-1].numerator
    pw = 1
    for c in reversed(coeffs[:-1]):
        pw *= den
        acc = acc * num + c.numerator * pw
    return (acc > 0) - (acc < 0)


def _sign_at(p: RatPoly, x) -> int:
    if x == math.inf:
        return _sign(p.lead) if p.degree >= 0 else 0
    if x == -math.inf:
        return _sign(p.lead) * (-1) ** p.degree if p.degree >= 0 else 0
    if p.degree >= 0 and isinstance(x, (Fraction, int)) and all(c.denominator == 1 for c in p.coeffs):
        return _int_sign(p.coeffs, Fraction(x))
    return _sign(p(x))


def sign_variations(seq: Sequence[RatPoly], x) -> int:
    signs = [s for s in (_sign_at(q, x) for q in seq) if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def sturm_count(p: RatPoly, lo=-math.inf, hi=math.inf, seq=None) -> int:
    """Number of distinct real roots of ``p`` in the half-open interval (lo, hi]."""
    if p.is_zero():
        raise ValueError("zero polynomial has infinitely many roots")
    if p.degree == 0:
        return 0
    seq = seq if seq is not None else sturm_sequence(p)
    return sign_variations(seq, lo) - sign_variations(seq, hi)


def cauchy_bound(p: RatPoly) -> Fraction:
    """All real and complex roots satisfy ``|z| < 1 + max|a_i / a_n|``."""
    if p.degree < 1:
        return Fraction(1)
    lead = abs(p.lead)
    return 1 + max(abs(c) for c in p.coeffs[:-1]) / lead


@dataclass(frozen=True)
class RealRoot:
    value: float
    multiplicity: int
    lo: Fraction
    hi: Fraction

    def __float__(self) -> float:
        return self.value


def _isolate(p: RatPoly, seq, lo: Fraction, hi: Fraction, count: int, out: list):
    # invariant: p(lo) != 0 and exactly `count` distinct roots in (lo, hi]
    if count == 0:
        return
    if count == 1:
        out.append((lo, hi))
        return
    mid = (lo + hi) / 2
    if _sign_at(p, mid) == 0:
        # exact rational root: split into (lo, mid-eps], [mid], (mid+eps, hi]
        eps = (hi - lo) / 64
        while sturm_count(p, mid - eps, mid + eps, seq) != 1 or not _sign_at(p, mid - eps) or not _sign_at(p, mid + eps):
            eps /= 2
        out.append((mid - eps, mid + eps))
        left = sturm_count(p, lo, mid - eps, seq)
        _isolate(p, seq, lo, mid - eps, left, out)
        _isolate(p, seq, mid + eps, hi, count - left - 1, out)
        return
    left = sturm_count(p, lo, mid, seq)
    _isolate(p, seq, lo, mid, left, out)
    _isolate(p, seq, mid, hi, count - left, out)


def simplest_between(lo: Fraction, hi: Fraction) -> Fraction:
    """Rational with the smallest denominator in the closed interval [lo, hi]."""
    lo, hi = as_fraction(lo), as_fraction(hi)
    if lo > hi:
        lo, hi = hi, lo
    if lo <= 0 <= hi:
        return Fraction(0)
    if hi < 0:
        return -simplest_between(-hi, -lo)
    fl = lo.numerator // lo.denominator
    if Fraction(fl) == lo:
        return lo
    if fl + 1 <= hi:
        return Fraction(fl + 1)
    # lo, hi share the integer part; recurse on reciprocals of the fractional parts
    return fl + 1 / simplest_between(1 / (hi - fl), 1 / (lo - fl))


def refine_root(p: RatPoly, lo: Fraction, hi: Fraction, tol) -> tuple[Fraction, Fraction]:
    """Bisect a sign-change bracket (lo, hi] of p down to width below ``tol``."""
    p = primitive_part(p)
    slo = _sign_at(p, lo)
    shi = _sign_at(p, hi)
    if shi == 0:
        return hi, hi
    tol_q = as_fraction(tol)
    while hi - lo >= tol_q:
        mid = (lo + hi) / 2
        s = _sign_at(p, mid)
        if s == 0:
            return mid, mid
        if s == slo:
            lo, slo = mid, s
        else:
            hi = mid
    return lo, hi


def isolate_real_roots(p: RatPoly) -> list[tuple[Fraction, Fraction]]:
    """Disjoint rational brackets (lo, hi], one per distinct real root of a square-free p."""
    if p.degree < 1:
        return []
    p = primitive_part(p)
    seq = sturm_sequence(p)
    bound = cauchy_bound(p)
    lo, hi = -bound, bound
    if _sign_at(p, lo) == 0:
        lo -= 1
    total = sturm_count(p, lo, hi, seq)
    out: list = []
    _isolate(p, seq, lo, hi, total, out)
    out.sort()
    return out


def real_roots(p: RatPoly, tol: float = 1e-12) -> list[RealRoot]:
    """All real roots of ``p``, ascending, refined to bracket width below ``tol``.

    Repeated roots are found by exact square-free decomposition and reported
    once with their multiplicity.
    """
    if p.is_zero():
        raise ValueError("the zero polynomial has no isolated roots")
    roots: list[RealRoot] = []
    for factor, mult in square_free_decomposition(p):
        for lo, hi in isolate_real_roots(factor):
            a, b = refine_root(factor, lo, hi, tol)
            roots.append(RealRoot(float((a + b) / 2), mult, a, b))
    roots.sort(key=lambda r: r.value)
    return roots


def count_real_roots(p: RatPoly) -> int:
    """Distinct real roots via one Sturm count over the whole line."""
    return sturm_count(p, -math.inf, math.inf)


class RatFunc:
    """Reduced quotient of two RatPolys with a monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = num if isinstance(num, RatPoly) else RatPoly.const(as_fraction(num))
        den = RatPoly.const(1) if den is None else den
        if not isinstance(den, RatPoly):
            den = RatPoly.const(as_fraction(den))
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            num, den = RatPoly(), RatPoly.const(1)
        else:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num, den = num / g, den / g
            lead = den.lead
            num, den = num / lead, den / lead
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RatFunc is immutable")

    @staticmethod
    def _coerce(other) -> "RatFunc":
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, RatPoly):
            return RatFunc(other)
        if isinstance(other, (int, Fraction)):
            return RatFunc(RatPoly.const(other))
        return NotImplemented

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self) -> str:
        return f"RatFunc(({self.num}) / ({self.den}))"

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if other.num.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __pow__(self, k: int):
        return RatFunc(self.num ** k, self.den ** k)

    def derivative(self) -> "RatFunc":
        n, d = self.num, self.den
        return RatFunc(n.derivative() * d - n * d.derivative(), d * d)

    def __call__(self, x):
        if isinstance(x, float):
            return self.evalf(x)
        den = self.den(x)
        if den == 0:
            raise ZeroDivisionError(f"pole at x = {x}")
        return self.num(x) / den

    def evalf(self, x: float) -> float:
        den = self.den.evalf(x)
        if den == 0.0:
            raise ZeroDivisionError(f"pole at x = {x}")
        return self.num.evalf(x) / den


def ratfunc_derivative(f: RatFunc) -> RatFunc:
    return f.derivative()
