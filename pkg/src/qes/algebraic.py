"""Exact arithmetic at a real root E* of a square-free rational polynomial.

Elements are rational polynomials in E reduced modulo a divisor of the defining
polynomial that still vanishes at E*. Zero tests split that modulus with a gcd
(the factor that keeps E* is retained), so inverses always exist. Signs are read
off after shrinking the isolating bracket until the element has no root in it.

That exact route is the fallback. Root counts first run the same Sturm chain in
outward-rounded decimal interval arithmetic, where every zero/nonzero decision
is certified or the attempt is abandoned at that precision.
"""

from __future__ import annotations

import decimal
import math
from fractions import Fraction
from typing import Sequence

from .poly import RatPoly, poly_gcd, primitive_part, refine_root, simplest_between, sturm_count


class RealAlgebraic:
    def __init__(self, modulus: RatPoly, lo: Fraction, hi: Fraction):
        # E* is the only root of `modulus` in (lo, hi]
        self.modulus = primitive_part(modulus)
        self.lo = Fraction(lo)
        self.hi = Fraction(hi)

    def reduce(self, g: RatPoly) -> RatPoly:
        return g % self.modulus if g.degree >= self.modulus.degree else g

    def certified_sign(self, g: RatPoly):
        """Sign of g(E*) from one evaluation plus a derivative bound, or None if inconclusive."""
        if g.degree <= 0:
            v = g[0]
            return (v > 0) - (v < 0)
        c = simplest_between(self.lo, self.hi)
        v = g(c)
        R = max(abs(self.lo), abs(self.hi))
        slope = sum(j * abs(g[j]) * R ** (j - 1) for j in range(1, g.degree + 1))
        if abs(v) > slope * (self.hi - self.lo):
            return (v > 0) - (v < 0)
        return None

    def tighten(self, bits: int = 64) -> None:
        if self.lo != self.hi:
            self.lo, self.hi = refine_root(self.modulus, self.lo, self.hi, (self.hi - self.lo) / 2**bits)

    def is_zero(self, g: RatPoly) -> bool:
        g = self.reduce(g)
        if g.is_zero():
            return True
        if self.certified_sign(g):
            return False
        d = poly_gcd(g, self.modulus)
        if d.degree <= 0:
            return False
        if sturm_count(d, self.lo, self.hi) > 0:
            self.modulus = primitive_part(d)
            return True
        self.modulus = primitive_part(self.modulus // d)
        return False

    def sign(self, g: RatPoly) -> int:
        if self.is_zero(g):
            return 0
        g = self.reduce(g)
        for _ in range(3):
            s = self.certified_sign(g)
            if s is not None:
                return s
            self.tighten()
        while sturm_count(g, self.lo, self.hi) > 0:
            self.lo, self.hi = refine_root(self.modulus, self.lo, self.hi, (self.hi - self.lo) / 8)
            if self.lo == self.hi:
                break
        v = g(self.hi)
        return (v > 0) - (v < 0)

    def inverse(self, g: RatPoly) -> RatPoly:
        """1/g at E*; g must be nonzero there (callers test with :meth:`is_zero` first)."""
        if self.is_zero(g):
            raise ZeroDivisionError("element vanishes at the root")
        g = self.reduce(g)
        d = poly_gcd(g, self.modulus)
        if d.degree > 0:
            # g is nonzero at E*, so E* lives in the cofactor
            self.modulus = primitive_part(self.modulus // d)
            g = self.reduce(g)
        r0, r1 = self.modulus, g
        s0, s1 = RatPoly(), RatPoly.const(1)
        while r1.degree > 0:
            q, r = divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, s0 - q * s1
        return self.reduce(s1 / r1[0])

    def mul(self, a: RatPoly, b: RatPoly) -> RatPoly:
        return self.reduce(a * b)


def _trim(K: RealAlgebraic, p: list) -> list:
    p = [K.reduce(c) for c in p]
    while p and K.is_zero(p[-1]):
        p.pop()
    return p


def _scale_positive(p: list) -> list:
    # a positive rational multiple keeps every sign in the chain
    dens, nums = 1, 0
    for c in p:
        for v in c.coeffs:
            dens = dens * v.denominator // math.gcd(dens, v.denominator)
    for c in p:
        for v in c.coeffs:
            nums = math.gcd(nums, int(v * dens))
    if nums == 0:
        return p
    f = Fraction(dens, nums)
    return [c * f for c in p]


def _rem(K: RealAlgebraic, p: list, q: list) -> list:
    p = list(p)
    inv = K.inverse(q[-1])
    dq = len(q) - 1
    while True:
        p = _trim(K, p)
        if len(p) - 1 < dq:
            return p
        factor = K.mul(p[-1], inv)
        shift = len(p) - 1 - dq
        for j, c in enumerate(q):
            p[j + shift] = K.reduce(p[j + shift] - factor * c)
        p[-1] = RatPoly()


def _value_sign(K: RealAlgebraic, p: list, x) -> int:
    if not p:
        return 0
    if x == math.inf:
        return K.sign(p[-1])
    if x == -math.inf:
        return K.sign(p[-1]) * (-1) ** (len(p) - 1)
    x = Fraction(x)
    acc = RatPoly()
    for c in reversed(p):
        acc = K.reduce(acc * x + c)
    return K.sign(acc)


def sturm_chain(K: RealAlgebraic, coeffs: Sequence[RatPoly]) -> list:
    p0 = _trim(K, list(coeffs))
    if len(p0) <= 1:
        return [p0]
    p1 = _trim(K, [c * j for j, c in enumerate(p0)][1:])
    chain = [_scale_positive(p0), _scale_positive(p1)]
    while len(chain[-1]) > 1:
        r = _rem(K, chain[-2], chain[-1])
        if not r:
            break
        chain.append(_scale_positive([-c for c in r]))
    return chain


def count_roots_in(K: RealAlgebraic, coeffs: Sequence[RatPoly], a, b) -> int:
    """Distinct real roots in the open interval (a, b) of sum_j coeffs[j](E*) x^j."""
    for digits in INTERVAL_DIGITS:
        count = interval_count(K, coeffs, a, b, digits)
        if count is not None:
            return count
    return exact_count(K, coeffs, a, b)


def exact_count(K: RealAlgebraic, coeffs: Sequence[RatPoly], a, b) -> int:
    chain = sturm_chain(K, coeffs)
    if len(chain[0]) <= 1:
        return 0

    def variations(x):
        signs = [s for s in (_value_sign(K, p, x) for p in chain) if s]
        return sum(1 for u, v in zip(signs, signs[1:]) if u != v)

    count = variations(a) - variations(b)
    if math.isfinite(b) and _value_sign(K, chain[0], b) == 0:
        count -= 1
    return count



# Interval filter

INTERVAL_DIGITS = (40, 120, 400)


class _Undecided(Exception):
    pass


class _Box:
    """Closed interval with decimal ends; arithmetic rounds outward."""

    __slots__ = ("lo", "hi")

    def __init__(self, lo, hi):
        self.lo = lo
        self.hi = hi

    def exact_zero(self) -> bool:
        return self.lo == 0 and self.hi == 0

    def sign(self) -> int:
        if self.lo > 0:
            return 1
        if self.hi < 0:
            return -1
        if self.exact_zero():
            return 0
        raise _Undecided


class _Arith:
    def __init__(self, digits: int):
        common = dict(prec=digits, Emax=decimal.MAX_EMAX, Emin=decimal.MIN_EMIN)
        self.down = decimal.Context(rounding=decimal.ROUND_FLOOR, **common)
        self.up = decimal.Context(rounding=decimal.ROUND_CEILING, **common)

    def rational(self, q) -> _Box:
        q = Fraction(q)
        num, den = decimal.Decimal(q.numerator), decimal.Decimal(q.denominator)
        if den == 1:
            return _Box(self.down.plus(num), self.up.plus(num))
        return _Box(self.down.divide(num, den), self.up.divide(num, den))

    def add(self, x: _Box, y: _Box) -> _Box:
        return _Box(self.down.add(x.lo, y.lo), self.up.add(x.hi, y.hi))

    def sub(self, x: _Box, y: _Box) -> _Box:
        return _Box(self.down.subtract(x.lo, y.hi), self.up.subtract(x.hi, y.lo))

    def mul(self, x: _Box, y: _Box) -> _Box:
        pairs = ((x.lo, y.lo), (x.lo, y.hi), (x.hi, y.lo), (x.hi, y.hi))
        return _Box(min(self.down.multiply(u, v) for u, v in pairs),
                    max(self.up.multiply(u, v) for u, v in pairs))

    def div(self, x: _Box, y: _Box) -> _Box:
        if y.sign() == 0:
            raise ZeroDivisionError
        recip = _Box(self.down.divide(1, y.hi), self.up.divide(1, y.lo))
        return self.mul(x, recip)

    def neg(self, x: _Box) -> _Box:
        return _Box(-x.hi, -x.lo)

    def horner(self, coeffs, x: _Box) -> _Box:
        acc = _Box(decimal.Decimal(0), decimal.Decimal(0))
        for c in reversed(coeffs):
            acc = self.add(self.mul(acc, x), c)
        return acc


def _box_trim(p: list) -> list:
    p = list(p)
    while p and p[-1].sign() == 0:
        p.pop()
    return p


def _box_rem(ar: _Arith, p: list, q: list) -> list:
    p = list(p)
    dq = len(q) - 1
    while True:
        p = _box_trim(p)
        if len(p) - 1 < dq:
            return p
        factor = ar.div(p[-1], q[-1])
        shift = len(p) - 1 - dq
        for j in range(dq):
            p[j + shift] = ar.sub(p[j + shift], ar.mul(factor, q[j]))
        p.pop()


def _box_sign_at(ar: _Arith, p: list, x) -> int:
    if not p:
        return 0
    if x == math.inf:
        return p[-1].sign()
    if x == -math.inf:
        return p[-1].sign() * (-1) ** (len(p) - 1)
    return ar.horner(p, ar.rational(x)).sign()


def interval_count(K: RealAlgebraic, coeffs: Sequence[RatPoly], a, b, digits: int):
    """Root count in (a, b) by interval Sturm chain, or None when some sign stays undecided."""
    ar = _Arith(digits)
    target = Fraction(1, 10 ** (digits + 5)) * max(1, abs(K.hi))
    while K.hi - K.lo > target and K.lo != K.hi:
        K.tighten(4 * digits)
    E = _Box(ar.rational(K.lo).lo, ar.rational(K.hi).hi)
    try:
        p0 = []
        for c in coeffs:
            # identically zero coefficients stay exact zeros
            p0.append(ar.horner([ar.rational(v) for v in c.coeffs], E) if not c.is_zero()
                      else _Box(decimal.Decimal(0), decimal.Decimal(0)))
        p0 = _box_trim(p0)
        if len(p0) <= 1:
            return 0
        p1 = _box_trim([ar.mul(ar.rational(j), c) for j, c in enumerate(p0)][1:])
        chain = [p0, p1]
        while len(chain[-1]) > 1:
            r = _box_rem(ar, chain[-2], chain[-1])
            if not r:
                break
            chain.append([ar.neg(c) for c in r])

        def variations(x):
            signs = [s for s in (_box_sign_at(ar, p, x) for p in chain) if s]
            return sum(1 for u, v in zip(signs, signs[1:]) if u != v)

        count = variations(a) - variations(b)
        if math.isfinite(b) and _box_sign_at(ar, p0, b) == 0:
            count -= 1
        return count
    except (_Undecided, ZeroDivisionError):
        return None
