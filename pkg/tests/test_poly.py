import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from qes.poly import (
    RatFunc,
    RatPoly,
    cauchy_bound,
    count_real_roots,
    is_square_free,
    isolate_real_roots,
    poly_gcd,
    primitive_part,
    real_roots,
    refine_root,
    simplest_between,
    square_free_decomposition,
    sturm_count,
)

from conftest import nonzero_rationals, rationals

polys = st.lists(rationals(), min_size=0, max_size=7).map(RatPoly)
nonzero_polys = polys.filter(lambda p: not p.is_zero())


def test_zero_polynomial_shape():
    z = RatPoly([0, 0, 0])
    assert z.coeffs == () and z.degree == -1 and not z


def test_str_uses_given_variable():
    p = RatPoly([Fraction(1, 10), 0, Fraction(-1, 48), 0, Fraction(1, 2880)])
    assert "E^4" in p.to_str("E")


@given(polys, polys, polys)
def test_ring_axioms(p, q, r):
    assert (p + q) * r == p * r + q * r
    assert (p * q) * r == p * (q * r)
    assert p - p == RatPoly()


@given(polys, nonzero_polys)
def test_divmod_identity(p, d):
    q, r = divmod(p, d)
    assert q * d + r == p
    assert r.degree < d.degree


@given(nonzero_polys, nonzero_polys)
def test_gcd_divides_both(p, q):
    g = poly_gcd(p, q)
    assert (p % g).is_zero() and (q % g).is_zero()
    assert g.lead == 1


@given(polys, rationals())
def test_derivative_matches_difference_quotient_limit(p, x):
    # exact: (p(x+h) - p(x))/h - p'(x) is a polynomial in h vanishing at h = 0
    h = RatPoly([x, 1])
    shifted = p.compose(h) - RatPoly.const(p(x))
    quotient, rem = divmod(shifted, RatPoly([0, 1]))
    assert rem.is_zero()
    assert quotient(0) == p.derivative()(x)


@given(nonzero_polys)
def test_primitive_part_is_positive_integer_multiple(p):
    pp = primitive_part(p)
    assert all(c.denominator == 1 for c in pp.coeffs)
    ratio = {c / d for c, d in zip(p.coeffs, pp.coeffs) if d}
    assert len(ratio) == 1 and ratio.pop() > 0


@given(st.lists(rationals(), min_size=1, max_size=6, unique=True))
def test_sturm_counts_distinct_rational_roots(roots):
    p = RatPoly.from_roots(roots)
    assert count_real_roots(p) == len(roots)
    lo, hi = min(roots), max(roots)
    # half-open (lo, hi]
    assert sturm_count(p, lo, hi) == len(roots) - 1


@given(st.lists(rationals(), min_size=1, max_size=5, unique=True), st.integers(1, 3))
def test_repeated_roots_reported_with_multiplicity(roots, mult):
    p = RatPoly.from_roots(roots) * RatPoly.from_roots(roots[:1]) ** (mult - 1)
    found = real_roots(p)
    assert [r.value for r in found] == pytest.approx(sorted(float(r) for r in roots), abs=1e-10)
    by_value = {round(r.value, 8): r.multiplicity for r in found}
    assert by_value[round(float(roots[0]), 8)] == mult


@given(st.lists(rationals(), min_size=1, max_size=6, unique=True))
def test_isolating_brackets_are_disjoint_and_exact(roots):
    p = RatPoly.from_roots(roots)
    brackets = isolate_real_roots(p)
    assert len(brackets) == len(roots)
    for (lo, hi), (lo2, _) in zip(brackets, brackets[1:]):
        assert hi <= lo2
    for lo, hi in brackets:
        assert sturm_count(p, lo, hi) == 1


def test_roots_of_irreducible_quadratic_pair():
    # x^2 - 2 and x^2 + 1: two real roots only
    p = RatPoly([-2, 0, 1]) * RatPoly([1, 0, 1])
    vals = [r.value for r in real_roots(p)]
    assert vals == pytest.approx([-math.sqrt(2), math.sqrt(2)], abs=1e-12)


@given(nonzero_polys)
def test_cauchy_bound_encloses_all_roots(p):
    assume(p.degree >= 1)
    roots = np.roots([float(c) for c in reversed(p.coeffs)])
    assert all(abs(z) < float(cauchy_bound(p)) + 1e-9 for z in roots)


@given(nonzero_polys)
def test_square_free_decomposition_reassembles(p):
    assume(p.degree >= 1)
    parts = square_free_decomposition(p)
    rebuilt = RatPoly.const(p.lead)
    for f, m in parts:
        rebuilt = rebuilt * f**m
        assert is_square_free(f)
    assert rebuilt == p


@given(rationals(), rationals())
def test_simplest_between_lies_inside(a, b):
    lo, hi = min(a, b), max(a, b)
    q = simplest_between(lo, hi)
    assert lo <= q <= hi
    # no smaller denominator fits
    for d in range(1, q.denominator):
        assert math.ceil(lo * d) > math.floor(hi * d)


def test_refine_root_narrows_to_tolerance():
    p = RatPoly([-2, 0, 1])
    lo, hi = refine_root(p, Fraction(1), Fraction(2), Fraction(1, 10**30))
    assert hi - lo < Fraction(1, 10**30)
    assert lo * lo < 2 <= hi * hi


@given(nonzero_polys, nonzero_polys, rationals())
def test_ratfunc_quotient_rule(p, q, x):
    f = RatFunc(p, q)
    assume(q(x) != 0)
    expected = (p.derivative() * q - p * q.derivative())(x) / q(x) ** 2
    assert f.derivative()(x) == expected


def test_ratfunc_reduces_common_factors():
    x = RatPoly.x()
    f = RatFunc(x * (x - 1), (x - 1) * (x + 2))
    assert f.den.degree == 1 and f.num == x


def test_ratfunc_pole_raises():
    with pytest.raises(ZeroDivisionError):
        RatFunc(RatPoly.const(1), RatPoly([0, 1]))(Fraction(0))


def test_zero_division_of_polynomial():
    with pytest.raises(ZeroDivisionError):
        divmod(RatPoly([1, 1]), RatPoly())


@given(nonzero_rationals())
def test_monic_has_unit_lead(c):
    p = RatPoly([1, 2, c])
    assert p.monic().lead == 1
