import math
from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from qes.algebraic import RealAlgebraic, count_roots_in, exact_count, interval_count
from qes.poly import RatPoly, isolate_real_roots

from conftest import rationals

SQRT2 = RatPoly([-2, 0, 1])


def root_of(p, index):
    lo, hi = isolate_real_roots(p)[index]
    return RealAlgebraic(p, lo, hi)


def test_sign_at_sqrt2():
    K = root_of(SQRT2, 1)
    assert K.sign(RatPoly([-1, 1])) == 1  # sqrt2 - 1
    assert K.sign(RatPoly([Fraction(-3, 2), 1])) == -1  # sqrt2 - 3/2
    assert K.sign(RatPoly([-2, 0, 1])) == 0


def test_zero_test_splits_composite_modulus():
    # (E^2 - 2)(E - 5): at the root sqrt2, E^2 - 2 is zero even though it is not the modulus
    mod = SQRT2 * RatPoly([-5, 1])
    K = root_of(mod, 1)
    assert K.is_zero(SQRT2)
    assert not K.is_zero(RatPoly([-5, 1]))


def test_inverse_after_shared_factor():
    # E - 5 shares a factor with the modulus but is nonzero at sqrt2
    mod = SQRT2 * RatPoly([-5, 1])
    K = root_of(mod, 1)
    inv = K.inverse(RatPoly([-5, 1]))
    # (sqrt2 - 5) * inv == 1 modulo the reduced modulus
    assert K.is_zero(RatPoly([-5, 1]) * inv - RatPoly.const(1))


def test_counts_roots_with_algebraic_coefficients():
    # x^2 - E with E = sqrt2 has roots +-2^(1/4)
    K = root_of(SQRT2, 1)
    E = RatPoly([0, 1])
    coeffs = [-E, RatPoly(), RatPoly.const(1)]
    assert count_roots_in(K, coeffs, 0, math.inf) == 1
    assert count_roots_in(K, coeffs, -math.inf, math.inf) == 2
    # at E = -sqrt2 there are none
    assert count_roots_in(root_of(SQRT2, 0), coeffs, -math.inf, math.inf) == 0


def test_root_on_right_end_is_excluded():
    # x - (E^2 - 1) at E = sqrt2 vanishes at x = 1
    K = root_of(SQRT2, 1)
    coeffs = [RatPoly([1, 0, -1]), RatPoly.const(1)]
    assert count_roots_in(K, coeffs, 0, 1) == 0
    assert count_roots_in(K, coeffs, 0, 2) == 1


@given(st.lists(rationals(-6, 6, 4), min_size=1, max_size=4, unique=True), st.integers(0, 1))
def test_interval_filter_agrees_with_exact_route(shifts, which):
    # psi(x) = prod (x - s_i - E) at E = +-sqrt2: roots are s_i + E
    E = RatPoly([0, 1])
    psi = [RatPoly.const(1)]
    for s in shifts:
        factor = [-(E + RatPoly.const(s)), RatPoly.const(1)]
        out = [RatPoly()] * (len(psi) + 1)
        for i, a in enumerate(psi):
            for j, b in enumerate(factor):
                out[i + j] = out[i + j] + a * b
        psi = out
    K1, K2 = root_of(SQRT2, which), root_of(SQRT2, which)
    fast = interval_count(K1, psi, 0, 3, 40)
    slow = exact_count(K2, psi, 0, 3)
    e = math.sqrt(2) * (1 if which else -1)
    expected = sum(1 for s in shifts if 0 < float(s) + e < 3)
    assert slow == expected
    assert fast in (None, expected)
