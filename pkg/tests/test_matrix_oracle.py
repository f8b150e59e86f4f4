from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given
from hypothesis import strategies as st

from qes.errors import ConstraintViolationError, OracleDivergenceError
from qes.matrix_oracle import build_matrix, char_poly, oracle_compare
from qes.model import solve_constraints
from qes.poly import RatPoly
from qes.recursion import generate

from conftest import rationals
from test_model import master_specs


@given(st.integers(1, 5).flatmap(lambda s: st.lists(st.lists(rationals(), min_size=s, max_size=s), min_size=s, max_size=s)))
def test_char_poly_matches_sympy(rows):
    E = sp.Symbol("E")
    ref = sp.Matrix([[sp.Rational(v.numerator, v.denominator) for v in r] for r in rows]).charpoly(E)
    coeffs = [Fraction(int(c.p), int(c.q)) for c in reversed(ref.all_coeffs())]
    assert char_poly(rows) == RatPoly(coeffs)


@given(master_specs(), st.integers(1, 6))
def test_matrix_is_upper_banded(spec, n):
    problem = solve_constraints(spec, n, fill_weight=True)
    mat = build_matrix(problem)
    lower, upper = mat.bandwidth()
    # A1, F0 lower the degree by one; A3, B1 (and A4, B2) raise it by up to k-2
    assert upper <= 1 and lower <= problem.k - 2
    assert mat.size == n + 1


@given(master_specs(), st.integers(1, 6))
def test_oracle_equals_recursion(spec, n):
    problem = solve_constraints(spec, n, fill_weight=True)
    assert oracle_compare(problem, generate(problem)).equal


def test_trace_is_sum_of_eigenvalues(bd_problem):
    assert build_matrix(bd_problem).trace() == 0


def test_non_invariant_operator_is_rejected(bd_problem):
    bad = bd_problem.with_B(bd_problem.B + RatPoly([0, 1]))
    with pytest.raises(ConstraintViolationError):
        build_matrix(bad)


def test_divergence_raises_with_both_polynomials(bd_problem, bd_seq):
    other = bd_problem.with_B(RatPoly([0, bd_problem.B[1], 0]))
    # same B, but pretend the sequence came from a shifted spectrum
    shifted = type(bd_seq)(bd_problem, bd_seq.polys[:4] + (bd_seq.polys[4] + RatPoly.const(1),) + bd_seq.polys[5:], True)
    with pytest.raises(OracleDivergenceError, match="det"):
        oracle_compare(other, shifted)
    rep = oracle_compare(other, shifted, raise_on_mismatch=False)
    assert not rep.equal
