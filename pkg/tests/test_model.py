import math
from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from qes.errors import DegenerateSpecError, InfeasibleWeightError, UnsupportedOrderError
from qes.model import (
    MasterSpec,
    apply_operator,
    apply_operator_float,
    invariance_conditions,
    required_B1,
    required_B2,
    required_F3,
    solve_constraints,
    validate_spec,
)
from qes.poly import RatPoly

from conftest import nonzero_rationals, rationals


@st.composite
def master_specs(draw, k=None):
    k = draw(st.sampled_from([3, 4])) if k is None else k
    A = [Fraction(0)] + [draw(rationals()) for _ in range(k)]
    A[k] = draw(nonzero_rationals())
    F = [draw(nonzero_rationals())] + [draw(rationals()) for _ in range(k - 1)]
    # c1(m) = (m+2)(A1 (m+1) + F0) must not vanish
    if A[1] != 0:
        ratio = F[0] / A[1]
        assume(not (ratio < 0 and ratio.denominator == 1))
    return MasterSpec(RatPoly(A), RatPoly(F))


@given(master_specs(), st.integers(1, 8))
def test_polynomials_up_to_n_are_invariant(spec, n):
    problem = solve_constraints(spec, n, fill_weight=True)
    for j in range(n + 1):
        assert apply_operator(problem, RatPoly.monomial(j)).degree <= n


@given(master_specs(), st.integers(1, 8))
def test_invariance_rows_have_zero_residual(spec, n):
    problem = solve_constraints(spec, n, fill_weight=True)
    for row in invariance_conditions(problem.k, n):
        assert row.residual(problem) == 0


@given(master_specs(k=4), st.integers(1, 8))
def test_closed_form_constraints(spec, n):
    problem = solve_constraints(spec, n, fill_weight=True)
    A3, A4, F2 = spec.A_(3), spec.A_(4), problem.spec.F_(2)
    assert problem.B_(1) == Fraction(n, 2) * (A3 * (n - 1) / 3 + F2)
    assert problem.B_(2) == -A4 * n * (n - 1) / 12
    assert problem.spec.F_(3) == -A4 * (n - 1) / 2
    assert problem.B(0) == 0


def test_constraint_helpers_match_rows():
    # B1 row: -n(n-1)/6 A3 - n/2 F2 + B1 = 0
    assert required_B1(Fraction(6), Fraction(2), 3) == Fraction(3, 2) * (4 + 2)
    assert required_B2(Fraction(1), 3) == Fraction(-1, 2)
    assert required_F3(Fraction(2), 4) == -3


def test_number_of_conditions():
    assert len(invariance_conditions(3, 5)) == 1
    assert len(invariance_conditions(4, 5)) == 3
    with pytest.raises(UnsupportedOrderError):
        invariance_conditions(5, 2)


def test_mismatched_cubic_drift_is_infeasible():
    spec = MasterSpec(RatPoly([0, 0, 0, 0, 1]), RatPoly([1, 0, 0, 5]))
    with pytest.raises(InfeasibleWeightError, match="requires"):
        solve_constraints(spec, 3)


def test_vanishing_F0_is_degenerate():
    with pytest.raises(DegenerateSpecError):
        solve_constraints(MasterSpec(RatPoly([0, 1]), RatPoly([0, 1])), 2)


def test_structure_report_lists_each_problem():
    spec = MasterSpec(RatPoly([1, 1, 0, 1]), RatPoly([0, 0, 0, 1]))
    report = validate_spec(spec)
    text = " ".join(report.violations)
    assert not report.ok
    assert "A(0)" in text and "F(0)" in text and "cubic F" in text


def test_parameter_constraints_are_evaluated():
    spec = MasterSpec(
        RatPoly([0, 1]), RatPoly([2, 0, -2]), (0, math.inf),
        {"alpha": Fraction(1), "gamma": Fraction(1)}, ("alpha > -1", "gamma < 0"),
    )
    report = validate_spec(spec)
    assert report.violations == ["constraint violated: gamma < 0"]


@given(master_specs(), st.integers(1, 6), st.lists(rationals(), min_size=1, max_size=7))
def test_float_operator_matches_exact(spec, n, coeffs):
    problem = solve_constraints(spec, n, fill_weight=True)
    exact = apply_operator(problem, RatPoly(coeffs))
    approx = apply_operator_float(problem, coeffs)
    for i, c in enumerate(exact.coeffs):
        assert approx[i] == pytest.approx(float(c), rel=1e-12, abs=1e-9)
