"""Master-function problems and the invariant-subspace constraints.

The operator is ``L = -A(x) d^2/dx^2 - F(x) d/dx + B(x)`` with ``F = (AW)'/W``.
Taylor data are written as derivatives at 0: ``A3`` means ``A'''(0)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Mapping, Optional

from . import expr
from .errors import DegenerateSpecError, InfeasibleWeightError, UnsupportedOrderError
from .poly import RatPoly, as_fraction

INF = math.inf


@dataclass(frozen=True)
class MasterSpec:
    """Master function A, drift data F = (AW)'/W and the interval (a, b).

    ``constraints`` are inequality strings over ``params`` (e.g. ``"gamma < 0"``)
    that :func:`validate_spec` evaluates; catalog entries fill them in.
    """

    A: RatPoly
    F: RatPoly
    interval: tuple = (0, INF)
    params: Mapping[str, Fraction] = field(default_factory=dict)
    constraints: tuple = ()

    @property
    def k(self) -> int:
        return max(self.A.degree, self.F.degree + 1)

    def A_(self, i: int) -> Fraction:
        return self.A.taylor_coeff(i)

    def F_(self, i: int) -> Fraction:
        return self.F.taylor_coeff(i)


@dataclass(frozen=True)
class QesProblem:
    spec: MasterSpec
    n: int
    B: RatPoly
    weight_constraint_F3: Optional[Fraction] = None

    @property
    def k(self) -> int:
        return self.spec.k

    @property
    def A(self) -> RatPoly:
        return self.spec.A

    @property
    def F(self) -> RatPoly:
        return self.spec.F

    def B_(self, i: int) -> Fraction:
        return self.B.taylor_coeff(i)

    def taylor(self) -> dict[str, Fraction]:
        """All Taylor data by name, for formula substitution."""
        out = {f"A{i}": self.spec.A_(i) for i in range(5)}
        out.update({f"F{i}": self.spec.F_(i) for i in range(4)})
        out.update({f"B{i}": self.B_(i) for i in range(3)})
        return out

    def with_B(self, B: RatPoly) -> "QesProblem":
        return replace(self, B=B)


@dataclass(frozen=True)
class ConstraintRow:
    """One invariance condition ``cA*A^(i+2) + cF*F^(i+1) + cB*B^(i) = 0``."""

    l: int
    i: int
    coeffs: tuple

    def residual(self, problem: QesProblem) -> Fraction:
        cA, cF, cB = self.coeffs
        return (
            cA * problem.spec.A_(self.i + 2)
            + cF * problem.spec.F_(self.i + 1)
            + cB * problem.B_(self.i)
        )


def invariance_conditions(k: int, n: int) -> list[ConstraintRow]:
    """The (k-1)(k-2)/2 linear conditions for span{1..x^n} to be invariant."""
    if not 3 <= k <= 4:
        raise UnsupportedOrderError(f"master functions of order k={k} are not supported (need 3 <= k <= 4)")
    if n < 1:
        raise ValueError("invariance conditions need n >= 1")
    rows = []
    # row j: l = n - j with i = j+1 .. k-2
    for j in range(k - 2):
        l = n - j
        for i in range(j + 1, k - 1):
            coeffs = (
                Fraction(-l * (l - 1), math.factorial(i + 2)),
                Fraction(-l, math.factorial(i + 1)),
                Fraction(1, math.factorial(i)),
            )
            rows.append(ConstraintRow(l, i, coeffs))
    return rows


def required_B1(A3: Fraction, F2: Fraction, n: int) -> Fraction:
    return Fraction(n, 2) * (A3 * (n - 1) / 3 + F2)


def required_B2(A4: Fraction, n: int) -> Fraction:
    return -A4 * n * (n - 1) / 12


def required_F3(A4: Fraction, n: int) -> Fraction:
    return -A4 * (n - 1) / 2


def check_structure(spec: MasterSpec) -> list[str]:
    problems = []
    if not 1 <= spec.A.degree <= 4:
        problems.append(f"deg A = {spec.A.degree} outside 1..4")
    if spec.A[0] != 0:
        problems.append(f"A(0) = {spec.A[0]} must vanish")
    if spec.F.degree > 3:
        problems.append(f"deg F = {spec.F.degree} exceeds 3")
    if spec.F[0] == 0:
        problems.append("F(0) = 0 leaves P_1 undefined")
    if spec.F.degree == 3 and spec.A.degree < 4:
        problems.append("a cubic F needs a quartic A")
    return problems


def solve_constraints(spec: MasterSpec, n: int, *, fill_weight: bool = False) -> QesProblem:
    """Choose B (with B(0) = 0) so that polynomials of degree <= n are invariant.

    For quartic master functions the cubic Taylor coefficient of F is also
    constrained; ``fill_weight=True`` overwrites it with the required value,
    otherwise a mismatch raises :class:`InfeasibleWeightError`.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if spec.F[0] == 0:
        raise DegenerateSpecError("F(0) = 0: the recursion cannot produce P_1")
    if spec.k > 4:
        raise UnsupportedOrderError(f"k = {spec.k} > 4")
    A3, A4 = spec.A_(3), spec.A_(4)
    F3_req = None
    if spec.k == 4:
        F3_req = required_F3(A4, n)
        if fill_weight:
            cs = [spec.F[i] for i in range(3)] + [F3_req / 6]
            spec = replace(spec, F=RatPoly(cs))
        elif spec.F_(3) != F3_req:
            raise InfeasibleWeightError(
                f"F'''(0) = {spec.F_(3)} but n = {n} requires {F3_req} (= -A''''(0)(n-1)/2)"
            )
    B1 = required_B1(A3, spec.F_(2), n)
    B2 = required_B2(A4, n) if spec.k == 4 else Fraction(0)
    return QesProblem(spec, n, RatPoly([0, B1, B2 / 2]), F3_req)


def apply_operator(problem: QesProblem, p: RatPoly) -> RatPoly:
    """``-A p'' - F p' + B p``, exactly."""
    d1 = p.derivative()
    d2 = d1.derivative()
    return -(problem.A * d2) - problem.F * d1 + problem.B * p


def apply_operator_float(problem: QesProblem, coeffs) -> list[float]:
    """Float version of :func:`apply_operator` on an ascending coefficient list."""
    c = [float(v) for v in coeffs]
    A = problem.A.float_coeffs()
    F = problem.F.float_coeffs()
    B = problem.B.float_coeffs()
    size = len(c) + max(len(A), len(F) + 1, len(B) + 2)
    out = [0.0] * size
    for j, cj in enumerate(c):
        if cj == 0.0:
            continue
        for i, ai in enumerate(A):
            if j >= 2:
                out[j - 2 + i] -= ai * j * (j - 1) * cj
        for i, fi in enumerate(F):
            if j >= 1:
                out[j - 1 + i] -= fi * j * cj
        for i, bi in enumerate(B):
            out[j + i] += bi * cj
    while out and out[-1] == 0.0:
        out.pop()
    return out


@dataclass
class ValidationReport:
    violations: list = field(default_factory=list)
    checked: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok


def validate_spec(spec: MasterSpec) -> ValidationReport:
    """Structural checks plus any parameter inequalities attached to the spec."""
    report = ValidationReport()
    for msg in check_structure(spec):
        report.violations.append(f"structure: {msg}")
    report.checked.append("structure")
    env = {k: as_fraction(v) for k, v in spec.params.items()}
    for c in spec.constraints:
        report.checked.append(c)
        try:
            ok = expr.evaluate(c, env)
        except expr.ExprError as exc:
            report.violations.append(f"constraint {c!r}: {exc}")
            continue
        if not ok:
            report.violations.append(f"constraint violated: {c}")
    return report
