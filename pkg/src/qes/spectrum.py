"""Algebraic eigenvalues as roots of P_(n+1), factorization and node counting."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import (
    DegenerateSpectrumError,
    FactorizationError,
    NonRealSpectrumError,
    SpectrumError,
)
from .algebraic import RealAlgebraic, count_roots_in
from .model import apply_operator_float
from .poly import RatPoly, as_fraction, cauchy_bound, is_square_free, real_roots, sturm_count
from .recursion import EnergySequence


@dataclass(frozen=True)
class FactorizationReport:
    N_max: int
    quotients: tuple
    all_exact: bool


def factorization_check(seq: EnergySequence, n: int | None = None, N_max: int | None = None) -> FactorizationReport:
    """Divide P_(n+1+N) by P_(n+1) exactly for N = 0..N_max.

    A nonzero remainder raises :class:`FactorizationError` carrying N and the remainder.
    """
    n = seq.problem.n if n is None else n
    if N_max is None:
        N_max = seq.M - n - 1
    if n + 1 + N_max > seq.M:
        raise ValueError(f"sequence stops at P_{seq.M}; need P_{n + 1 + N_max}")
    crit = seq[n + 1]
    quotients = []
    for N in range(N_max + 1):
        q, r = divmod(seq[n + 1 + N], crit)
        if r:
            raise FactorizationError(N, r)
        if q.degree != N:
            raise FactorizationError(N, RatPoly())
        quotients.append(q)
    return FactorizationReport(N_max, tuple(quotients), True)


@dataclass
class SpectrumResult:
    eigenvalues: list
    coeff_table: list
    residual_norms: list
    root_counts: list = field(default_factory=list)
    brackets: list = field(default_factory=list)

    @property
    def n(self) -> int:
        return len(self.eigenvalues) - 1

    def eigenfunction(self, i: int) -> list[float]:
        """Float coefficients of psi_i = sum_m P_m(E_i) x^m."""
        return list(self.coeff_table[i])


def _eval_poly_float(p: RatPoly, x: float) -> float:
    return p.evalf(x)


def solve_spectrum(seq: EnergySequence, n: int | None = None, tol: float = 1e-12) -> SpectrumResult:
    """Roots of P_(n+1), the coefficient table P_m(E_i) and eigen-residuals."""
    problem = seq.problem
    n = problem.n if n is None else n
    if not seq.truncated:
        raise SpectrumError("recursion does not truncate at this n; constraints are not satisfied")
    crit = seq[n + 1]
    if not is_square_free(crit):
        repeated = [r for r in real_roots(crit, tol) if r.multiplicity > 1]
        if repeated:
            raise DegenerateSpectrumError(repeated[0].value, repeated[0].multiplicity)
        raise DegenerateSpectrumError(float("nan"), 2)
    roots = real_roots(crit, tol)
    if len(roots) < n + 1:
        raise NonRealSpectrumError(len(roots), n + 1)
    eigenvalues = [r.value for r in roots]
    table = [[_eval_poly_float(seq[m], e) for m in range(n + 1)] for e in eigenvalues]
    residuals = []
    for e, row in zip(eigenvalues, table):
        lpsi = apply_operator_float(problem, row)
        diff = [lpsi[j] if j < len(lpsi) else 0.0 for j in range(max(len(lpsi), len(row)))]
        for j, c in enumerate(row):
            diff[j] -= e * c
        residuals.append(max((abs(v) for v in diff), default=0.0))
    result = SpectrumResult(
        eigenvalues,
        table,
        residuals,
        brackets=[(r.lo, r.hi) for r in roots],
    )
    return result


def eigenfunction_exact(seq: EnergySequence, energy: Fraction, n: int | None = None) -> RatPoly:
    """psi with exact coefficients P_m(energy) for a rational energy."""
    n = seq.problem.n if n is None else n
    return RatPoly(seq[m](energy) for m in range(n + 1))


def surrogate_endpoint(psi: RatPoly) -> Fraction:
    """Right end used for infinite intervals: 10 (1 + Cauchy bound of psi)."""
    return 10 * (1 + cauchy_bound(psi))


def count_nodes(psi: RatPoly, interval) -> int:
    """Distinct real roots of psi strictly inside (a, b), infinite ends replaced by surrogates."""
    if psi.degree < 1:
        return 0
    a, b = interval
    if a == -math.inf:
        a = -surrogate_endpoint(psi)
    if b == math.inf:
        b = surrogate_endpoint(psi)
    a, b = as_fraction(a), as_fraction(b)
    count = sturm_count(psi, a, b)
    if psi(b) == 0:
        count -= 1
    return count


@dataclass
class OscillationReport:
    ok: bool
    root_counts: list
    interval: tuple

    def __bool__(self) -> bool:
        return self.ok


def node_count_at_root(seq: EnergySequence, lo, hi, n: int, interval, crit: RatPoly | None = None) -> int:
    """Sign changes of psi(x; E*) in (a, b) where E* is the root of P_(n+1) in (lo, hi].

    Computed in exact arithmetic over Q(E*), so no precision is lost however
    clustered the roots of psi are.
    """
    crit = seq[n + 1] if crit is None else crit
    if lo == hi:
        K = RealAlgebraic(RatPoly([-lo, 1]), lo - 1, lo)
    else:
        K = RealAlgebraic(crit, lo, hi)
    a, b = interval
    return count_roots_in(K, [seq[m] for m in range(n + 1)], a, b)


def root_counts(seq: EnergySequence, result: SpectrumResult, interval) -> list[int]:
    crit = seq[result.n + 1]
    return [node_count_at_root(seq, lo, hi, result.n, interval, crit) for lo, hi in result.brackets]


def oscillation_check(seq: EnergySequence, result: SpectrumResult, interval=None) -> OscillationReport:
    """The i-th eigenfunction must have exactly i sign changes inside the interval.

    Node counts are exact Sturm counts of psi_i over the field generated by its
    eigenvalue.
    """
    interval = seq.problem.spec.interval if interval is None else interval
    counts = root_counts(seq, result, interval)
    result.root_counts = counts
    return OscillationReport(counts == list(range(len(counts))), counts, tuple(interval))


def interlaces(seq: EnergySequence, n: int | None = None, tol: float = 1e-12) -> bool:
    """Whether the roots of P_n strictly interlace those of P_(n+1)."""
    n = seq.problem.n if n is None else n
    outer = [r.value for r in real_roots(seq[n + 1], tol)]
    if n == 0:
        return True
    inner = [r.value for r in real_roots(seq[n], tol)]
    if len(inner) != n or len(outer) != n + 1:
        return False
    return all(outer[i] < inner[i] < outer[i + 1] for i in range(n))
