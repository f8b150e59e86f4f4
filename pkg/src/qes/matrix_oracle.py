"""Independent check: restrict L to span{1, x, ..., x^n} and take its characteristic polynomial."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ConstraintViolationError, OracleDivergenceError
from .model import QesProblem, apply_operator
from .poly import RatPoly
from .recursion import EnergySequence


@dataclass(frozen=True)
class RestrictedMatrix:
    """Column j holds the monomial coefficients of L x^j."""

    entries: tuple

    @property
    def size(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def trace(self) -> Fraction:
        return sum((self.entries[i][i] for i in range(self.size)), Fraction(0))

    def bandwidth(self) -> tuple[int, int]:
        """(lower, upper): largest i-j and j-i over nonzero entries."""
        lower = upper = 0
        for i, row in enumerate(self.entries):
            for j, v in enumerate(row):
                if v:
                    lower = max(lower, i - j)
                    upper = max(upper, j - i)
        return lower, upper


def build_matrix(problem: QesProblem) -> RestrictedMatrix:
    n = problem.n
    cols = []
    for j in range(n + 1):
        img = apply_operator(problem, RatPoly.monomial(j))
        if img.degree > n:
            raise ConstraintViolationError(
                f"L x^{j} has degree {img.degree} > n = {n}; the subspace is not invariant"
            )
        cols.append([img[i] for i in range(n + 1)])
    rows = tuple(tuple(cols[j][i] for j in range(n + 1)) for i in range(n + 1))
    return RestrictedMatrix(rows)


def char_poly(mat) -> RatPoly:
    """Monic det(E I - M) by Faddeev-LeVerrier in exact arithmetic."""
    if isinstance(mat, RestrictedMatrix):
        mat = mat.entries
    M = [[Fraction(v) for v in row] for row in mat]
    size = len(M)
    coeffs = [Fraction(0)] * (size + 1)
    coeffs[size] = Fraction(1)
    # N_k = M (N_(k-1) + c_(size-k+1) I), c_(size-k) = -tr(N_k)/k
    prev = [[Fraction(0)] * size for _ in range(size)]
    for k in range(1, size + 1):
        shifted = [row[:] for row in prev]
        for i in range(size):
            shifted[i][i] += coeffs[size - k + 1]
        cur = [
            [sum((M[i][l] * shifted[l][j] for l in range(size) if M[i][l]), Fraction(0)) for j in range(size)]
            for i in range(size)
        ]
        coeffs[size - k] = -sum((cur[i][i] for i in range(size)), Fraction(0)) / k
        prev = cur
    return RatPoly(coeffs)


@dataclass(frozen=True)
class OracleReport:
    matrix_char_poly: RatPoly
    critical_monic: RatPoly
    equal: bool

    def __bool__(self) -> bool:
        return self.equal


def oracle_compare(problem: QesProblem, seq: EnergySequence, *, raise_on_mismatch: bool = True) -> OracleReport:
    """Characteristic polynomial of the restricted matrix vs monic P_(n+1)."""
    cp = char_poly(build_matrix(problem))
    crit = seq[problem.n + 1].monic()
    report = OracleReport(cp, crit, cp == crit)
    if not report.equal and raise_on_mismatch:
        raise OracleDivergenceError(
            f"det(E - M) = {cp.to_str('E')} but monic P_{problem.n + 1} = {crit.to_str('E')}"
        )
    return report
