"""Energy polynomials P_m(E) from the power-series ansatz psi = sum P_m(E) x^m.

Matching x^(m+1) in ``L psi = E psi`` gives, with Taylor data as derivatives at 0,

    c1(m) P_(m+2) + c2(m, E) P_(m+1) + c3(m) P_m + c4(m) P_(m-1) = 0

    c1 = A1 (m+1)(m+2) + F0 (m+2)
    c2 = A2/2 m(m+1) + F1 (m+1) + E
    c3 = A3/6 m(m-1) + F2/2 m - B1
    c4 = A4/24 (m-1)(m-2) + F3/6 (m-1) - B2/2

For cubic master functions c4 vanishes identically and the recursion has three terms.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import appendix
from .errors import RecursionBreakdownError
from .model import QesProblem
from .poly import RatPoly

E = RatPoly.x()

DEFAULT_N_EXTRA = 6


@dataclass(frozen=True)
class Coefficients:
    c1: Fraction
    c2: RatPoly
    c3: Fraction
    c4: Fraction


def coefficients(problem: QesProblem, m: int) -> Coefficients:
    t = problem.taylor()
    c1 = t["A1"] * (m + 1) * (m + 2) + t["F0"] * (m + 2)
    c2 = E + (t["A2"] / 2 * m * (m + 1) + t["F1"] * (m + 1))
    c3 = t["A3"] / 6 * m * (m - 1) + t["F2"] / 2 * m - t["B1"]
    c4 = t["A4"] / 24 * (m - 1) * (m - 2) + t["F3"] / 6 * (m - 1) - t["B2"] / 2
    return Coefficients(c1, c2, c3, c4)


def truncation_residuals(problem: QesProblem) -> dict[str, Fraction]:
    """Coefficients that must vanish for P_(n+1) to divide every later P_m.

    Recursion step m = n would otherwise pull in P_n (via c3) and P_(n-1) (via c4),
    and step m = n+1 would pull in P_n via c4.
    """
    n = problem.n
    out = {"c3(n)": coefficients(problem, n).c3}
    if problem.k >= 4:
        out["c4(n)"] = coefficients(problem, n).c4
        out["c4(n+1)"] = coefficients(problem, n + 1).c4
    return out


@dataclass(frozen=True)
class EnergySequence:
    problem: QesProblem
    polys: tuple
    truncated: bool

    @property
    def M(self) -> int:
        return len(self.polys) - 1

    def __getitem__(self, m: int) -> RatPoly:
        if m < 0:
            return RatPoly()
        return self.polys[m]

    def __len__(self) -> int:
        return len(self.polys)

    @property
    def critical(self) -> RatPoly:
        """P_(n+1), whose roots are the algebraic eigenvalues."""
        return self.polys[self.problem.n + 1]


def generate(problem: QesProblem, M: Optional[int] = None) -> EnergySequence:
    """P_0 .. P_M with P_0 = 1, P_(-1) = 0. Defaults to M = n + 1 + 6."""
    if M is None:
        M = problem.n + 1 + DEFAULT_N_EXTRA
    if M < 1:
        raise ValueError("need M >= 1")
    polys = [RatPoly.const(1)]
    for m in range(-1, M - 1):
        c = coefficients(problem, m)
        if c.c1 == 0:
            raise RecursionBreakdownError(m)
        acc = c.c2 * polys[m + 1]
        if m >= 0 and c.c3:
            acc = acc + polys[m] * c.c3
        if m >= 1 and c.c4:
            acc = acc + polys[m - 1] * c.c4
        polys.append(acc * (-1 / c.c1))
    truncated = all(v == 0 for v in truncation_residuals(problem).values())
    return EnergySequence(problem, tuple(polys), truncated)


def recursion_residual(seq: EnergySequence, m: int) -> RatPoly:
    """The recursion combination at step m; identically zero for a valid sequence."""
    c = coefficients(seq.problem, m)
    return seq[m + 2] * c.c1 + c.c2 * seq[m + 1] + seq[m] * c.c3 + seq[m - 1] * c.c4


def parity_applicable(problem: QesProblem) -> bool:
    # c2 must be E alone and the P_(m-1) coupling must be absent
    t = problem.taylor()
    return t["A2"] == 0 and t["F1"] == 0 and all(coefficients(problem, m).c4 == 0 for m in range(3))


def parity_check(seq: EnergySequence) -> Optional[bool]:
    """True iff each P_m has only powers of E of the parity of m.

    Returns None when the recursion lacks the structure that makes the check meaningful.
    """
    if not parity_applicable(seq.problem):
        return None
    for m, p in enumerate(seq.polys):
        if any(c != 0 for j, c in enumerate(p.coeffs) if (j - m) % 2):
            return False
    return True


# Printed closed forms


def appendix_oracle(problem: QesProblem, m: int) -> RatPoly:
    """The printed closed form for P_m, evaluated verbatim with this problem's data.

    Cubic problems use the k=3 list (m = 1..5), quartic ones the k=4 list (m = 1..4).
    No convention mapping is applied here; see :func:`appendix_convention`.
    """
    t = problem.taylor()
    if problem.k <= 3:
        if not 1 <= m <= len(appendix.CUBIC):
            raise ValueError(f"closed forms for k=3 cover m = 1..5, got {m}")
        f = appendix.CUBIC[m - 1]
        return f(E, t["A1"], t["A2"], t["A3"], t["F0"], t["F1"], t["F2"], t["B1"])
    if not 1 <= m <= len(appendix.QUARTIC):
        raise ValueError(f"closed forms for k=4 cover m = 1..4, got {m}")
    f = appendix.QUARTIC[m - 1]
    return f(E, t["A1"], t["A2"], t["A3"], t["F0"], t["F1"], t["F2"], t["F3"], t["B1"], t["B2"])


def appendix_convention(problem: QesProblem, m: int) -> RatPoly:
    """Printed closed form mapped into this module's convention.

    The k=3 list already agrees. The k=4 list is written with the opposite sign
    for B and for the whole polynomial; the map fixed from P_1 and P_2 is
    P_m(E) = -Q_m(E; B1 -> -B1, B2 -> -B2), applied unchanged for every m.
    """
    if problem.k <= 3:
        return appendix_oracle(problem, m)
    if not 1 <= m <= len(appendix.QUARTIC):
        raise ValueError(f"closed forms for k=4 cover m = 1..4, got {m}")
    t = problem.taylor()
    f = appendix.QUARTIC[m - 1]
    return -f(E, t["A1"], t["A2"], t["A3"], t["F0"], t["F1"], t["F2"], t["F3"], -t["B1"], -t["B2"])
