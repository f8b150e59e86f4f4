"""Schrodinger form of the operators: dx/dt = sqrt(A), psi(t) = A^(1/4) W^(1/2) phi(x).

``potential_chain_rule`` builds V(t) from x-space data only (A, F, B), using
W'/W = (F - A')/A as an exact rational function. ``closed_form_V`` evaluates
the printed closed forms, which serve as cross-checks. Units: hbar = 2m = 1.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Mapping

import numpy as np
from scipy.linalg import eigh_tridiagonal

from .errors import DomainError, SingularityError, UnknownModelError
from .model import QesProblem
from .poly import RatFunc

log = logging.getLogger(__name__)

sin, cos, exp = math.sin, math.cos, math.exp
sinh, cosh, tanh = math.sinh, math.cosh, math.tanh


@dataclass(frozen=True)
class CoordMap:
    id: str
    x_of_t: Callable[[float], float]
    t_domain: tuple
    dx_dt_identity_tol: float = 1e-10


def _sech2_half(t):
    return 1 - tanh(t / 2) ** 2


COORD_MAPS: dict[str, CoordMap] = {
    "x": CoordMap("x", lambda t: t * t / 4, (0.0, math.inf)),
    "x2": CoordMap("x2", lambda t: exp(t), (-math.inf, math.inf)),
    "x(1-x)": CoordMap("x(1-x)", lambda t: (1 + sin(t)) / 2, (-math.pi / 2, math.pi / 2)),
    "x3": CoordMap("x3", lambda t: 4 / (t * t), (0.0, math.inf)),
    "x2(1-x)": CoordMap("x2(1-x)", _sech2_half, (0.0, math.inf)),
    "x4": CoordMap("x4", lambda t: 1 / t, (0.0, math.inf)),
    "x3(1-x)": CoordMap("x3(1-x)", lambda t: 4 / (4 + t * t), (0.0, math.inf)),
    "x2(1+x2)": CoordMap("x2(1+x2)", lambda t: -1 / sinh(t), (-math.inf, 0.0)),
    "x2(1-x2)": CoordMap("x2(1-x2)", lambda t: 1 / cosh(t), (0.0, math.inf)),
    "x2(1-x)2": CoordMap("x2(1-x)2", lambda t: exp(t) / (1 + exp(t)), (-math.inf, math.inf)),
}


def coord_map(map_id: str) -> CoordMap:
    try:
        return COORD_MAPS[map_id]
    except KeyError:
        raise UnknownModelError(f"no coordinate map {map_id!r}") from None


def _inside(x: float, interval) -> bool:
    a, b = interval
    return a < x < b


@dataclass(frozen=True)
class _XData:
    A: object
    dA: object
    d2A: object
    g: RatFunc
    dg: RatFunc
    V: RatFunc


_xdata_cache: dict = {}


def _xdata(problem: QesProblem) -> _XData:
    key = (problem.A, problem.F)
    data = _xdata_cache.get(key)
    if data is None:
        A = problem.A
        dA, d2A = A.derivative(), A.derivative(2)
        g = RatFunc(problem.F - dA, A)
        dg = g.derivative()
        # the chain-rule terms below with the odd powers of sqrt(A) cancelled
        V = (
            RatFunc(dA * dA * Fraction(-1, 16), A)
            + RatFunc(d2A * Fraction(1, 4))
            + g * g * A * Fraction(1, 4)
            + g * dA * Fraction(1, 2)
            + dg * A * Fraction(1, 2)
            + RatFunc(problem.B)
        )
        data = _XData(A, dA, d2A, g, dg, V)
        _xdata_cache[key] = data
    return data


def dotted_quantities(problem: QesProblem, x: float) -> dict[str, float]:
    """t-derivatives expressed through x-space data with dx/dt = sqrt(A)."""
    d = _xdata(problem)
    A = d.A.evalf(x)
    if not A > 0:
        raise DomainError(f"A({x}) = {A} is not positive")
    try:
        g = d.g.evalf(x)
        dg = d.dg.evalf(x)
    except ZeroDivisionError:
        raise SingularityError(f"W'/W has a pole at x = {x}") from None
    dA, d2A = d.dA.evalf(x), d.d2A.evalf(x)
    root = math.sqrt(A)
    return {
        "A": A,
        "Adot": dA * root,
        "Addot": d2A * A + dA * dA / 2,
        "Wdot/W": g * root,
        "Wddot/W": (dg + g * g) * A + g * dA / 2,
    }


def potential_at_x(problem: QesProblem, x: float) -> float:
    """V at x, evaluated exactly at the rational value of x.

    Near a simple root of A the separate chain-rule terms grow like 1/(x - x0)^2
    and cancel; the combined rational function keeps full precision there.
    """
    d = _xdata(problem)
    xq = Fraction(x)
    if not d.A(xq) > 0:
        raise DomainError(f"A({x}) = {d.A.evalf(x)} is not positive")
    try:
        return float(d.V(xq))
    except ZeroDivisionError:
        raise SingularityError(f"W'/W has a pole at x = {x}") from None


def potential_from_dotted(problem: QesProblem, x: float) -> float:
    """Float evaluation of the chain-rule formula term by term (reference form)."""
    q = dotted_quantities(problem, x)
    A, Ad, Add, w1, w2 = q["A"], q["Adot"], q["Addot"], q["Wdot/W"], q["Wddot/W"]
    return (
        -3 / 16 * (Ad / A) ** 2
        - w1 * w1 / 4
        + Ad * w1 / (4 * A)
        + Add / (4 * A)
        + w2 / 2
        + problem.B.evalf(x)
    )


def _fmt_interval(interval) -> str:
    return "(" + ", ".join(f"{float(v):g}" for v in interval) + ")"


def potential_chain_rule(problem: QesProblem, cmap: CoordMap, t: float) -> float:
    if not _inside(t, cmap.t_domain):
        raise DomainError(f"t = {t} lies outside the t-domain {_fmt_interval(cmap.t_domain)}")
    x = cmap.x_of_t(t)
    if not _inside(x, problem.spec.interval):
        raise DomainError(f"x(t={t}) = {x} lies outside {_fmt_interval(problem.spec.interval)}")
    return potential_at_x(problem, x)


# Printed closed forms. Parameters arrive as floats keyed by name.


def _V_x(p, n, t):
    al, be, ga = p["alpha"], p["beta"], p["gamma"]
    return (
        be / 2 * (al + 1)
        + (al**2 - 1 / 4) / t**2
        + 1 / 2 * (be**2 / 8 + ga * (n + 1 + al / 2)) * t**2
        + be * ga / 16 * t**4
        + ga**2 / 64 * t**6
    )


def _V_x2(p, n, t):
    al, be, ga = p["alpha"], p["beta"], p["gamma"]
    return 1 / 4 * (
        1 + al**2 - 2 * be * ga + 2 * al
        - 2 * al * be * exp(-t)
        + be**2 * exp(-2 * t)
        + ga**2 * exp(2 * t)
        + 2 * (2 * ga + 2 * n * ga + al * ga) * exp(t)
    )


def _V_x1mx(p, n, t):
    al, be, ga = p["alpha"], p["beta"], p["gamma"]
    return (
        1 / 2 * (
            n * ga - al * be - be - al
            + 1 / 2 * (be * ga - al**2 - be**2 - al * ga - 1)
            + (al * ga / 2 + ga + be * ga / 2 + n * ga) * sin(t)
        )
        + 1 / 2 * (al**2 + be**2 - 1 / 2 + (be**2 - al**2) * sin(t)) / cos(t) ** 2
        + ga**2 / 16 * cos(t) ** 2
    )


def _V_x3(p, n, t):
    al, be, ga = p["alpha"], p["beta"], p["gamma"]
    return (
        ga / 2 * (al + 1)
        + (15 / 4 + al**2 + 4 * n * al + 4 * al + 4 * n**2 + 8 * n) / t**2
        + 1 / 4 * (al * be + ga**2 / 4) * t**2
        + be * ga / 16 * t**4
        + be**2 / 64 * t**6
    )


def _V_x2_1mx(p, n, t):
    al, be, ga = p["alpha"], p["beta"], p["gamma"]
    c = cosh(t)
    return (1 / (c**2 - 1)) * (
        -(2 * n**2 + 2 + 2 * n * al + al**2 / 2 + 4 * n + al * be + 2 * al + al * ga / 4 + 2 * n * be + 2 * be) * c
        + 1 / 2 * (-(ga**2) / 4 - al * ga / 2 + 1 / 2 - ga + al - be * ga + al**2 / 2) * c**2
        + al * ga / 4 * c**3
        + ga**2 / 16 * c**4
        + (
            ga / 2 + 4 * n + al * be + 3 * al / 2 + be**2 + 2 * be + 3 / 2 + al**2 / 4
            + al * ga / 4 + be * ga / 2 + ga**2 / 16 + 2 * n * be + 2 * n**2 + 2 * n * al
        )
    )


def _V_x4(p, n, t):
    be, ga, de = p["beta"], p["gamma"], p["delta"]
    return (
        (de**2 / 4 + ga + 2 * n * ga)
        + (ga * de + 3 * n * be + 3 * be) * t
        + (3 * be * de / 2 + ga**2) * t**2
        + 3 * be * ga * t**3
        + 9 * be**2 / 4 * t**4
    )


def _V_x3_1mx(p, n, t):
    be, ga, de = p["beta"], p["gamma"], p["delta"]
    return (
        -(ga / 2 + de + be * de + be * ga / 2 + n * ga)
        + (be**2 - 1 / 4) / t**2
        + 1 / 2 * (-n * de + de**2 / 2 - be * de / 2 - de + ga**2 / 8 + ga * de / 2) * t**2
        + de / 8 * (ga / 2 + de) * t**4
        + de**2 / 64 * t**6
    )


def _V_x2_1px2(p, n, t):
    be, ga, de = p["beta"], p["gamma"], p["delta"]
    s = sinh(t)
    return (
        (n + n**2 - ga * de / 2 + 1 / 4 + 2 * n * be + be + be**2 - (n * ga + ga + be * ga) * s)
        + (de**2 / 4 + be * de * s - be**2 + 1 / 4) / cosh(t) ** 2
        + ga**2 / 4 * cosh(t) ** 2
    )


def _V_x2_1mx2(p, n, t):
    be, ga, de = p["beta"], p["gamma"], p["delta"]
    c = cosh(t)
    return (1 / (c**2 - 1)) * (
        (
            -ga / 2 - n - be / 2 + ga**2 / 4 + de**2 / 4 - be * ga / 2
            - be * de / 2 + ga * de / 2 - 1 / 2 - n * be + be**2 / 4 - n * ga - n**2
        )
        + (
            be * de / 2 + n * be - ga * de / 2 + n * ga + ga / 2 + 1 / 4 + be / 2 + be * ga / 2
            - de**2 / 2 + n**2 + be**2 / 4 + n + ga**2 / 4
        ) * c**2
        + (-ga * de / 2 - n * de - de - ga**2 / 2 - be * de / 2 + be**2 / 2) * c
        + (de + n * de + be * de / 2 + ga * de / 2) * c**3
        + de**2 / 4 * c**4
    )


def _V_x2_1mx_2(p, n, t):
    be, ga, de = p["beta"], p["gamma"], p["delta"]

    # every S(k) carries the same exp(-2(...)) factor; it cancels against S(6)
    # below, so each ratio S(k)/S(6) is formed from the exponent difference
    def S(k):
        return exp(-(k - 6) * t)

    body = (
        de**2 / 4 * S(4)
        + de * (de - be / 2) * S(5)
        + (1 / 4 - ga * de / 2 + n**2 + be**2 / 4 - n * ga + be / 2 + n - 2 * be * de + 3 * de**2 / 2 + n * be) * S(6)
        + (
            -3 * be * de + be * ga / 2 - 3 * n * ga + ga + 4 * n + de**2 - 2 * ga * de
            + be**2 + 1 + 4 * n**2 + 2 * be + 4 * n * be
        ) * S(7)
        + (
            3 * be + 6 * n + 3 * be**2 / 2 - 3 * ga * de + 3 / 2 + de**2 / 4 + ga**2 / 4
            + 6 * n**2 - 2 * be * de + 4 * ga + 6 * n * be + 2 * be * ga - 2 * n * ga
        ) * S(8)
        + (
            4 * n**2 - be * de / 2 - 2 * ga * de + 3 * be * ga + 1 + 2 * n * ga + 4 * n
            + be**2 + 2 * be + ga**2 + 6 * ga + 4 * n * be
        ) * S(9)
        + (
            -ga * de / 2 + 3 * ga**2 / 2 + 4 * ga + n + 2 * be * ga + 3 * n * ga + 1 / 4
            + be**2 / 4 + be / 2 + n * be + n**2
        ) * S(10)
        + (n * ga + ga**2 + be * ga / 2 + ga) * S(11)
        + ga**2 / 4 * S(12)
    )
    return body / (exp(-t) + 1) ** 4


CLOSED_FORMS: dict[str, Callable] = {
    "x": _V_x,
    "x2": _V_x2,
    "x(1-x)": _V_x1mx,
    "x3": _V_x3,
    "x2(1-x)": _V_x2_1mx,
    "x4": _V_x4,
    "x3(1-x)": _V_x3_1mx,
    "x2(1+x2)": _V_x2_1px2,
    "x2(1-x2)": _V_x2_1mx2,
    "x2(1-x)2": _V_x2_1mx_2,
}


def closed_form_V(form_id: str, params: Mapping[str, float], n: int, t: float) -> float:
    try:
        fn = CLOSED_FORMS[form_id]
    except KeyError:
        raise UnknownModelError(f"no closed-form potential {form_id!r}") from None
    p = {k: float(v) for k, v in params.items()}
    try:
        v = fn(p, n, t)
    except ZeroDivisionError:
        raise SingularityError(f"closed form {form_id!r} is singular at t = {t}") from None
    if not math.isfinite(v):
        raise SingularityError(f"closed form {form_id!r} is not finite at t = {t}")
    return v


@dataclass
class PotentialProfile:
    samples: list
    n: int
    params: dict
    provenance: str
    extra_columns: dict = field(default_factory=dict)

    def to_csv(self) -> str:
        names = list(self.extra_columns)
        lines = [",".join(["t", "V", *names])]
        for idx, (t, v) in enumerate(self.samples):
            row = [repr(t), repr(v)] + [repr(self.extra_columns[c][idx]) for c in names]
            lines.append(",".join(row))
        return "\n".join(lines) + "\n"


def sample_potential(problem: QesProblem, cmap: CoordMap, ts) -> PotentialProfile:
    samples = []
    for t in ts:
        samples.append((float(t), potential_chain_rule(problem, cmap, float(t))))
    return PotentialProfile(samples, problem.n, dict(problem.spec.params), "chain_rule")


# Eigenfunctions in t


def transform_eigenfunction(problem: QesProblem, cmap: CoordMap, log_W: Callable[[float], float],
                            psi_coeffs, t: float) -> float:
    """A(x)^(1/4) W(x)^(1/2) psi(x) at x = x(t); ``log_W`` is the weight's closed-form log."""
    x = cmap.x_of_t(t)
    A = problem.A.evalf(x)
    if not A > 0:
        raise DomainError(f"A({x}) = {A} is not positive")
    try:
        lw = log_W(x)
    except (ValueError, ZeroDivisionError):
        raise DomainError(f"W is undefined at x = {x}") from None
    if not math.isfinite(lw):
        raise DomainError(f"W is not finite at x = {x}")
    psi = 0.0
    for c in reversed(list(psi_coeffs)):
        psi = psi * x + float(c)
    return A ** 0.25 * math.exp(lw / 2) * psi


# Finite differences


@dataclass
class FDResult:
    levels: list
    t_domain: tuple
    grid_points: int
    boundary_mass: list
    reliable: bool


def fd_schrodinger(V: Callable[[np.ndarray], np.ndarray], t_domain, grid_points: int = 4001,
                   num_levels: int = 4, tol: float = 1e-10) -> FDResult:
    """Lowest levels of -d^2/dt^2 + V on a finite interval with Dirichlet ends.

    ``grid_points`` counts the nodes including both endpoints; the interior nodes
    carry the unknowns of a symmetric tridiagonal matrix whose lowest eigenvalues
    are found by Sturm-count bisection (LAPACK stebz).
    """
    lo, hi = map(float, t_domain)
    if not (math.isfinite(lo) and math.isfinite(hi) and lo < hi):
        raise DomainError(f"finite-difference domain must be finite, got {t_domain}")
    if grid_points < 200:
        raise ValueError("grid_points must be at least 200")
    t = np.linspace(lo, hi, grid_points)
    h = t[1] - t[0]
    inner = t[1:-1]
    v = np.asarray(V(inner), dtype=float)
    if not np.all(np.isfinite(v)):
        raise SingularityError("potential is not finite on the grid")
    diag = 2.0 / h**2 + v
    off = np.full(len(inner) - 1, -1.0 / h**2)
    w, vecs = eigh_tridiagonal(
        diag, off, select="i", select_range=(0, num_levels - 1), lapack_driver="stebz", tol=tol
    )
    edge = max(1, len(inner) // 100)
    mass = []
    for k in range(vecs.shape[1]):
        u = vecs[:, k] ** 2
        mass.append(float((u[:edge].sum() + u[-edge:].sum()) / u.sum()))
    reliable = mass[0] <= 1e-4
    if not reliable:
        log.warning("ground state carries %.2e of its mass at the box edges; truncation may be too tight", mass[0])
    return FDResult([float(e) for e in w], (lo, hi), grid_points, mass, reliable)


def confining_domain(V: Callable[[float], float], start: float, direction: int, threshold: float,
                     limit: float = 1e6, step: float = 1e-3) -> float:
    """Walk from ``start`` until V exceeds ``threshold`` (geometric steps)."""
    t = start
    dt = step
    while abs(t - start) < limit:
        t_next = t + direction * dt
        try:
            v = V(t_next)
        except (DomainError, ZeroDivisionError, OverflowError):
            return t
        if v >= threshold:
            return t_next
        t = t_next
        dt *= 1.05
    raise DomainError("potential does not confine within the search limit")
