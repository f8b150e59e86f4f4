"""Registry of the order-3 and order-4 master functions and their weights.

Each entry is plain data: coefficient formulas (strings over the parameter
names and ``n``) for A and for F = (AW)'/W, the log of the weight, the printed
parameter ranges and the printed operator columns used by ``table_selfcheck``.
F is always the one obtained by differentiating the weight; the printed
operator columns are kept only for comparison.
"""

from __future__ import annotations

import ast
import json
import math
import random
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Mapping, Optional

from . import expr
from .errors import UnknownModelError, ValidationError
from .model import MasterSpec, QesProblem, solve_constraints
from .poly import RatPoly, as_fraction


@dataclass(frozen=True)
class CatalogEntry:
    id: str
    table: str
    row: int
    A: tuple
    F: tuple
    log_W: str
    params: tuple
    interval: tuple
    constraints: tuple = ()
    derived: tuple = ()
    printed_alpha_rule: Optional[str] = None
    printed_drift: tuple = ()
    printed_B: tuple = ()
    coord_map: Optional[str] = None
    V_closed_form: Optional[str] = None
    exactly_solvable_limit: bool = False
    self_adjoint_possible: bool = True
    notes: str = ""

    @property
    def k(self) -> int:
        degA = max(i for i, c in enumerate(self.A) if c != "0")
        return max(degA, len(self.F))

    @property
    def free_params(self) -> tuple:
        fixed = {name for name, _ in self.derived}
        return tuple(p for p in self.params if p not in fixed)

    @property
    def in_tables(self) -> bool:
        return self.table in ("I", "II")

    @property
    def L_display(self) -> str:
        return f"-({_render(self.A)}) d^2/dx^2 - ({_render(self.F)}) d/dx + B(x)"

    def to_dict(self) -> dict:
        d = asdict(self)
        d["derived"] = dict(self.derived)
        d["k"] = self.k
        d["free_params"] = list(self.free_params)
        d["L_display"] = self.L_display
        return d


def _render(coeffs) -> str:
    terms = []
    for i, c in enumerate(coeffs):
        if c == "0":
            continue
        mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
        if mono and c == "1":
            terms.append(mono)
        elif mono:
            terms.append(f"({c})*{mono}")
        else:
            terms.append(f"({c})")
    return " + ".join(terms) or "0"


_A3 = ("alpha", "beta", "gamma")
_A4 = ("alpha", "beta", "gamma", "delta")

ENTRIES: tuple[CatalogEntry, ...] = (
    CatalogEntry(
        "T1.x", "I", 1,
        A=("0", "1"),
        F=("alpha+1", "beta", "2*gamma"),
        log_W="alpha*log(x) + beta*x + gamma*x**2",
        params=_A3, interval=("0", "inf"),
        constraints=("alpha > -1", "gamma < 0"),
        printed_drift=("-(alpha+1)", "-beta", "-2*gamma"),
        printed_B=("0", "2*n*gamma"),
        coord_map="x", V_closed_form="x", exactly_solvable_limit=True,
    ),
    CatalogEntry(
        "T1.x2", "I", 2,
        A=("0", "0", "1"),
        F=("-beta", "alpha+2", "gamma"),
        log_W="alpha*log(x) + beta/x + gamma*x",
        params=_A3, interval=("0", "inf"),
        constraints=("beta < 0", "gamma < 0"),
        printed_drift=("beta", "-(alpha+2)", "-gamma"),
        printed_B=("0", "n*gamma"),
        coord_map="x2", V_closed_form="x2", exactly_solvable_limit=True,
    ),
    CatalogEntry(
        "T1.x(1-x)", "I", 3,
        A=("0", "1", "-1"),
        F=("alpha+1", "-(alpha+beta+gamma+2)", "gamma"),
        log_W="alpha*log(x) + beta*log(1-x) - gamma*x",
        params=_A3, interval=("0", "1"),
        constraints=("alpha > -1", "beta > -1"),
        printed_drift=("-alpha-1", "alpha+beta+gamma+2", "-gamma"),
        printed_B=("0", "n*gamma"),
        coord_map="x(1-x)", V_closed_form="x(1-x)", exactly_solvable_limit=True,
    ),
    CatalogEntry(
        "T1.x3", "I", 4,
        A=("0", "0", "0", "1"),
        F=("2*beta", "gamma", "alpha+3"),
        log_W="alpha*log(x) - beta/x**2 - gamma/x",
        params=_A3, interval=("0", "inf"),
        constraints=("alpha < -3", "beta > 0"),
        printed_drift=("-2*beta", "-gamma", "-(alpha+3)"),
        printed_B=("0", "n*(n+alpha+2)"),
        coord_map="x3", V_closed_form="x3",
    ),
    CatalogEntry(
        "T1.x2(1-x)", "I", 5,
        A=("0", "0", "1", "-1"),
        F=("gamma", "alpha-gamma+2", "-(alpha+beta+3)"),
        log_W="alpha*log(x) + beta*log(1-x) - gamma/x",
        params=_A3, interval=("0", "1"),
        constraints=("beta > -1", "gamma > 0"),
        printed_drift=("-gamma", "gamma-alpha-2", "alpha+beta+3"),
        printed_B=("0", "-n*(n+alpha+beta+2)"),
        coord_map="x2(1-x)", V_closed_form="x2(1-x)",
    ),
    CatalogEntry(
        "T1.x(1+x2)", "I", 6,
        A=("0", "1", "0", "1"),
        F=("alpha+1", "gamma", "alpha+2*beta+3"),
        log_W="alpha*log(x) + beta*log(1+x**2) + gamma*atan(x)",
        params=_A3, interval=("0", "inf"),
        constraints=("alpha > -1", "beta < -(alpha+3)/2"),
        printed_drift=("-(alpha+1)", "-gamma", "-(alpha+2*beta+3)"),
        printed_B=("0", "n*(n+alpha+2*beta+2)"),
    ),
    CatalogEntry(
        "T1.heun", "I", 7,
        A=("0", "a", "-(a+1)", "1"),
        F=("a*(alpha+1)", "-(a*alpha+a*beta+2*a+alpha+gamma+2)", "alpha+beta+gamma+3"),
        log_W="alpha*log(x) + beta*log(1-x) + gamma*log(a-x)",
        params=_A3 + ("a",), interval=("0", "1"),
        constraints=("a > 1", "alpha > -1", "beta > -1"),
        printed_drift=("-a*(alpha+1)", "(a+1)*(alpha+2)+a*beta+gamma", "-(alpha+beta+gamma+3)"),
        printed_B=("0", "n*(n+alpha+beta+gamma+2)"),
    ),
    CatalogEntry(
        "T2.x4", "II", 1,
        A=("0", "0", "0", "0", "1"),
        F=("-3*beta", "-2*gamma", "-delta", "alpha+4"),
        log_W="alpha*log(x) + beta/x**3 + gamma/x**2 + delta/x",
        params=_A4, interval=("0", "inf"),
        constraints=("beta < 0",),
        derived=(("alpha", "-2*(n+1)"),),
        printed_alpha_rule="-2*(n+1)",
        printed_drift=("3*beta", "2*gamma", "delta", "-(alpha+4)"),
        printed_B=("0", "-n*delta", "-n*(n-1)"),
        coord_map="x4", V_closed_form="x4",
        self_adjoint_possible=False,
        notes="A W x^(2n-2) tends to 1 at infinity for every admissible choice, so boundary terms never vanish",
    ),
    CatalogEntry(
        "T2.x3(1-x)", "II", 2,
        A=("0", "0", "0", "1", "-1"),
        F=("2*delta", "gamma-2*delta", "alpha-gamma+3", "-(alpha+beta+4)"),
        log_W="alpha*log(x) + beta*log(1-x) - gamma/x - delta/x**2",
        params=_A4, interval=("0", "1"),
        constraints=("beta > -1", "delta > 0"),
        derived=(("alpha", "-2*(n+1)-beta"),),
        printed_alpha_rule="-2*(n+1)-beta",
        printed_drift=("-2*delta", "2*delta-gamma", "gamma-alpha-3", "alpha+beta+4"),
        printed_B=("0", "n*(n+alpha-gamma+2)", "n*(n-1)"),
        coord_map="x3(1-x)", V_closed_form="x3(1-x)",
    ),
    CatalogEntry(
        "T2.x2(1+x2)", "II", 3,
        A=("0", "0", "1", "0", "1"),
        F=("-gamma", "alpha+2", "delta-gamma", "alpha+2*beta+4"),
        log_W="alpha*log(x) + beta*log(1+x**2) + gamma/x + delta*atan(x)",
        params=_A4, interval=("0", "inf"),
        constraints=("gamma < 0",),
        derived=(("alpha", "-2*(n+beta+1)"),),
        printed_alpha_rule="-2*(n+beta+1)",
        printed_drift=("gamma", "-(alpha+2)", "gamma-delta", "-(alpha+2*beta+4)"),
        printed_B=("0", "n*(delta-gamma)", "-n*(n-1)"),
        coord_map="x2(1+x2)", V_closed_form="x2(1+x2)",
        self_adjoint_possible=False,
        notes="A W x^(2n-2) tends to a positive constant at infinity, so boundary terms never vanish",
    ),
    CatalogEntry(
        "T2.x2(1-x)(a-x)", "II", 4,
        A=("0", "0", "a", "-(a+1)", "1"),
        F=(
            "-a*delta",
            "a*alpha+a*delta+2*a+delta",
            "-(a*alpha+a*beta+3*a+alpha+delta+gamma+3)",
            "alpha+beta+gamma+4",
        ),
        log_W="alpha*log(x) + beta*log(1-x) + gamma*log(a-x) + delta/x",
        params=_A4 + ("a",), interval=("0", "1"),
        constraints=("a > 1", "beta > -1", "delta < 0"),
        derived=(("alpha", "-2*(n+1)-beta-gamma"),),
        printed_alpha_rule="-2*(n+1)-beta-gamma",
        printed_drift=(
            "a*delta",
            "-(a*alpha+(a+1)*delta+2*a)",
            "-((a+1)*alpha+a*beta+gamma+delta+3*(a+1))",
            "-(alpha+beta+gamma+4)",
        ),
        printed_B=("0", "n*((alpha-n+4)*(a+1)+a*beta+gamma+delta)", "-n*(n-1)"),
    ),
    CatalogEntry(
        "T2.x2(1-x)2", "II", 5,
        A=("0", "0", "1", "-2", "1"),
        F=("-gamma", "alpha+2*gamma+2", "-2*alpha-beta+delta-gamma-6", "alpha+beta+4"),
        log_W="alpha*log(x) + beta*log(1-x) + gamma/x + delta/(1-x)",
        params=_A4, interval=("0", "1"),
        constraints=("gamma < 0", "delta < 0"),
        derived=(("alpha", "-2*(n+1)-beta"),),
        printed_alpha_rule="-2*(n+1)-beta",
        printed_drift=("gamma", "-(alpha+2*gamma+2)", "2*alpha+beta+gamma-delta+6", "-(alpha+beta+4)"),
        printed_B=("0", "-n*(2*n+2*alpha+beta+gamma-delta+4)", "-n*(n-1)"),
        coord_map="x2(1-x)2", V_closed_form="x2(1-x)2",
    ),
    CatalogEntry(
        "T2.x(a-x)(1+x2)", "II", 6,
        A=("0", "a", "-1", "a", "-1"),
        F=("a*(alpha+1)", "a*delta-alpha-beta-2", "a*alpha+2*a*gamma+3*a-delta", "-(alpha+beta+2*gamma+4)"),
        log_W="alpha*log(x) + beta*log(a-x) + gamma*log(1+x**2) + delta*atan(x)",
        params=_A4 + ("a",), interval=("0", "a"),
        constraints=("a > 0", "-1 < beta < -2*n-2*gamma-1"),
        derived=(("alpha", "-2*(n+1)-beta-2*gamma"),),
        printed_alpha_rule="-2*(n+1)-beta-2*gamma",
        printed_drift=(
            "-a*(alpha+1)",
            "alpha+beta-a*(delta-2)",
            "-(a*(alpha+2*gamma+3)-delta)",
            "alpha+beta+2*gamma+4",
        ),
        printed_B=("0", "n*(a*(n+alpha+2*gamma+2)-delta)", "n*(n-1)"),
    ),
    CatalogEntry(
        "T2.x(1-x)(a-x)(b-x)", "II", 7,
        A=("0", "a*b", "-(a+b+a*b)", "a+b+1", "-1"),
        F=(
            "a*b*(alpha+1)",
            "-(a*alpha*b+a*alpha+a*b*beta+2*a*b+a*delta+2*a+alpha*b+b*gamma+2*b)",
            "a*alpha+a*beta+a*delta+3*a+alpha*b+alpha+b*beta+b*gamma+3*b+delta+gamma+3",
            "-(alpha+beta+gamma+delta+4)",
        ),
        log_W="alpha*log(x) + beta*log(1-x) + gamma*log(a-x) + delta*log(b-x)",
        params=_A4 + ("a", "b"), interval=("0", "1"),
        constraints=("1 < a < b", "-1 < beta < 2*n-gamma-1"),
        derived=(("alpha", "-2*(n+1)-beta-gamma-delta"),),
        printed_alpha_rule="-2*(n+1)-beta-gamma",
        printed_drift=(
            "-a*b*(alpha+1)",
            "2*(a+b+a*b)+a*b*(alpha+beta)+b*(alpha+gamma)+a*(alpha+delta)",
            "-((a+b)*(alpha+beta+3)+(a+1)*delta+alpha+gamma+3)",
            "alpha+beta+gamma+4",
        ),
        printed_B=("0", "n*((a+b)*(alpha+beta+n+2)+(a+1)*delta+alpha+gamma+n+2)", "n*(n-1)"),
        notes="the printed alpha rule omits delta; the cubic drift identity needs -delta as well",
    ),
    CatalogEntry(
        "P.x2(1-x2)", "potential", 0,
        A=("0", "0", "1", "0", "-1"),
        F=("-delta", "alpha+2", "gamma-beta+delta", "-(alpha+beta+gamma+4)"),
        log_W="alpha*log(x) + beta*log(1-x) + gamma*log(1+x) + delta/x",
        params=_A4, interval=("0", "1"),
        constraints=("beta > -1", "delta < 0"),
        derived=(("alpha", "-2*(n+1)-beta-gamma"),),
        coord_map="x2(1-x2)", V_closed_form="x2(1-x2)",
        notes="potential-only entry; weight reconstructed so that the chain rule reproduces the closed form",
    ),
)

REGISTRY: Mapping[str, CatalogEntry] = {e.id: e for e in ENTRIES}


def get(entry_id: str) -> CatalogEntry:
    try:
        return REGISTRY[entry_id]
    except KeyError:
        raise UnknownModelError(f"unknown model {entry_id!r}; try `qes list`") from None


def table_entries(k: Optional[int] = None) -> list[CatalogEntry]:
    return [e for e in ENTRIES if e.in_tables and (k is None or e.k == k)]


def registry_json(indent: int = 2) -> str:
    return json.dumps({"schema": "qes-catalog/1", "entries": [e.to_dict() for e in ENTRIES]}, indent=indent)


# Instantiation


def _env(entry: CatalogEntry, params: Mapping, n: int, *, check_derived: bool = True) -> dict:
    env = {"n": Fraction(n), "inf": math.inf}
    derived = dict(entry.derived)
    for name, value in params.items():
        if name not in entry.params:
            raise ValidationError(f"{entry.id} has no parameter {name!r} (expected {', '.join(entry.params)})")
        if name in derived and check_derived:
            raise ValidationError(f"{name} is fixed by n for {entry.id} ({name} = {derived[name]})")
        env[name] = as_fraction(value)
    for name, formula in entry.derived:
        env[name] = expr.evaluate(formula, env)
    missing = [p for p in entry.params if p not in env]
    if missing:
        raise ValidationError(f"{entry.id} needs values for {', '.join(missing)}")
    return env


def _range_empty(constraint: str, env) -> bool:
    """True for a chained ``lo < name < hi`` whose bounds leave nothing."""
    node = expr.parse(constraint).body
    if not (isinstance(node, ast.Compare) and len(node.comparators) == 2):
        return False
    lo = expr.evaluate(ast.unparse(node.left), env)
    hi = expr.evaluate(ast.unparse(node.comparators[1]), env)
    return not lo < hi


def check_params(entry: CatalogEntry, env: Mapping, skip=()) -> list[str]:
    problems = []
    for c in entry.constraints:
        if expr.names(c) & set(skip):
            continue
        if not expr.evaluate(c, env):
            if _range_empty(c, env):
                problems.append(f"{c} (the printed range is empty for these parameters)")
            else:
                problems.append(c)
    return problems


def _coeffs(formulas, env) -> RatPoly:
    return RatPoly([expr.evaluate(f, env) for f in formulas])


def build_spec(entry: CatalogEntry, env: Mapping) -> MasterSpec:
    a, b = (expr.evaluate(s, env) for s in entry.interval)
    params = {p: env[p] for p in entry.params}
    return MasterSpec(
        _coeffs(entry.A, env), _coeffs(entry.F, env), (a, b), params, tuple(entry.constraints)
    )


def instantiate(entry_id: str, params: Mapping, n: int, *, check: bool = True) -> QesProblem:
    """Exact operator for a catalog row; derived parameters are computed from n."""
    entry = get(entry_id)
    if n < 0:
        raise ValidationError("n must be non-negative")
    env = _env(entry, params, n)
    if check:
        bad = check_params(entry, env)
        if bad:
            raise ValidationError(f"{entry.id}: parameter constraint violated: {'; '.join(bad)}")
    return solve_constraints(build_spec(entry, env), n)


def exactly_solvable(entry_id: str, params: Mapping, n: int) -> QesProblem:
    """The gamma = 0 degeneration of a degree <= 2 master function (B then vanishes)."""
    entry = get(entry_id)
    if not entry.exactly_solvable_limit:
        raise ValidationError(f"{entry.id} has no exactly solvable limit")
    params = dict(params, gamma=0)
    env = _env(entry, params, n)
    bad = check_params(entry, env, skip=("gamma",))
    if bad:
        raise ValidationError(f"{entry.id}: parameter constraint violated: {'; '.join(bad)}")
    return solve_constraints(build_spec(entry, env), n)


def log_weight(entry_id: str, params: Mapping, n: int):
    """x -> log W(x) as a float callable."""
    entry = get(entry_id)
    env = _env(entry, params, n)
    fenv = {k: float(v) for k, v in env.items()}

    def log_W(x: float) -> float:
        return float(expr.evaluate(entry.log_W, dict(fenv, x=x)))

    return log_W


# Boundary terms

# smallest accepted decay exponent; analytic corrections such as delta/x stay far below it
DECAY_MARGIN = 1e-4


@dataclass
class BoundaryReport:
    ok: bool
    slopes: dict

    def __bool__(self) -> bool:
        return self.ok


def _log_AW(entry: CatalogEntry, fenv: dict, A: RatPoly, x: float) -> float:
    # exact A: the monomial form cancels badly next to a root of A
    return math.log(abs(A(Fraction(x)))) + float(expr.evaluate(entry.log_W, dict(fenv, x=x)))


def boundary_terms_vanish(entry_id: str, params: Mapping, n: int) -> BoundaryReport:
    """Decay test for A W p q' at the interval ends, p and q of degree <= n.

    At a finite end polynomials stay bounded, so A W must go to zero there; at
    an infinite end A W x^(2n-2) must (the leading
    terms of p q' - q p' cancel). The test samples log(A W) on a geometric
    ladder towards each end and requires a clearly positive decay rate.
    """
    entry = get(entry_id)
    env = _env(entry, params, n, check_derived=False)
    fenv = {k: float(v) for k, v in env.items()}
    A = _coeffs(entry.A, env)
    a, b = (float(expr.evaluate(s, env)) for s in entry.interval)
    slopes = {}
    for name, end, inward in (("a", a, 1.0), ("b", b, -1.0)):
        try:
            if math.isfinite(end):
                d1, d2 = 1e-6, 1e-9
                v1 = _log_AW(entry, fenv, A, end + inward * d1)
                v2 = _log_AW(entry, fenv, A, end + inward * d2)
                slope = (v1 - v2) / math.log(d1 / d2)
            else:
                x1, x2 = 1e6, 1e9
                p = max(2 * n - 2, 0)
                v1 = _log_AW(entry, fenv, A, -inward * x1) + p * math.log(x1)
                v2 = _log_AW(entry, fenv, A, -inward * x2) + p * math.log(x2)
                slope = (v1 - v2) / math.log(x2 / x1)
        except (ValueError, ZeroDivisionError, OverflowError):
            slope = math.nan
        slopes[name] = slope
    ok = all(s > DECAY_MARGIN for s in slopes.values())
    return BoundaryReport(ok, slopes)


# Random valid parameters


def sample_params(entry_id: str, n: int, rng: random.Random, max_tries: int = 20000,
                  *, self_adjoint: bool = False) -> dict:
    """Rejection-sample small rationals satisfying the printed ranges.

    With ``self_adjoint=True`` the draw must also pass :func:`boundary_terms_vanish`.
    """
    entry = get(entry_id)
    if self_adjoint and not entry.self_adjoint_possible:
        raise ValidationError(f"{entry.id}: no parameter choice makes the boundary terms vanish")
    span = 4 + 2 * n
    for _ in range(max_tries):
        params = {}
        for p in entry.free_params:
            if p in ("a", "b"):
                params[p] = Fraction(rng.randint(1, 24), 4)
            else:
                params[p] = Fraction(rng.randint(-span * 4, span * 4), rng.choice((1, 2, 4)))
        try:
            env = _env(entry, params, n)
        except ValidationError:
            continue
        if check_params(entry, env):
            continue
        if self_adjoint and not boundary_terms_vanish(entry.id, params, n):
            continue
        return params
    raise ValidationError(f"could not sample valid parameters for {entry.id} at n = {n}")


# Self-check against the printed operator columns


@dataclass
class ColumnMismatch:
    column: str
    power: int
    printed: str
    derived: str
    params: dict


@dataclass
class SelfCheckReport:
    id: str
    trials: int
    mismatches: list = field(default_factory=list)
    weight_ok: bool = True
    weight_error: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.mismatches and self.weight_ok

    def summary(self) -> str:
        if self.ok:
            return f"{self.id}: printed operator agrees with the weight-derived one ({self.trials} draws)"
        cols = sorted({f"{m.column}[x^{m.power}]" for m in self.mismatches})
        parts = [f"{self.id}: printed column differs at {', '.join(cols)}"] if cols else [f"{self.id}:"]
        if not self.weight_ok:
            parts.append(f"F is inconsistent with log W (rel. err {self.weight_error:.2e})")
        return " ".join(parts)


def _weight_error(entry: CatalogEntry, env, A: RatPoly, F: RatPoly, rng: random.Random) -> float:
    """max relative gap between F and A' + A (log W)' at interior points."""
    a, b = (float(expr.evaluate(s, env)) for s in entry.interval)
    hi = b if math.isfinite(b) else a + 4.0
    fenv = {k: float(v) for k, v in env.items()}
    worst = 0.0
    for _ in range(5):
        x = a + (hi - a) * rng.uniform(0.2, 0.8)
        h = 1e-5 * max(1.0, abs(x))
        lw = [float(expr.evaluate(entry.log_W, dict(fenv, x=x + s * h))) for s in (-2, -1, 1, 2)]
        dlog = (lw[0] - 8 * lw[1] + 8 * lw[2] - lw[3]) / (12 * h)
        lhs = F.evalf(x)
        rhs = A.derivative().evalf(x) + A.evalf(x) * dlog
        worst = max(worst, abs(lhs - rhs) / max(1.0, abs(lhs)))
    return worst


def table_selfcheck(entry_id: str, n: int = 3, trials: int = 5, seed: int = 0) -> SelfCheckReport:
    """Compare the weight-derived drift -F and B with the printed operator row."""
    entry = get(entry_id)
    rng = random.Random(seed)
    report = SelfCheckReport(entry.id, trials)
    seen = set()
    for _ in range(trials):
        params = sample_params(entry.id, n, rng)
        env = _env(entry, params, n)
        problem = solve_constraints(build_spec(entry, env), n)
        err = _weight_error(entry, env, problem.A, problem.F, rng)
        report.weight_error = max(report.weight_error, err)
        if err > 1e-6:
            report.weight_ok = False
        if not entry.printed_drift:
            continue
        drift = -problem.F
        for column, formulas, actual in (("drift", entry.printed_drift, drift), ("B", entry.printed_B, problem.B)):
            size = max(len(formulas), actual.degree + 1)
            for i in range(size):
                printed = expr.evaluate(formulas[i], env) if i < len(formulas) else Fraction(0)
                if printed != actual[i] and (column, i) not in seen:
                    seen.add((column, i))
                    report.mismatches.append(
                        ColumnMismatch(column, i, str(printed), str(actual[i]), {k: str(v) for k, v in params.items()})
                    )
    return report


def printed_alpha_identity(entry_id: str, points: int = 10, seed: int = 0) -> list[dict]:
    """Evaluate F'''(0) + A''''(0)(n-1)/2 with alpha set by the printed rule.

    Returns one record per random rational point; the identity holds when every
    residual is zero.
    """
    entry = get(entry_id)
    if entry.printed_alpha_rule is None:
        raise ValidationError(f"{entry.id} has no printed alpha rule")
    rng = random.Random(seed)
    out = []
    for _ in range(points):
        n = rng.randint(1, 8)
        env = {"n": Fraction(n)}
        for p in entry.free_params:
            env[p] = Fraction(rng.randint(-60, 60), rng.randint(1, 9))
        env["alpha"] = expr.evaluate(entry.printed_alpha_rule, env)
        A = _coeffs(entry.A, env)
        F = _coeffs(entry.F, env)
        residual = F.taylor_coeff(3) + A.taylor_coeff(4) * (n - 1) / 2
        out.append({"n": n, "params": {k: str(v) for k, v in env.items() if k != "n"}, "residual": residual})
    return out
