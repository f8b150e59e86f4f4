"""End-to-end runs shared by the command line, the scripts and the tests."""

from __future__ import annotations

import math
import os
import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Optional

import numpy as np

from . import catalog
from .errors import DomainError, QesError, SingularityError, ValidationError
from .matrix_oracle import oracle_compare
from .model import MasterSpec, QesProblem, solve_constraints, validate_spec
from .poly import RatPoly, as_fraction
from .potential import (
    coord_map,
    closed_form_V,
    confining_domain,
    fd_schrodinger,
    potential_chain_rule,
    transform_eigenfunction,
)
from .recursion import DEFAULT_N_EXTRA, generate, parity_check
from .spectrum import factorization_check, oscillation_check, solve_spectrum

# FD truncation: V must exceed this multiple of the largest |E| (and at least this value)
FD_CONFINEMENT_FACTOR = 25


def parse_rational_list(text: str) -> RatPoly:
    """"0,1/2,-3" -> RatPoly, ascending powers."""
    try:
        return RatPoly([Fraction(tok.strip()) for tok in text.split(",") if tok.strip()])
    except (ValueError, ZeroDivisionError):
        raise ValidationError(f"cannot read coefficient list {text!r}; expected comma-separated rationals") from None


def parse_interval(text: str) -> tuple:
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 2:
        raise ValidationError(f"interval needs two ends, got {text!r}")

    def end(tok):
        if tok in ("inf", "+inf"):
            return math.inf
        if tok == "-inf":
            return -math.inf
        return Fraction(tok)

    try:
        return end(parts[0]), end(parts[1])
    except (ValueError, ZeroDivisionError):
        raise ValidationError(f"cannot read interval {text!r}") from None


def custom_problem(A: RatPoly, F: RatPoly, n: int, interval=(0, math.inf)) -> QesProblem:
    spec = MasterSpec(A, F, interval)
    report = validate_spec(spec)
    if not report.ok:
        raise ValidationError("; ".join(report.violations))
    return solve_constraints(spec, n)


@dataclass
class RunReport:
    problem: QesProblem
    model: Optional[str]
    spectrum: object
    factorization: object
    oracle: object
    oscillation: object
    oscillation_asserted: bool
    parity: Optional[bool]
    timings: dict = field(default_factory=dict)

    @property
    def verified(self) -> bool:
        ok = self.factorization.all_exact and self.oracle.equal
        if self.oscillation_asserted:
            ok = ok and self.oscillation.ok
        if self.parity is False:
            ok = False
        return ok


def run_solve(problem: QesProblem, *, model: Optional[str] = None, N_extra: int = DEFAULT_N_EXTRA,
              tol: float = 1e-12, oscillation_asserted: bool = False) -> RunReport:
    """constraints -> recursion -> spectrum -> factorization -> oracle -> nodes."""
    timings = {}
    t0 = time.perf_counter()
    seq = generate(problem, problem.n + 1 + N_extra)
    timings["recursion"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    fact = factorization_check(seq, N_max=N_extra)
    timings["factorization"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    oracle = oracle_compare(problem, seq)
    timings["oracle"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    spec = solve_spectrum(seq, tol=tol)
    timings["spectrum"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    osc = oscillation_check(seq, spec)
    timings["oscillation"] = time.perf_counter() - t0

    return RunReport(problem, model, spec, fact, oracle, osc, oscillation_asserted, parity_check(seq), timings)


def solve_model(model: str, params: Mapping, n: int, **kwargs) -> RunReport:
    problem = catalog.instantiate(model, params, n)
    asserted = bool(catalog.boundary_terms_vanish(model, params, n))
    return run_solve(problem, model=model, oscillation_asserted=asserted, **kwargs)


# Potentials


def _map_for(model: str):
    entry = catalog.get(model)
    if entry.coord_map is None:
        raise ValidationError(f"{model} has no closed-form coordinate map (elliptic change of variable)")
    return entry, coord_map(entry.coord_map)


def potential_samples(model: str, params: Mapping, n: int, ts, *, with_closed_form: bool = False) -> dict:
    """Chain-rule V at each t, optionally next to the printed closed form."""
    entry, cmap = _map_for(model)
    problem = catalog.instantiate(model, params, n)
    env = catalog._env(entry, params, n)
    full = {k: env[k] for k in entry.params}
    out = {"t": [], "V": []}
    if with_closed_form and entry.V_closed_form:
        out["V_closed_form"] = []
    for t in ts:
        t = float(t)
        try:
            v = potential_chain_rule(problem, cmap, t)
        except DomainError as exc:
            raise SingularityError(f"potential undefined at t = {t!r}: {exc}") from None
        if not math.isfinite(v):
            raise SingularityError(f"potential undefined at t = {t!r}")
        out["t"].append(t)
        out["V"].append(v)
        if "V_closed_form" in out:
            out["V_closed_form"].append(closed_form_V(entry.V_closed_form, full, n, t))
    return out


def schrodinger_eigenfunction(model: str, params: Mapping, n: int, report: RunReport, i: int, t: float) -> float:
    entry, cmap = _map_for(model)
    log_W = catalog.log_weight(model, params, n)
    return transform_eigenfunction(report.problem, cmap, log_W, report.spectrum.eigenfunction(i), t)


@dataclass
class FDComparison:
    algebraic: list
    fd: list
    relative_errors: list
    t_domain: tuple
    grid_points: int
    reliable: bool
    notes: list


def fd_domain(problem: QesProblem, cmap, energies, notes: list) -> tuple:
    """Finite box for the FD solve.

    Finite ends of the t-domain are used as they are (Dirichlet there, V is only
    sampled at interior nodes); infinite ends are cut where V exceeds the
    confinement threshold.
    """
    scale = max([1.0] + [abs(e) for e in energies])
    threshold = FD_CONFINEMENT_FACTOR * scale

    def V(t):
        return potential_chain_rule(problem, cmap, t)

    lo, hi = cmap.t_domain
    ends = []
    for end, direction in ((lo, 1), (hi, -1)):
        if math.isfinite(end):
            ends.append(end)
            notes.append(f"finite end t = {end:g} kept with a Dirichlet condition")
            continue
        other = hi if direction == 1 else lo
        start = (other - direction * 1.0) if math.isfinite(other) else 0.0
        try:
            cut = confining_domain(V, start, -direction, threshold)
        except DomainError:
            raise DomainError(f"potential does not confine towards t = {end}") from None
        ends.append(cut)
        notes.append(f"infinite end cut at t = {cut:.6g} where V >= {threshold:g}")
    return tuple(sorted(ends))


def fd_check(report: RunReport, model: str, grid_points: int = 4001, t_domain=None) -> FDComparison:
    entry, cmap = _map_for(model)
    problem = report.problem
    energies = report.spectrum.eigenvalues
    notes: list = []
    dom = tuple(t_domain) if t_domain is not None else fd_domain(problem, cmap, energies, notes)

    def V(ts):
        return np.array([potential_chain_rule(problem, cmap, float(t)) for t in ts])

    res = fd_schrodinger(V, dom, grid_points, len(energies))
    rel = [abs(f - e) / max(abs(e), 1e-300) for f, e in zip(res.levels, energies)]
    return FDComparison(list(energies), res.levels, rel, dom, grid_points, res.reliable, notes)


# Verification sweep


@dataclass
class TrialOutcome:
    model: str
    trial: int
    n: int
    params: dict
    failures: list
    notes: list


@dataclass
class VerifySummary:
    outcomes: list
    selfchecks: dict
    logged: list

    @property
    def failures(self) -> list:
        return [(o.model, o.trial, f) for o in self.outcomes for f in o.failures]

    @property
    def ok(self) -> bool:
        return not self.failures and all(r.weight_ok for r in self.selfchecks.values())


def _one_trial(model: str, trial: int, seed: int, n_max: int) -> TrialOutcome:
    rng = random.Random(f"{seed}:{model}:{trial}")
    entry = catalog.get(model)
    n = rng.randint(0, n_max)
    params = catalog.sample_params(model, n, rng, self_adjoint=entry.self_adjoint_possible)
    failures, notes = [], []
    try:
        problem = catalog.instantiate(model, params, n)
        if entry.k == 4:
            F3 = problem.F.taylor_coeff(3)
            if F3 != -problem.A.taylor_coeff(4) * (n - 1) / 2:
                failures.append("cubic drift identity")
        seq = generate(problem)
        factorization_check(seq)
        oracle_compare(problem, seq)
        if parity_check(seq) is False:
            failures.append("parity")
        if entry.self_adjoint_possible:
            spec = solve_spectrum(seq)
            osc = oscillation_check(seq, spec)
            if not osc.ok:
                failures.append(f"oscillation ordering {osc.root_counts}")
        else:
            notes.append("oscillation not asserted: boundary terms cannot vanish")
    except QesError as exc:
        failures.append(f"{type(exc).__name__}: {exc}")
    return TrialOutcome(model, trial, n, {k: str(v) for k, v in params.items()}, failures, notes)


def thread_count() -> int:
    try:
        return max(1, int(os.environ.get("QES_THREADS", "1")))
    except ValueError:
        return 1


def verify(models, trials: int = 25, seed: int = 0, n_max: int = 8) -> VerifySummary:
    """Randomized invariant sweep; results are ordered by (model, trial) whatever the thread count."""
    models = list(models)
    jobs = [(m, t) for m in models for t in range(trials)]
    workers = thread_count()
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(lambda job: _one_trial(job[0], job[1], seed, n_max), jobs))
    else:
        outcomes = [_one_trial(m, t, seed, n_max) for m, t in jobs]
    selfchecks, logged = {}, []
    for m in models:
        rep = catalog.table_selfcheck(m, seed=seed)
        selfchecks[m] = rep
        if rep.mismatches:
            logged.append(rep.summary())
        entry = catalog.get(m)
        if entry.printed_alpha_rule:
            bad = [r for r in catalog.printed_alpha_identity(m, seed=seed) if r["residual"] != 0]
            if bad:
                logged.append(f"{m}: printed alpha rule breaks the cubic drift identity at {len(bad)}/10 points")
    return VerifySummary(outcomes, selfchecks, logged)
