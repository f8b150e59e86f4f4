"""``qes`` command line: list, solve, verify, potential.

Exit codes: 0 success, 1 failed verification, 2 invalid input or singular
sampling range, 3 oracle divergence, 4 degenerate or non-real spectrum.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
import time
from fractions import Fraction

from . import catalog, pipeline
from .errors import (
    DomainError,
    FactorizationError,
    OracleDivergenceError,
    QesError,
    RecursionBreakdownError,
    SpectrumError,
    ValidationError,
)
from .recursion import DEFAULT_N_EXTRA

SCHEMA = "qes/1"


def num(x) -> str:
    """Decimal string: exact for rationals, shortest round-trip for floats."""
    if isinstance(x, Fraction):
        return str(x)
    return repr(float(x))


def poly_coeffs(p) -> list:
    return [str(c) for c in p.coeffs]


def exit_code_for(exc: BaseException) -> int:
    if isinstance(exc, OracleDivergenceError):
        return 3
    if isinstance(exc, SpectrumError):
        return 4
    if isinstance(exc, (ValidationError, RecursionBreakdownError, DomainError)):
        return 2
    if isinstance(exc, FactorizationError):
        return 1
    return 1


def emit_error(exc: BaseException, fmt: str) -> int:
    code = exit_code_for(exc)
    if fmt == "json":
        payload = {"schema": SCHEMA, "error": {"type": type(exc).__name__, "message": str(exc), "exit_code": code}}
        print(json.dumps(payload, sort_keys=True), file=sys.stderr)
    else:
        print(f"error: {exc}", file=sys.stderr)
    return code


def parse_params(items) -> dict:
    params = {}
    for item in items or ():
        if "=" not in item:
            raise ValidationError(f"--param expects name=value, got {item!r}")
        name, value = item.split("=", 1)
        try:
            params[name.strip()] = Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise ValidationError(f"parameter {name!r} is not a rational number: {value!r}") from None
    return params


def write_csv(rows, out) -> None:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(rows)
    out.write(buf.getvalue())


# list


def cmd_list(args, out) -> int:
    entries = catalog.table_entries(args.k) if args.k else list(catalog.ENTRIES)
    if args.format == "json":
        payload = {"schema": SCHEMA, "entries": [e.to_dict() for e in entries]}
        out.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")
        return 0
    for e in entries:
        where = f"table {e.table} row {e.row}" if e.in_tables else "potential only"
        derived = ", ".join(f"{k} = {v}" for k, v in e.derived)
        line = f"{e.id:<22} k={e.k}  params: {', '.join(e.free_params)}"
        if derived:
            line += f"  ({derived})"
        out.write(line + "\n")
        out.write(f"{'':<22} {where}; constraints: {'; '.join(e.constraints) or 'none'}\n")
    return 0


# solve


def report_json(rep: pipeline.RunReport) -> dict:
    p = rep.problem
    s = rep.spectrum
    return {
        "schema": SCHEMA,
        "problem": {
            "model": rep.model,
            "n": p.n,
            "k": p.k,
            "A": poly_coeffs(p.A),
            "F": poly_coeffs(p.F),
            "B": poly_coeffs(p.B),
            "params": {k: str(v) for k, v in sorted(p.spec.params.items())},
            "interval": [num(v) if isinstance(v, Fraction) else str(v) for v in p.spec.interval],
        },
        "spectrum": {
            "eigenvalues": [num(e) for e in s.eigenvalues],
            "coeff_table": [[num(v) for v in row] for row in s.coeff_table],
            "residual_norms": [num(r) for r in s.residual_norms],
            "root_counts": list(rep.oscillation.root_counts),
        },
        "critical_polynomial": poly_coeffs(rep.oracle.critical_monic),
        "factorization": {"N_max": rep.factorization.N_max, "exact": rep.factorization.all_exact},
        "oracle": {"pass": rep.oracle.equal},
        "oscillation": {"ordered": rep.oscillation.ok, "asserted": rep.oscillation_asserted},
        "parity": rep.parity,
        "verified": rep.verified,
        "timings": {k: round(v * 1000, 3) for k, v in rep.timings.items()},
    }


def report_text(rep: pipeline.RunReport) -> str:
    p = rep.problem
    lines = [
        f"model      {rep.model or 'custom'}",
        f"A(x)       {p.A.to_str()}",
        f"F(x)       {p.F.to_str()}",
        f"B(x)       {p.B.to_str()}",
        f"n          {p.n}",
        f"P_(n+1)    {rep.oracle.critical_monic.to_str('E')} (monic)",
        "",
        f"{'i':>3} {'E_i':>22} {'nodes':>5} {'residual':>10}",
    ]
    s = rep.spectrum
    for i, e in enumerate(s.eigenvalues):
        lines.append(f"{i:>3} {e:>22.12f} {rep.oscillation.root_counts[i]:>5} {s.residual_norms[i]:>10.2e}")
    lines.append("")
    lines.append("P_m(E_i):")
    for i, row in enumerate(s.coeff_table):
        lines.append(f"  i={i}: " + "  ".join(f"{v:.10g}" for v in row))
    lines.append("")
    lines.append(f"factorization exact up to N={rep.factorization.N_max}: {rep.factorization.all_exact}")
    lines.append(f"matrix oracle: {'pass' if rep.oracle.equal else 'FAIL'}")
    osc = "ordered" if rep.oscillation.ok else "NOT ordered"
    lines.append(f"node counts: {osc}{'' if rep.oscillation_asserted else ' (not asserted)'}")
    if rep.parity is not None:
        lines.append(f"parity: {rep.parity}")
    return "\n".join(lines) + "\n"


def report_csv(rep: pipeline.RunReport, out) -> None:
    n = rep.problem.n
    rows = [["i", "E", *[f"P{m}" for m in range(n + 1)], "nodes", "residual"]]
    s = rep.spectrum
    for i, e in enumerate(s.eigenvalues):
        rows.append([i, num(e), *[num(v) for v in s.coeff_table[i]], rep.oscillation.root_counts[i], num(s.residual_norms[i])])
    write_csv(rows, out)


def build_problem(args):
    if args.model:
        if args.A or args.F:
            raise ValidationError("use either --model or --A/--F, not both")
        params = parse_params(args.param)
        return catalog.instantiate(args.model, params, args.n), args.model, params
    if not (args.A and args.F):
        raise ValidationError("give --model, or both --A and --F")
    A = pipeline.parse_rational_list(args.A)
    F = pipeline.parse_rational_list(args.F)
    interval = pipeline.parse_interval(args.interval) if args.interval else (0, math.inf)
    return pipeline.custom_problem(A, F, args.n, interval), None, {}


def cmd_solve(args, out) -> int:
    problem, model, params = build_problem(args)
    asserted = bool(model and catalog.boundary_terms_vanish(model, params, args.n))
    rep = pipeline.run_solve(problem, model=model, N_extra=args.N_extra, tol=args.tol, oscillation_asserted=asserted)
    if args.format == "json":
        out.write(json.dumps(report_json(rep), indent=2, sort_keys=True) + "\n")
    elif args.format == "csv":
        report_csv(rep, out)
    else:
        out.write(report_text(rep))
    return 0 if rep.verified else 1


# verify


def cmd_verify(args, out) -> int:
    if args.all:
        models = [e.id for e in catalog.ENTRIES]
    elif args.model:
        models = [catalog.get(m).id for m in args.model]
    else:
        raise ValidationError("give --all or --model ID")
    t0 = time.perf_counter()
    summary = pipeline.verify(models, trials=args.trials, seed=args.seed, n_max=args.n_max)
    elapsed = time.perf_counter() - t0
    if args.format == "json":
        payload = {
            "schema": SCHEMA,
            "ok": summary.ok,
            "trials": args.trials,
            "seed": args.seed,
            "failures": [{"model": m, "trial": t, "property": f} for m, t, f in summary.failures],
            "logged_discrepancies": summary.logged,
            "timings": {"total": round(elapsed * 1000, 3)},
        }
        out.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    else:
        for m in models:
            mine = [o for o in summary.outcomes if o.model == m]
            bad = [o for o in mine if o.failures]
            note = " (node ordering not asserted)" if any(o.notes for o in mine) else ""
            status = "pass" if not bad and summary.selfchecks[m].weight_ok else "FAIL"
            out.write(f"{status}  {m:<22} {len(mine)} trials{note}\n")
            for o in bad:
                for f in o.failures:
                    out.write(f"      trial {o.trial} (n={o.n}, {o.params}): {f}\n")
            if not summary.selfchecks[m].weight_ok:
                out.write("      drift is inconsistent with the weight\n")
        for line in summary.logged:
            out.write(f"logged: {line}\n")
        out.write(f"{'all properties hold' if summary.ok else 'verification FAILED'} ({elapsed:.1f}s)\n")
    return 0 if summary.ok else 1


# potential


def _t_grid(t_min: float, t_max: float, steps: int) -> list:
    if steps < 1:
        raise ValidationError("--steps must be at least 1")
    if steps == 1:
        return [t_min]
    h = (t_max - t_min) / (steps - 1)
    return [t_min + i * h for i in range(steps)]


def cmd_potential(args, out) -> int:
    params = parse_params(args.param)
    ts = _t_grid(args.t_min, args.t_max, args.steps)
    samples = pipeline.potential_samples(args.model, params, args.n, ts, with_closed_form=args.closed_form)
    fd = None
    if args.fd_check:
        rep = pipeline.solve_model(args.model, params, args.n)
        fd = pipeline.fd_check(rep, args.model, grid_points=args.grid)
    if args.format == "json":
        payload = {
            "schema": SCHEMA,
            "model": args.model,
            "n": args.n,
            "params": {k: str(v) for k, v in sorted(params.items())},
            "samples": {k: [num(v) for v in col] for k, col in samples.items()},
        }
        if fd is not None:
            payload["fd_check"] = {
                "algebraic": [num(v) for v in fd.algebraic],
                "fd": [num(v) for v in fd.fd],
                "relative_error": [num(v) for v in fd.relative_errors],
                "t_domain": [num(v) for v in fd.t_domain],
                "grid_points": fd.grid_points,
                "reliable": fd.reliable,
                "notes": fd.notes,
            }
        out.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    else:
        cols = list(samples)
        rows = [cols] + [[num(samples[c][i]) for c in cols] for i in range(len(samples["t"]))]
        write_csv(rows, out)
        if fd is not None:
            out.write("\n")
            rows = [["level", "algebraic", "fd", "relative_error"]]
            for i, (a, f, r) in enumerate(zip(fd.algebraic, fd.fd, fd.relative_errors)):
                rows.append([i, num(a), num(f), num(r)])
            write_csv(rows, out)
    if fd is not None and not all(r < 0.01 for r in fd.relative_errors):
        return 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qes", description="Quasi-exactly solvable operators from master functions.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("list", help="catalog entries")
    p.add_argument("--k", type=int, choices=(3, 4))
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_list)

    p = sub.add_parser("solve", help="algebraic spectrum of one operator")
    p.add_argument("--model")
    p.add_argument("--param", action="append", metavar="NAME=VALUE")
    p.add_argument("--A", help="ascending coefficients of A, e.g. '0,1'")
    p.add_argument("--F", help="ascending coefficients of F = (AW)'/W")
    p.add_argument("--interval", help="ends of the x-interval, e.g. '0,inf'")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--N-extra", dest="N_extra", type=int, default=DEFAULT_N_EXTRA)
    p.add_argument("--tol", type=float, default=1e-12)
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="randomized invariant sweep")
    p.add_argument("--all", action="store_true")
    p.add_argument("--model", action="append")
    p.add_argument("--trials", type=int, default=25)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--n-max", dest="n_max", type=int, default=8)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("potential", help="Schrodinger potential samples")
    p.add_argument("--model", required=True)
    p.add_argument("--param", action="append", metavar="NAME=VALUE")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t-min", dest="t_min", type=float, required=True)
    p.add_argument("--t-max", dest="t_max", type=float, required=True)
    p.add_argument("--steps", type=int, default=100)
    p.add_argument("--closed-form", dest="closed_form", action="store_true")
    p.add_argument("--fd-check", dest="fd_check", action="store_true")
    p.add_argument("--grid", type=int, default=4001)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_potential)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    fmt = getattr(args, "format", "text")
    try:
        return args.func(args, out)
    except QesError as exc:
        return emit_error(exc, fmt)


if __name__ == "__main__":
    sys.exit(main())
