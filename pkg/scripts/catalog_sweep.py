"""Run the full pipeline over random draws of every catalog row and tabulate the outcome."""

import argparse
import random
import time

from qes import catalog, pipeline
from qes.errors import QesError


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--trials", type=int, default=10)
    ap.add_argument("--n-max", type=int, default=8)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    print(f"{'model':24s} {'ok':>4s} {'err':>4s} {'mean s':>8s}  notes")
    for entry in catalog.ENTRIES:
        rng = random.Random(f"{args.seed}:{entry.id}")
        ok = bad = 0
        notes = set()
        t0 = time.perf_counter()
        for _ in range(args.trials):
            n = rng.randint(0, args.n_max)
            try:
                params = catalog.sample_params(entry.id, n, rng, self_adjoint=entry.self_adjoint_possible)
                rep = pipeline.solve_model(entry.id, params, n)
                ok += rep.verified
                bad += not rep.verified
            except QesError as exc:
                bad += 1
                notes.add(type(exc).__name__)
        mean = (time.perf_counter() - t0) / args.trials
        if not entry.self_adjoint_possible:
            notes.add("no self-adjoint draw")
        print(f"{entry.id:24s} {ok:4d} {bad:4d} {mean:8.3f}  {', '.join(sorted(notes))}")


if __name__ == "__main__":
    main()
