"""Grid refinement of the finite-difference Schrodinger levels against the exact QES energies.

    python scripts/fd_convergence.py --model T1.x --param alpha=1 --param beta=0 --param gamma=-1 --n 3
"""

import argparse
from dataclasses import dataclass

import numpy as np

from qes import pipeline
from qes.potential import coord_map, fd_schrodinger, potential_chain_rule


@dataclass
class Config:
    model: str = "T1.x"
    n: int = 3
    grids: tuple = (501, 1001, 2001, 4001, 8001)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--model", default=Config.model)
    ap.add_argument("--param", action="append", default=[], metavar="NAME=VALUE")
    ap.add_argument("--n", type=int, default=Config.n)
    args = ap.parse_args()
    params = dict(p.split("=", 1) for p in args.param) or {"alpha": 1, "beta": 0, "gamma": -1}
    cfg = Config(args.model, args.n)

    rep = pipeline.solve_model(cfg.model, params, cfg.n)
    exact = np.array(rep.spectrum.eigenvalues)
    domain = pipeline.fd_check(rep, cfg.model, grid_points=cfg.grids[0]).t_domain
    cmap = coord_map(pipeline.catalog.get(cfg.model).coord_map)

    def V(ts):
        return np.array([potential_chain_rule(rep.problem, cmap, float(t)) for t in ts])

    print(f"exact levels: {exact.tolist()}")
    print(f"t-domain: {domain}")
    prev = None
    for N in cfg.grids:
        err = np.abs(np.array(fd_schrodinger(V, domain, N, len(exact)).levels) - exact)
        ratio = "" if prev is None else "  ratio " + " ".join(f"{r:6.3f}" for r in prev / err)
        print(f"N={N:5d}  max abs err {err.max():.3e}{ratio}")
        prev = err


if __name__ == "__main__":
    main()
