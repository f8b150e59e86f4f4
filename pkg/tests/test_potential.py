import math
import random

import numpy as np
import pytest

from qes import catalog, pipeline
from qes.errors import DomainError, UnknownModelError
from qes.potential import (
    COORD_MAPS,
    closed_form_V,
    confining_domain,
    coord_map,
    fd_schrodinger,
    potential_chain_rule,
    potential_from_dotted,
)

from conftest import BD_PARAMS

WITH_FORMS = [e.id for e in catalog.ENTRIES if e.V_closed_form]


def interior_points(cmap, rng, count=50):
    lo, hi = cmap.t_domain
    out = []
    for _ in range(count):
        if math.isinf(lo) and math.isinf(hi):
            out.append(rng.uniform(-4, 4))
        elif math.isinf(hi):
            out.append(lo + rng.uniform(0.05, 4))
        elif math.isinf(lo):
            out.append(hi - rng.uniform(0.05, 4))
        else:
            out.append(rng.uniform(lo + 0.01 * (hi - lo), hi - 0.01 * (hi - lo)))
    return out


@pytest.mark.parametrize("entry_id", WITH_FORMS)
def test_closed_form_matches_chain_rule(entry_id):
    entry = catalog.get(entry_id)
    cmap = coord_map(entry.coord_map)
    for trial in range(3):
        rng = random.Random(f"{entry_id}:{trial}")
        n = rng.randint(0, 6)
        params = catalog.sample_params(entry_id, n, rng)
        ts = interior_points(cmap, rng)
        s = pipeline.potential_samples(entry_id, params, n, ts, with_closed_form=True)
        for v, c in zip(s["V"], s["V_closed_form"]):
            assert abs(v - c) <= 1e-9 * abs(v), (n, params)


def map_A(map_id):
    for e in catalog.ENTRIES:
        if e.coord_map == map_id:
            return catalog._coeffs(e.A, {"n": 0})
    raise KeyError(map_id)


@pytest.mark.parametrize("map_id", sorted(COORD_MAPS))
def test_coordinate_map_satisfies_dx_dt_squared_equals_A(map_id):
    cmap = COORD_MAPS[map_id]
    A = map_A(map_id)
    rng = random.Random(map_id)
    for t in interior_points(cmap, rng, 20):
        # Richardson-extrapolated central difference
        h = 1e-3 * max(1.0, abs(t))

        def d(step):
            return (cmap.x_of_t(t + step) - cmap.x_of_t(t - step)) / (2 * step)

        slope = (4 * d(h / 2) - d(h)) / 3
        x = cmap.x_of_t(t)
        assert slope**2 == pytest.approx(A.evalf(x), rel=1e-8, abs=1e-12)


def test_exact_and_termwise_potentials_agree_away_from_ends():
    problem = catalog.instantiate("T1.x(1-x)", {"alpha": 2, "beta": 3, "gamma": -1}, 2)
    cmap = coord_map("x(1-x)")
    for t in np.linspace(-1.2, 1.2, 13):
        x = cmap.x_of_t(float(t))
        assert potential_from_dotted(problem, x) == pytest.approx(potential_chain_rule(problem, cmap, float(t)), rel=1e-10)


def test_bender_dunne_potential_closed_form():
    problem = catalog.instantiate("T1.x", BD_PARAMS, 3)
    cmap = coord_map("x")
    for t in (0.3, 1.0, 2.5):
        expected = 0.75 / t**2 - 2.25 * t**2 + t**6 / 64
        assert potential_chain_rule(problem, cmap, t) == pytest.approx(expected, rel=1e-12)


def test_t_outside_domain_is_rejected():
    problem = catalog.instantiate("T1.x", BD_PARAMS, 3)
    with pytest.raises(DomainError, match="t-domain"):
        potential_chain_rule(problem, coord_map("x"), -1.0)


def test_unknown_forms():
    with pytest.raises(UnknownModelError):
        coord_map("x7")
    with pytest.raises(UnknownModelError):
        closed_form_V("x7", {}, 1, 0.5)


def test_fd_harmonic_oscillator():
    res = fd_schrodinger(lambda t: t**2, (-8.0, 8.0), 4001, 4)
    assert res.levels == pytest.approx([1, 3, 5, 7], rel=1e-4)
    assert res.reliable


def test_fd_second_order_convergence():
    errs = []
    for N in (1001, 2001):
        res = fd_schrodinger(lambda t: t**2, (-8.0, 8.0), N, 1)
        errs.append(abs(res.levels[0] - 1.0))
    assert errs[0] / errs[1] == pytest.approx(4, abs=0.2)


def test_fd_rejects_infinite_box():
    with pytest.raises(DomainError):
        fd_schrodinger(lambda t: t**2, (0.0, math.inf))


def test_confining_domain_finds_threshold():
    t = confining_domain(lambda t: t * t, 0.0, 1, 100.0)
    assert t >= 10.0 and t < 10.6


def test_schrodinger_eigenfunction_solves_equation():
    rep = pipeline.solve_model("T1.x", BD_PARAMS, 3)
    problem = rep.problem
    cmap = coord_map("x")
    energy = rep.spectrum.eigenvalues[0]

    def phi(t):
        return pipeline.schrodinger_eigenfunction("T1.x", BD_PARAMS, 3, rep, 0, t)

    for t in (0.8, 1.5, 2.2):
        h = 1e-3
        second = (phi(t + h) - 2 * phi(t) + phi(t - h)) / h**2
        lhs = -second + potential_chain_rule(problem, cmap, t) * phi(t)
        assert lhs == pytest.approx(energy * phi(t), rel=1e-5, abs=1e-6)
