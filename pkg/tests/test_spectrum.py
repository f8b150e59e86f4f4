import math
import random
from fractions import Fraction

import numpy as np
import pytest

from qes import catalog
from qes.errors import DegenerateSpectrumError, FactorizationError, NonRealSpectrumError, SpectrumError
from qes.model import apply_operator
from qes.poly import RatPoly
from qes.recursion import EnergySequence, generate
from qes.spectrum import (
    count_nodes,
    eigenfunction_exact,
    factorization_check,
    interlaces,
    oscillation_check,
    solve_spectrum,
)

BD_E = [-7.398556193859998, -2.2937668247437104, 2.2937668247437104, 7.398556193859998]


def fake_sequence(problem, crit):
    polys = [RatPoly.const(1), RatPoly([0, 1]), crit]
    return EnergySequence(problem, tuple(polys), True)


def test_bender_dunne_eigenvalues(bd_seq):
    spec = solve_spectrum(bd_seq)
    assert spec.eigenvalues == pytest.approx(BD_E, abs=1e-12)
    assert max(spec.residual_norms) < 1e-10


def test_eigenvalues_match_numpy_roots(bd_seq):
    crit = bd_seq.critical
    ref = sorted(np.roots([float(c) for c in reversed(crit.coeffs)]).real)
    assert solve_spectrum(bd_seq).eigenvalues == pytest.approx(ref, abs=1e-9)


def test_factorization_quotients_have_degree_N(bd_seq):
    rep = factorization_check(bd_seq, N_max=6)
    assert rep.all_exact
    assert [q.degree for q in rep.quotients] == list(range(7))
    # reassemble
    for N, q in enumerate(rep.quotients):
        assert q * bd_seq.critical == bd_seq[4 + N]


def test_perturbed_B_breaks_factorization(bd_problem):
    bad = bd_problem.with_B(bd_problem.B + RatPoly([0, Fraction(1, 3)]))
    with pytest.raises(FactorizationError) as info:
        factorization_check(generate(bad), N_max=6)
    assert info.value.N >= 1 and not info.value.remainder.is_zero()


def test_spectrum_refuses_untruncated_sequence(bd_problem):
    bad = bd_problem.with_B(bd_problem.B + RatPoly([0, Fraction(1, 3)]))
    with pytest.raises(SpectrumError):
        solve_spectrum(generate(bad))


def test_repeated_root_is_degenerate():
    problem = catalog.instantiate("T1.x", {"alpha": 1, "beta": 0, "gamma": -1}, 1)
    seq = fake_sequence(problem, RatPoly([1, -2, 1]))
    with pytest.raises(DegenerateSpectrumError) as info:
        solve_spectrum(seq)
    assert info.value.multiplicity == 2


def test_complex_roots_are_reported():
    problem = catalog.instantiate("T1.x", {"alpha": 1, "beta": 0, "gamma": -1}, 1)
    seq = fake_sequence(problem, RatPoly([1, 0, 1]))
    with pytest.raises(NonRealSpectrumError) as info:
        solve_spectrum(seq)
    assert (info.value.n_real, info.value.expected) == (0, 2)


def test_bender_dunne_oscillation(bd_seq):
    rep = oscillation_check(bd_seq, solve_spectrum(bd_seq))
    assert rep.ok and rep.root_counts == [0, 1, 2, 3]


def test_node_counts_match_float_roots_on_easy_case(bd_seq):
    spec = solve_spectrum(bd_seq)
    counts = oscillation_check(bd_seq, spec).root_counts
    for row, c in zip(spec.coeff_table, counts):
        r = np.roots(list(reversed(row)))
        assert sum(1 for z in r if abs(z.imag) < 1e-9 and z.real > 0) == c


def test_ill_conditioned_eigenfunctions_counted_exactly():
    # clustered nodes: float Sturm counts go wrong here, exact ones do not
    problem = catalog.instantiate("T1.x", {"alpha": Fraction(1, 4), "beta": 63, "gamma": Fraction(-3, 4)}, 7)
    seq = generate(problem)
    rep = oscillation_check(seq, solve_spectrum(seq))
    assert rep.root_counts == list(range(8))


def test_interlacing(bd_seq):
    assert interlaces(bd_seq)


def test_eigenfunction_is_invariant_vector_at_rational_energy(bd_problem, bd_seq):
    # at an arbitrary rational E, L psi - E psi only has a top-degree defect
    e = Fraction(3, 7)
    psi = eigenfunction_exact(bd_seq, e)
    defect = apply_operator(bd_problem, psi) - psi * e
    assert defect.degree <= 3
    assert all(c == 0 for c in defect.coeffs[:3])


def test_count_nodes_with_rational_psi():
    psi = RatPoly.from_roots([Fraction(1, 2), 2, -1])
    assert count_nodes(psi, (0, math.inf)) == 2
    assert count_nodes(psi, (0, 2)) == 1


def test_self_adjoint_catalog_instances_order_their_levels():
    rng = random.Random(5)
    for entry in catalog.ENTRIES:
        if not entry.self_adjoint_possible:
            continue
        n = rng.randint(1, 5)
        params = catalog.sample_params(entry.id, n, rng, self_adjoint=True)
        seq = generate(catalog.instantiate(entry.id, params, n))
        rep = oscillation_check(seq, solve_spectrum(seq))
        assert rep.ok, (entry.id, params, rep.root_counts)
