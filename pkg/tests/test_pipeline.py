import math
from fractions import Fraction

import pytest

from qes import pipeline
from qes.errors import ValidationError
from qes.poly import RatPoly

from conftest import BD_PARAMS


def test_parse_rational_list():
    assert pipeline.parse_rational_list("0, 1/2 ,-3") == RatPoly([0, Fraction(1, 2), -3])
    with pytest.raises(ValidationError):
        pipeline.parse_rational_list("1,x")


def test_parse_interval():
    assert pipeline.parse_interval("0,inf") == (0, math.inf)
    assert pipeline.parse_interval("-inf, 1/2") == (-math.inf, Fraction(1, 2))
    with pytest.raises(ValidationError):
        pipeline.parse_interval("0")


def test_custom_problem_rejects_bad_structure():
    with pytest.raises(ValidationError, match="A\\(0\\)"):
        pipeline.custom_problem(RatPoly([1, 1]), RatPoly([1]), 2)


def test_run_report_records_each_stage():
    rep = pipeline.solve_model("T1.x", BD_PARAMS, 3)
    assert rep.verified
    assert set(rep.timings) == {"recursion", "factorization", "oracle", "spectrum", "oscillation"}


def test_fd_domain_keeps_finite_end_and_cuts_infinite_one():
    rep = pipeline.solve_model("T1.x", BD_PARAMS, 3)
    fd = pipeline.fd_check(rep, "T1.x", grid_points=1001)
    assert fd.t_domain[0] == 0.0 and 4 < fd.t_domain[1] < 7
    assert any("Dirichlet" in note for note in fd.notes)
    assert max(fd.relative_errors) < 1e-3


def test_fd_check_needs_coordinate_map():
    rep = pipeline.solve_model("T1.heun", {"alpha": 1, "beta": 1, "gamma": 0, "a": 2}, 1)
    with pytest.raises(ValidationError, match="coordinate map"):
        pipeline.fd_check(rep, "T1.heun")


def test_verify_is_independent_of_thread_count(monkeypatch):
    models = ["T1.x", "T2.x3(1-x)"]
    monkeypatch.setenv("QES_THREADS", "1")
    one = pipeline.verify(models, trials=3, seed=4, n_max=4)
    monkeypatch.setenv("QES_THREADS", "3")
    many = pipeline.verify(models, trials=3, seed=4, n_max=4)
    key = [(o.model, o.trial, o.n, o.params) for o in one.outcomes]
    assert key == [(o.model, o.trial, o.n, o.params) for o in many.outcomes]
    assert one.ok and many.ok


def test_thread_count_falls_back_on_garbage(monkeypatch):
    monkeypatch.setenv("QES_THREADS", "lots")
    assert pipeline.thread_count() == 1
