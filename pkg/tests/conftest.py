import math
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

settings.register_profile(
    "qes",
    deadline=None,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("qes")

BD_PARAMS = {"alpha": 1, "beta": 0, "gamma": -1}


def rationals(lo=-20, hi=20, max_den=9):
    return st.builds(Fraction, st.integers(lo, hi), st.integers(1, max_den))


def nonzero_rationals(lo=-20, hi=20, max_den=9):
    return rationals(lo, hi, max_den).filter(lambda q: q != 0)


@pytest.fixture
def bd_problem():
    from qes import catalog

    return catalog.instantiate("T1.x", BD_PARAMS, 3)


@pytest.fixture
def bd_seq(bd_problem):
    from qes.recursion import generate

    return generate(bd_problem)


def close(a, b, rel=1e-12, abs_=1e-12):
    return math.isclose(a, b, rel_tol=rel, abs_tol=abs_)


# One line per acceptance criterion, shown after the run whatever the capture mode.
ACCEPTANCE_LINES: list = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
