"""Quasi-exactly solvable operators from generalized master functions."""

from .errors import QesError, ValidationError
from .poly import RatPoly, RatFunc
from .model import MasterSpec, QesProblem, solve_constraints
from .recursion import generate
from .spectrum import solve_spectrum, factorization_check, oscillation_check
from .matrix_oracle import oracle_compare
from .catalog import instantiate

__all__ = [
    "QesError",
    "ValidationError",
    "RatPoly",
    "RatFunc",
    "MasterSpec",
    "QesProblem",
    "solve_constraints",
    "generate",
    "solve_spectrum",
    "factorization_check",
    "oscillation_check",
    "oracle_compare",
    "instantiate",
]
