"""Exception hierarchy. The CLI maps these onto exit codes."""


class QesError(Exception):
    pass


class ValidationError(QesError, ValueError):
    """Bad input: malformed spec, unknown model, violated parameter range."""


class UnsupportedOrderError(ValidationError):
    pass


class DegenerateSpecError(ValidationError):
    pass


class InfeasibleWeightError(ValidationError):
    pass


class UnknownModelError(ValidationError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class RecursionBreakdownError(QesError, ArithmeticError):
    def __init__(self, m: int, message: str | None = None):
        self.m = m
        super().__init__(message or f"leading recursion coefficient vanishes at m = {m}")


class ConstraintViolationError(QesError):
    """The operator does not preserve polynomials of degree <= n."""


class FactorizationError(QesError):
    def __init__(self, N: int, remainder):
        self.N = N
        self.remainder = remainder
        super().__init__(f"P_(n+1+{N}) is not divisible by P_(n+1); remainder {remainder}")


class OracleDivergenceError(QesError):
    pass


class SpectrumError(QesError):
    pass


class DegenerateSpectrumError(SpectrumError):
    def __init__(self, root, multiplicity: int):
        self.root = root
        self.multiplicity = multiplicity
        super().__init__(f"critical polynomial has a root near {root} of multiplicity {multiplicity}")


class NonRealSpectrumError(SpectrumError):
    def __init__(self, n_real: int, expected: int):
        self.n_real = n_real
        self.expected = expected
        super().__init__(f"only {n_real} of {expected} eigenvalues are real")


class DomainError(QesError, ValueError):
    pass


class SingularityError(DomainError):
    pass
