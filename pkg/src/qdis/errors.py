"""Exception types raised across the package.

Validation failures subclass ``ValueError`` so callers that only care about
"bad input" can catch one thing. Each state-invariant error carries the
measured deviation in ``.deviation``.
"""


class QdisError(ValueError):
    """Base class for all package errors."""


class StateInvariantError(QdisError):
    invariant = "state"

    def __init__(self, deviation: float, message: str | None = None):
        self.deviation = float(deviation)
        super().__init__(message or f"{self.invariant} violated (deviation {self.deviation:.3e})")


class NotHermitian(StateInvariantError):
    invariant = "hermiticity"


class TraceDeviation(StateInvariantError):
    invariant = "unit trace"


class NegativeEigenvalue(StateInvariantError):
    invariant = "positive semidefiniteness"


class NotPSD(StateInvariantError):
    invariant = "positive semidefiniteness"


class UnphysicalCoefficients(StateInvariantError):
    invariant = "physicality of Pauli coefficients"


class DimensionMismatch(QdisError):
    pass


class NonRealCoefficient(QdisError):
    pass


class NonUnitDirection(QdisError):
    pass


class DomainError(QdisError):
    pass


class EtaOutOfRange(QdisError):
    pass


class IncompleteKrausSet(QdisError):
    pass


class InvalidProbabilities(QdisError):
    pass


class InvalidSpec(QdisError):
    pass


class InvalidM(QdisError):
    pass
