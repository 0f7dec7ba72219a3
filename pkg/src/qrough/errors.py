"""Exception types shared by all qrough modules."""


class QroughError(Exception):
    """Base class for all qrough errors."""


class DimensionError(QroughError):
    """Matrix has a dimension this kernel does not support."""


class ContractViolation(QroughError):
    """An input failed a documented precondition (hermiticity, trace, ...)."""


class NotPSDError(QroughError):
    """Matrix has an eigenvalue below the negativity floor."""


class NumericFailure(QroughError):
    """A numerical routine failed to converge."""


class ValidationError(QroughError):
    """A candidate density matrix violated one of its invariants."""


class DegenerateInputError(QroughError):
    """Input carries no usable information (e.g. all-zero amplitudes)."""


class CoverageError(QroughError):
    """Phase-space grid too small to contain the state's support."""


class InvariantViolation(QroughError):
    """A computed quantity left its guaranteed range; signals a measure bug."""
