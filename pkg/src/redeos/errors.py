"""Exception hierarchy shared by every module of the library.

The CLI maps these onto exit codes: parse/validation failures exit 2,
numerical failures exit 3, physical-domain violations exit 4.
"""


class EosError(Exception):
    """Base class for all library errors."""


class DomainError(EosError):
    """Requested state lies outside the physical domain of the model."""


class ValidationError(EosError):
    """Input violates a documented invariant."""


class DegenerateDataError(ValidationError):
    """Calibration points do not determine the parameters."""


class ModelMismatchError(ValidationError):
    """Parameter record handed to a kernel built for a different model."""


class ParseError(EosError):
    """Malformed input file."""


class NumericalError(EosError):
    """Numerical evaluation failed."""


class BracketError(NumericalError):
    """Root-bracket endpoints do not straddle a sign change."""


class ConvergenceError(NumericalError):
    """Iteration budget exhausted before reaching tolerance."""


class RankDeficiencyError(NumericalError):
    """Least-squares design matrix is numerically rank deficient."""
