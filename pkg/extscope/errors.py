"""Custom module errors"""

from typing import Optional, Sequence


class ExtscopeError(Exception):
    """Base error of the engine. ``exit_code`` is the process status the CLI reports for it."""

    exit_code = 3


class UsageError(ExtscopeError):
    """Error raised when operands do not fit together (mixed rings or fields, bad arguments)"""

    exit_code = 2


class ParseError(ExtscopeError):
    """Error raised for malformed polynomial, ring or scenario text"""

    exit_code = 2


class InhomogeneousError(ExtscopeError):
    """Error raised when a graded object is built from inhomogeneous data.

    :param message: Error description
    :param degrees: The two offending degrees, when known
    """

    def __init__(self, message: str, degrees: Optional[Sequence[int]] = None):
        super().__init__(message)
        self.degrees = tuple(degrees) if degrees is not None else None


class DegreeCapExceeded(ExtscopeError):
    """Error raised when a Groebner computation needs an S-pair above the configured degree cap"""

    def __init__(self, cap: int, degree: int):
        super().__init__(f"degree cap {cap} exceeded by an S-pair of degree {degree}; raise EXTSCOPE_DEGREE_CAP")
        self.cap = cap
        self.degree = degree


class TruncationError(ExtscopeError):
    """Error raised when a truncated resolution is too short for the requested computation"""

    def __init__(self, message: str, required_up_to: int):
        super().__init__(f"{message} (required up_to={required_up_to})")
        self.required_up_to = required_up_to


class IntegrityError(ExtscopeError):
    """Error raised when an algebraic invariant of a constructed object is broken (d*d != 0, im not in ker)"""


class UnsupportedError(ExtscopeError):
    """Error raised for requests the engine refuses instead of answering wrongly"""


class ConsistencyError(ExtscopeError):
    """Error raised when two independent computations of the same invariant disagree"""


class InvalidLogLevel(Exception):
    """Error raised when an invalid log level is detected"""


class ContextKeyError(Exception):
    """Error for invalid type of a Context key"""
