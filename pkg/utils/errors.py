"""
Exception hierarchy for the toolkit.
Outcomes that are data (violations, failed identities) are returned, not raised.
"""

from typing import Optional


class QSolvableError(Exception):
    """Base class for every toolkit error."""


class FieldMismatchError(QSolvableError, TypeError):
    """Two cyclotomic scalars of different orders were combined."""


class NotDivisibleError(QSolvableError, ArithmeticError):
    """A Laurent polynomial is not divisible by (q - eps)."""


class InternalArithmeticError(QSolvableError, ArithmeticError):
    """A division that must be exact was not."""


class TooLargeError(QSolvableError):
    """An enumeration or linear system exceeds its configured bound."""


class FuelExhaustedError(QSolvableError):
    """Normal-form rewriting did not terminate within the fuel budget."""


class OutOfDomainError(QSolvableError, ValueError):
    """An operator was applied outside the subalgebra it is defined on."""


class UnsupportedInputError(QSolvableError, ValueError):
    """Side conditions of a check cannot be established symbolically."""


class NotCentralError(QSolvableError, ValueError):
    """An element is not central modulo (q - eps)."""

    def __init__(self, message: str, generator: Optional[int] = None):
        super().__init__(message)
        self.generator = generator


class InconsistentPointError(QSolvableError, ValueError):
    """Character values violate a relation among the listed generators."""


class BadParametersError(QSolvableError, ValueError):
    """Parameters violate the hypothesis of a construction."""


class NotQCommutingError(QSolvableError, ValueError):
    """Automatic stratification needs every relation polynomial to vanish."""


class InvalidInputError(QSolvableError, ValueError):
    """A file, table or expression could not be parsed."""

    def __init__(self, message: str, location: Optional[str] = None):
        super().__init__(f"{location}: {message}" if location else message)
        self.location = location
