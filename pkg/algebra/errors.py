"""
Exception types for the superalgebra toolkit.

Every error raised by the library derives from SuperMoritaError so callers
(the CLI in particular) can catch library failures in one place.
"""


class SuperMoritaError(Exception):
    """Base class for all library errors."""


class DivisionByZero(SuperMoritaError, ZeroDivisionError):
    """Exact division by a zero scalar."""


class FieldMismatch(SuperMoritaError):
    """Operands live over different coefficient fields."""


class InvalidBlade(SuperMoritaError):
    """A blade mask does not fit the ambient signature."""


class InvalidSignature(SuperMoritaError, ValueError):
    """A signature has entries outside {+1, -1, 0} or violates the field rules."""


class TooLarge(SuperMoritaError):
    """A construction exceeds the supported size cap."""


class AlgebraMismatch(SuperMoritaError):
    """Elements or modules belong to different algebras."""


class NotIdempotent(SuperMoritaError):
    """An element expected to be an even idempotent is not one."""


class DimMismatch(SuperMoritaError):
    """Dimensions of two operands are inconsistent."""


class UnrecognizedBasic(SuperMoritaError):
    """A basic superalgebra matches none of the known representatives."""


class UnknownTable(SuperMoritaError):
    """Requested table kind does not exist."""


class UnknownCheck(SuperMoritaError):
    """Requested verification check does not exist."""


class ScopeError(SuperMoritaError):
    """Parameters fall outside the scope of the Grothendieck computation."""


class ParseError(SuperMoritaError):
    """Syntax error in a scalar or element expression."""

    def __init__(self, message, position=0):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class GeneratorOutOfRange(ParseError):
    """An expression names a generator the signature does not have."""
