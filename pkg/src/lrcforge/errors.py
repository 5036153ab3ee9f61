"""Exception types raised by the library.

Every error below subclasses ValueError so callers that do not care about
the precise failure can still catch misuse generically.
"""


class LrcError(ValueError):
    """Base class for all library errors."""


class NonPrimeCharacteristic(LrcError):
    """Field construction was asked for a composite or invalid characteristic."""


class ReducibleModulus(LrcError):
    """Supplied extension modulus is not irreducible over F_p."""


class MixedFields(LrcError):
    """Operands belong to different field contexts."""


class ZeroInverse(LrcError):
    """Multiplicative inverse of zero requested."""


class DivisionByZeroPoly(LrcError):
    """Polynomial division by the zero polynomial."""


class ConstantInput(LrcError):
    """Operation requires a nonconstant polynomial."""


class ConstantModulus(LrcError):
    """Modular polynomial arithmetic requires a modulus of degree >= 1."""


class NotSquarefree(LrcError):
    """Squarefree polynomial expected."""


class WrongDegree(LrcError):
    """Polynomial degree (or monicity) outside the operation's domain."""


class EvenCharacteristic(LrcError):
    """Operation is defined only in odd characteristic."""


class ZeroInput(LrcError):
    """Zero polynomial where a nonzero one is required."""


class InseparableInput(LrcError):
    """Polynomial with identically zero derivative."""


class UnsupportedDegree(LrcError):
    """Classification tables cover degrees 2 through 5 only."""


class WildRamificationUnsupported(LrcError):
    """Genus bound requires the characteristic to be coprime to the group order."""


class UnknownGroup(LrcError):
    """No reference cycle-type distribution for the requested group name."""


class EmptyCensus(LrcError):
    """Census has no squarefree specializations to compare."""


class BadMessageParam(LrcError):
    """Code parameters out of range (t < 1 or t > number of good sets)."""


class WrongMessageLength(LrcError):
    """Message length does not equal k = r*t."""


class NotLocallyRepairable(LrcError):
    """Repair group contains more than one erasure."""


class SearchSpaceTooLarge(LrcError):
    """Brute-force enumeration would exceed the configured cap."""


class UsageError(LrcError):
    """Malformed command-line invocation."""
