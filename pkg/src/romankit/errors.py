"""Exception types raised by romankit."""


class RomanKitError(Exception):
    """Base class for all romankit errors."""


class DomainError(RomanKitError, ValueError):
    """An argument lies outside the domain of the operation."""


class PoleError(DomainError):
    """A zero factor appeared in a denominator."""


class DivergenceError(DomainError):
    """An epsilon limit does not exist (a negative power of epsilon survived)."""


class RangeError(RomanKitError, OverflowError):
    """A floating-point evaluation left the representable range."""


class InvariantError(RomanKitError, RuntimeError):
    """An internal invariant that should be unreachable was violated."""


class UsageError(RomanKitError, LookupError):
    """An unknown name (identity, table, scheme) was requested."""
