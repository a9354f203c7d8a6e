class BohrLabError(Exception):
    """Base class for every error raised by the library."""


class DomainError(BohrLabError, ValueError):
    """An argument lies outside the range where the quantity is defined."""


class NonVanishingConstantTerm(DomainError):
    """An inner function for composition does not fix the origin."""


class GrowthClaimError(DomainError):
    """A growth claim contradicts one of the stored coefficients."""


class BracketError(BohrLabError, ArithmeticError):
    """A bisection bracket does not enclose a sign change."""
