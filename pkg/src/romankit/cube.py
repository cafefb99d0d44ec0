"""Resistance between opposite vertices of the unit-edge n-cube.

Three evaluators that check one another: the closed sum, a signed sum of
Roman coefficients, and the sum of the level-to-level resistances obtained by
merging each level of the cube into one equipotential node.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .coefficients import binom, roman_coeff, sign
from .errors import DomainError, InvariantError

__all__ = [
    "ResistanceResult",
    "level_resistance",
    "resistance_direct",
    "resistance_recurrence_check",
    "resistance_via_roman",
]


@dataclass(frozen=True)
class ResistanceResult:
    n: int
    ohms: Fraction

    def __post_init__(self):
        if self.n < 0:
            raise DomainError(f"cube dimension must be >= 0, got {self.n}")
        if not (0 <= self.ohms <= max(self.n, 0)):
            raise InvariantError(f"R_{self.n} = {self.ohms} violates 0 <= R_n <= n")


def resistance_direct(n: int) -> ResistanceResult:
    """R_n = 2**-n * sum_{i=1..n} 2**i / i; R_0 = 0."""
    if n < 0:
        raise DomainError(f"cube dimension must be >= 0, got {n}")
    total = sum((Fraction(2**i, i) for i in range(1, n + 1)), Fraction(0))
    return ResistanceResult(n, total / 2**n)


def resistance_via_roman(n: int) -> ResistanceResult:
    """R_n = -sum_{i=-n..-1} [-n-1 choose i]."""
    if n < 1:
        raise DomainError(f"the Roman-coefficient route needs n >= 1, got {n}")
    total = -sum((roman_coeff(-n - 1, i) for i in range(-n, 0)), Fraction(0))
    return ResistanceResult(n, total)


def level_resistance(n: int, i: int) -> Fraction:
    """Resistance between levels i and i+1: (n - i) * C(n, i) parallel unit edges."""
    if n < 1 or not 0 <= i < n:
        raise DomainError(f"need 0 <= i < n with n >= 1, got n={n}, i={i}")
    value = Fraction(1, (n - i) * binom(n, i))
    if value != sign(n + i + 1) * roman_coeff(i, n):
        raise InvariantError(f"level resistance ({n}, {i}) disagrees with its Roman form")
    return value


def resistance_recurrence_check(n: int) -> bool:
    """Does 2 R_n = R_{n-1} + 2/n hold exactly?"""
    if n < 1:
        raise DomainError(f"the recurrence needs n >= 1, got {n}")
    return 2 * resistance_direct(n).ohms == resistance_direct(n - 1).ohms + Fraction(2, n)
