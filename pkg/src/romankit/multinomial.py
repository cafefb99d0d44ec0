"""Multinomial Roman, Knuth and Gamma coefficients."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .coefficients import GammaLimit, Scheme
from .errors import DomainError, InvariantError, PoleError
from .factorials import KNUTH, ROMAN, scheme_factorial
from .numerics import EpsLaurent, parse_rational

__all__ = [
    "MultiIndex",
    "multinomial_coeff",
    "multinomial_gamma",
    "multinomial_knuth",
    "multinomial_roman",
]


@dataclass(frozen=True)
class MultiIndex:
    """Finite integer vector; parts may be negative or zero."""

    entries: tuple[int, ...]

    def __init__(self, entries: Iterable[int]):
        object.__setattr__(self, "entries", tuple(int(e) for e in entries))

    @property
    def sum(self) -> int:
        return sum(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __str__(self) -> str:
        return ",".join(str(e) for e in self.entries)

    @classmethod
    def parse(cls, text: str) -> MultiIndex:
        parts = [p for p in text.split(",") if p.strip()]
        values = []
        for p in parts:
            v = parse_rational(p)
            if v.denominator != 1:
                raise DomainError(f"multi-index parts must be integers, got {p!r}")
            values.append(v.numerator)
        return cls(values)


def _as_index(beta) -> MultiIndex:
    return beta if isinstance(beta, MultiIndex) else MultiIndex(beta)


def _quotient(scheme, a: int, beta: MultiIndex) -> EpsLaurent:
    den = EpsLaurent.monomial(1)
    for part in beta:
        den = den * scheme_factorial(scheme, part)
    if den.is_zero():
        raise PoleError("a factorial in the denominator vanishes")
    return scheme_factorial(scheme, a) / den


def multinomial_roman(a: int, beta) -> Fraction:
    beta = _as_index(beta)
    if beta.sum != a:
        return Fraction(0)
    return _quotient(ROMAN, a, beta).coefficient(0)


def multinomial_knuth(a: int, beta) -> EpsLaurent:
    beta = _as_index(beta)
    if beta.sum != a:
        return EpsLaurent()
    value = _quotient(KNUTH, a, beta)
    if value.min_exponent < 0:
        raise InvariantError(f"multinomial Knuth coefficient {a}; {beta} has a pole in e")
    return value


def multinomial_gamma(a: int, beta) -> int:
    value = multinomial_knuth(a, beta).limit_at_zero()
    if value.denominator != 1:
        raise InvariantError(f"multinomial Gamma coefficient {a}; {beta} is not an integer")
    return value.numerator


def multinomial_coeff(scheme: Scheme, a: int, beta) -> EpsLaurent:
    """Multinomial coefficient under any scheme, as a Laurent polynomial."""
    beta = _as_index(beta)
    if isinstance(scheme, GammaLimit):
        return EpsLaurent.monomial(multinomial_gamma(a, beta))
    if beta.sum != a:
        return EpsLaurent()
    if scheme.kind == "knuth":
        return multinomial_knuth(a, beta)
    return _quotient(scheme, a, beta)
