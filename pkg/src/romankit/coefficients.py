"""Binomial-coefficient generalizations induced by the factorial schemes."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Union

from .errors import DomainError, PoleError
from .factorials import (
    FactorialScheme,
    sign,
    knuth_factorial,
    q_factorial,
    roman_factorial,
)
from .numerics import EpsLaurent, RationalLike, render_rational

__all__ = [
    "GAMMA",
    "GammaLimit",
    "Scheme",
    "binom",
    "binomial_extended",
    "gamma_coeff",
    "knuth_coeff",
    "lower_factorial",
    "parse_scheme",
    "roman_coeff",
    "scheme_coeff",
    "scheme_name",
    "sign",
]


@dataclass(frozen=True)
class GammaLimit:
    """Marker for Gamma-coefficients: the e -> 0 limit of Knuth coefficients.

    Not a factorial scheme (no factorial of its own), but accepted wherever a
    coefficient family is chosen.
    """

    name: str = "gamma"


GAMMA = GammaLimit()

Scheme = Union[FactorialScheme, GammaLimit]


def parse_scheme(text: str) -> Scheme:
    """Parse ``roman``, ``knuth``, ``gamma``, ``trivial`` or ``q:<rational>``."""
    if text.strip().lower() == "gamma":
        return GAMMA
    return FactorialScheme.parse(text)


def scheme_name(scheme: Scheme) -> str:
    return scheme.name


def binom(n: int, k: int) -> int:
    """Classical C(n, k) for n >= 0; zero outside 0 <= k <= n."""
    if n < 0:
        raise DomainError(f"classical binomial needs n >= 0, got {n}")
    return math.comb(n, k) if 0 <= k <= n else 0


def lower_factorial(x: RationalLike, k: int) -> Fraction:
    """Falling factorial (x)_k; for k < 0 the reciprocal of (x+1)(x+2)...(x-k)."""
    x = Fraction(x)
    out = Fraction(1)
    if k >= 0:
        for i in range(k):
            out *= x - i
        return out
    for i in range(1, -k + 1):
        factor = x + i
        if factor == 0:
            raise PoleError(f"lower factorial ({render_rational(x)})_{k} has a pole")
        out *= factor
    return 1 / out


def binomial_extended(x: RationalLike, k: int) -> Fraction:
    """Classical extended binomial coefficient (x)_k / k!, for k >= 0 only."""
    if k < 0:
        raise DomainError(f"extended binomial coefficient needs k >= 0, got {k}")
    return lower_factorial(x, k) / math.factorial(k)


@lru_cache(maxsize=1 << 16)
def roman_coeff(n: int, k: int) -> Fraction:
    return roman_factorial(n) / (roman_factorial(k) * roman_factorial(n - k))


@lru_cache(maxsize=1 << 16)
def knuth_coeff(n: int, k: int) -> EpsLaurent:
    """Knuth coefficient: an e-monomial of degree 0 (regions 1-3) or 1 (regions 4-6)."""
    return knuth_factorial(n) / (knuth_factorial(k) * knuth_factorial(n - k))


def gamma_coeff(n: int, k: int) -> int:
    value = knuth_coeff(n, k).limit_at_zero()
    assert value.denominator == 1
    return value.numerator


def scheme_coeff(scheme: Scheme, n: int, k: int) -> EpsLaurent:
    """Coefficient ``[n choose k]`` under ``scheme``, as a Laurent polynomial."""
    if isinstance(scheme, GammaLimit):
        return EpsLaurent.monomial(gamma_coeff(n, k))
    if scheme.kind == "roman":
        return EpsLaurent.monomial(roman_coeff(n, k))
    if scheme.kind == "knuth":
        return knuth_coeff(n, k)
    if scheme.kind == "trivial":
        return EpsLaurent.monomial(1)
    return EpsLaurent.monomial(_q_coeff(n, k, scheme.q))


@lru_cache(maxsize=1 << 16)
def _q_coeff(n: int, k: int, q: Fraction) -> Fraction:
    den = q_factorial(k, q) * q_factorial(n - k, q)
    if den == 0:
        raise PoleError(
            f"q-factorial vanishes in the denominator at q = {render_rational(q)}"
        )
    return q_factorial(n, q) / den

