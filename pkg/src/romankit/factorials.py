"""Factorial schemes: Roman, Knuth (epsilon-tagged), trivial and q-analog."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Literal, Optional

from .errors import DomainError, PoleError, RangeError, UsageError
from .numerics import EpsLaurent, RationalLike, parse_rational, render_rational

__all__ = [
    "FactorialScheme",
    "KNUTH",
    "ROMAN",
    "TRIVIAL",
    "knuth_factorial",
    "q_bracket",
    "q_factorial",
    "q_scheme",
    "roman_bracket",
    "roman_factorial",
    "roman_factorial_real",
    "scheme_factorial",
    "sign",
    "trivial_factorial",
]

SchemeKind = Literal["roman", "knuth", "trivial", "q"]


def sign(e: int) -> int:
    """(-1)**e for any integer e, as an int."""
    return -1 if e % 2 else 1


@dataclass(frozen=True)
class FactorialScheme:
    """Which generalized factorial the coefficient quotient is built from."""

    kind: SchemeKind
    q: Optional[Fraction] = None

    def __post_init__(self):
        if self.kind not in ("roman", "knuth", "trivial", "q"):
            raise UsageError(f"unknown factorial scheme {self.kind!r}")
        if self.kind == "q":
            if self.q is None:
                raise DomainError("the q scheme needs a value for q")
            q = Fraction(self.q)
            if q in (0, 1):
                raise DomainError(f"q must not be 0 or 1, got {render_rational(q)}")
            object.__setattr__(self, "q", q)
        elif self.q is not None:
            raise DomainError(f"scheme {self.kind!r} takes no q parameter")

    @property
    def name(self) -> str:
        if self.kind == "q":
            return f"q:{render_rational(self.q)}"
        return self.kind

    @classmethod
    def parse(cls, text: str) -> FactorialScheme:
        text = text.strip().lower()
        if text.startswith("q:"):
            return cls("q", parse_rational(text[2:]))
        return cls(text)  # type: ignore[arg-type]


ROMAN = FactorialScheme("roman")
KNUTH = FactorialScheme("knuth")
TRIVIAL = FactorialScheme("trivial")


def q_scheme(q: RationalLike) -> FactorialScheme:
    return FactorialScheme("q", Fraction(q))


def roman_bracket(a):
    """``a`` itself unless ``a == 0``, in which case 1."""
    return a if a != 0 else type(a)(1)


@lru_cache(maxsize=4096)
def roman_factorial(n: int) -> Fraction:
    """n! for n >= 0 and (-1)**(n+1) / (-n-1)! for negative n.  Never zero."""
    if n >= 0:
        return Fraction(math.factorial(n))
    return Fraction(sign(n + 1), math.factorial(-n - 1))


@lru_cache(maxsize=4096)
def knuth_factorial(n: int) -> EpsLaurent:
    """Leading term of Gamma(n + 1 + e): n! for n >= 0, a multiple of e^-1 below."""
    if n >= 0:
        return EpsLaurent.monomial(math.factorial(n), 0)
    return EpsLaurent.monomial(Fraction(sign(n - 1), math.factorial(-n - 1)), -1)


def trivial_factorial(n: int) -> Fraction:
    return Fraction(1)


def _check_q(q: RationalLike) -> Fraction:
    q = Fraction(q)
    if q in (0, 1):
        raise DomainError(f"q must not be 0 or 1, got {render_rational(q)}")
    return q


def q_bracket(n: int, q: RationalLike) -> Fraction:
    """(q**[n] - 1) / (q - 1) where [n] is the Roman bracket of n.

    Returns 0 when q**[n] == 1 (q = -1 and [n] even); callers that divide by
    the bracket must check.
    """
    q = _check_q(q)
    return (q ** roman_bracket(n) - 1) / (q - 1)


@lru_cache(maxsize=8192)
def _q_factorial(n: int, q: Fraction) -> Fraction:
    if n == 0:
        return Fraction(1)
    if n > 0:
        return _q_factorial(n - 1, q) * q_bracket(n, q)
    # invert [m]!/[m-1]! = [[m]] downwards from m = n + 1
    b = q_bracket(n + 1, q)
    if b == 0:
        raise PoleError(
            f"q-bracket of {n + 1} vanishes at q = {render_rational(q)} (root of unity)"
        )
    return _q_factorial(n + 1, q) / b


def q_factorial(n: int, q: RationalLike) -> Fraction:
    """q-analog of the Roman factorial, defined through its ratio law for all n."""
    q = _check_q(q)
    if abs(n) > 400:
        # walk the cache up in steps so the recursion depth stays bounded
        step = 1 if n > 0 else -1
        for m in range(0, n, 200 * step):
            _q_factorial(m, q)
    return _q_factorial(n, q)


def scheme_factorial(scheme: FactorialScheme, n: int) -> EpsLaurent:
    """The scheme's factorial of ``n`` as a Laurent polynomial (rational schemes sit at e^0)."""
    if scheme.kind == "roman":
        return EpsLaurent.monomial(roman_factorial(n))
    if scheme.kind == "knuth":
        return knuth_factorial(n)
    if scheme.kind == "trivial":
        return EpsLaurent.monomial(1)
    return EpsLaurent.monomial(q_factorial(n, scheme.q))


def roman_factorial_real(a: float) -> float:
    """Floating Roman factorial: Gamma(a + 1), or the exact value at negative integers."""
    a = float(a)
    if math.isnan(a) or abs(a) > 170:
        raise RangeError(f"argument {a!r} outside the supported range |a| <= 170")
    if a < 0 and a.is_integer():
        return float(roman_factorial(int(a)))
    try:
        return math.gamma(a + 1)
    except OverflowError as exc:
        raise RangeError(f"Gamma({a} + 1) overflows") from exc
