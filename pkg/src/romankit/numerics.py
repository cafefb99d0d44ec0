"""Exact rationals and Laurent polynomials in a formal infinitesimal ``e``.

Rationals are :class:`fractions.Fraction`, which already keeps numerator and
denominator reduced with a positive denominator.  :class:`EpsLaurent` is a
finite sum ``sum c_k e^k`` over signed integer exponents; it is the value type
of Knuth factorials and coefficients, where ``omega = 1/e`` is ``e^-1``.
"""
from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping, Union

from .errors import DivergenceError, DomainError

__all__ = [
    "EpsLaurent",
    "Fraction",
    "eps_arith",
    "eps_limit_at_zero",
    "eps_substitute",
    "parse_eps",
    "parse_rational",
    "rat_arith",
    "render",
    "render_eps",
    "render_rational",
]

RationalLike = Union[int, Fraction]

_MINUS_SIGNS = str.maketrans({"−": "-", "–": "-"})


def rat_arith(a: RationalLike, b: RationalLike, op: str) -> Fraction:
    """Apply ``op`` (one of add, sub, mul, div) to two exact rationals."""
    a, b = Fraction(a), Fraction(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        if b == 0:
            raise DomainError(f"division of {render_rational(a)} by zero")
        return a / b
    raise DomainError(f"unknown rational operation {op!r}")


def render_rational(x: RationalLike) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Fraction:
    """Parse ``"p"`` or ``"p/q"``; accepts the typographic minus sign."""
    text = text.strip().translate(_MINUS_SIGNS)
    if not re.fullmatch(r"[+-]?\d+(/\d+)?", text):
        raise DomainError(f"not an exact rational: {text!r}")
    try:
        return Fraction(text)
    except ZeroDivisionError:
        raise DomainError(f"zero denominator in {text!r}") from None


class EpsLaurent:
    """Immutable finite Laurent polynomial in ``e`` with rational coefficients.

    Zero coefficients are never stored, so the zero polynomial has no terms and
    structural equality is value equality.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, RationalLike] | Iterable[tuple[int, RationalLike]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, Fraction] = {}
        for k, c in items:
            if not isinstance(k, int):
                raise DomainError(f"exponent must be an integer, got {k!r}")
            acc[k] = acc.get(k, Fraction(0)) + Fraction(c)
        self._terms = tuple(sorted((k, c) for k, c in acc.items() if c != 0))

    @classmethod
    def monomial(cls, coeff: RationalLike, exponent: int = 0) -> EpsLaurent:
        return cls({exponent: coeff})

    @classmethod
    def coerce(cls, x: EpsLaurent | RationalLike) -> EpsLaurent:
        if isinstance(x, EpsLaurent):
            return x
        if isinstance(x, (int, Rational)):
            return cls({0: Fraction(x)})
        raise TypeError(f"cannot interpret {x!r} as a Laurent polynomial in e")

    @property
    def terms(self) -> dict[int, Fraction]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def coefficient(self, exponent: int) -> Fraction:
        return self.terms.get(exponent, Fraction(0))

    @property
    def min_exponent(self) -> int | None:
        return self._terms[0][0] if self._terms else None

    # arithmetic -----------------------------------------------------------

    def __add__(self, other):
        try:
            other = EpsLaurent.coerce(other)
        except TypeError:
            return NotImplemented
        return EpsLaurent(self._terms + other._terms)

    __radd__ = __add__

    def __neg__(self) -> EpsLaurent:
        return EpsLaurent((k, -c) for k, c in self._terms)

    def __sub__(self, other):
        try:
            other = EpsLaurent.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return EpsLaurent.coerce(other) - self

    def __mul__(self, other):
        try:
            other = EpsLaurent.coerce(other)
        except TypeError:
            return NotImplemented
        return EpsLaurent(
            (ka + kb, ca * cb) for ka, ca in self._terms for kb, cb in other._terms
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        try:
            other = EpsLaurent.coerce(other)
        except TypeError:
            return NotImplemented
        if other.is_zero():
            raise DomainError("division by the zero Laurent polynomial")
        if not other.is_monomial():
            raise DomainError(
                f"division by non-monomial {render_eps(other)} is not supported"
            )
        (k, c), = other._terms
        return EpsLaurent((ka - k, ca / c) for ka, ca in self._terms)

    def __rtruediv__(self, other):
        return EpsLaurent.coerce(other) / self

    def __pow__(self, n: int) -> EpsLaurent:
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return EpsLaurent.monomial(1) / (self ** -n)
        out = EpsLaurent.monomial(1)
        for _ in range(n):
            out = out * self
        return out

    # comparison -----------------------------------------------------------

    def __eq__(self, other) -> bool:
        try:
            other = EpsLaurent.coerce(other)
        except TypeError:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if not self._terms:
            return hash(Fraction(0))
        if len(self._terms) == 1 and self._terms[0][0] == 0:
            return hash(self._terms[0][1])
        return hash(self._terms)

    def __repr__(self) -> str:
        return f"EpsLaurent({render_eps(self)!r})"

    def __str__(self) -> str:
        return render_eps(self)

    # evaluation -----------------------------------------------------------

    def limit_at_zero(self) -> Fraction:
        return eps_limit_at_zero(self)

    def substitute(self, value: RationalLike) -> Fraction:
        return eps_substitute(self, value)


def eps_arith(a: EpsLaurent, b: EpsLaurent, op: str) -> EpsLaurent:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise DomainError(f"unknown Laurent operation {op!r}")


def eps_limit_at_zero(a: EpsLaurent) -> Fraction:
    """Limit as ``e -> 0``; raises :class:`DivergenceError` on a pole."""
    a = EpsLaurent.coerce(a)
    lo = a.min_exponent
    if lo is not None and lo < 0:
        raise DivergenceError(f"{render_eps(a)} diverges as e -> 0")
    return a.coefficient(0)


def eps_substitute(a: EpsLaurent, value: RationalLike) -> Fraction:
    a = EpsLaurent.coerce(a)
    value = Fraction(value)
    if value == 0:
        if a.min_exponent is not None and a.min_exponent < 0:
            raise DomainError(f"cannot substitute e = 0 into {render_eps(a)}")
        return a.coefficient(0)
    return sum((c * value**k for k, c in a.terms.items()), Fraction(0))


def render_eps(a: EpsLaurent) -> str:
    a = EpsLaurent.coerce(a)
    if a.is_zero():
        return "0"
    parts = []
    for k, c in sorted(a.terms.items()):
        c_text = render_rational(c)
        if k == 0:
            parts.append(c_text)
        elif k == 1:
            parts.append(f"{c_text}*e")
        else:
            parts.append(f"{c_text}*e^{k}")
    return " + ".join(parts)


_TERM = re.compile(r"(?P<c>[+-]?\d+(?:/\d+)?)(?:\*e(?:\^(?P<k>[+-]?\d+))?)?")


def parse_eps(text: str) -> EpsLaurent:
    """Inverse of :func:`render_eps`."""
    text = text.strip().translate(_MINUS_SIGNS)
    terms: list[tuple[int, Fraction]] = []
    for chunk in text.split(" + "):
        m = _TERM.fullmatch(chunk.strip())
        if m is None:
            raise DomainError(f"not a Laurent polynomial in e: {text!r}")
        c = parse_rational(m.group("c"))
        if "*e" not in chunk:
            k = 0
        else:
            k = int(m.group("k")) if m.group("k") is not None else 1
        terms.append((k, c))
    return EpsLaurent(terms)


def render(value: EpsLaurent | RationalLike) -> str:
    """Render either value type per the shared textual contract."""
    if isinstance(value, EpsLaurent):
        return render_eps(value)
    return render_rational(value)
