"""Six-region classification of integer pairs and the closed forms on each region.

Regions of the integer plane, for the pair (n, k)::

    R1: n >= k >= 0     R4: k > n >= 0
    R2: k >= 0 > n      R5: n >= 0 > k
    R3: 0 > n >= k      R6: 0 > k > n

Regions 1-3 give signed binomial coefficients; regions 4-6 give reciprocals,
which also admit Stirling-series, forward-difference and Beta expressions.
"""
from __future__ import annotations

import enum
import math
from fractions import Fraction

from .coefficients import binom, sign
from .errors import DomainError, InvariantError, PoleError
from .factorials import knuth_factorial
from .numerics import RationalLike, eps_limit_at_zero, render_rational

__all__ = [
    "Region",
    "beta_limit",
    "classify_region",
    "forward_diff_inverse",
    "region_all_forms",
    "region_closed_form",
    "region_forms",
    "stirling2",
    "stirling_series_partial",
]


class Region(enum.Enum):
    R1 = 1
    R2 = 2
    R3 = 3
    R4 = 4
    R5 = 5
    R6 = 6

    def __str__(self) -> str:
        return self.name


_PREDICATES = {
    Region.R1: lambda n, k: n >= k >= 0,
    Region.R2: lambda n, k: k >= 0 > n,
    Region.R3: lambda n, k: 0 > n >= k,
    Region.R4: lambda n, k: k > n >= 0,
    Region.R5: lambda n, k: n >= 0 > k,
    Region.R6: lambda n, k: 0 > k > n,
}


def region_predicates(n: int, k: int) -> list[Region]:
    """Every region whose defining inequality holds; exactly one for any pair."""
    return [r for r, pred in _PREDICATES.items() if pred(n, k)]


def classify_region(n: int, k: int) -> Region:
    hits = region_predicates(n, k)
    if len(hits) != 1:
        raise InvariantError(f"({n}, {k}) matched regions {hits}")
    return hits[0]


def _recip(x: int) -> Fraction:
    if x == 0:
        raise PoleError("reciprocal of a vanishing binomial coefficient")
    return Fraction(1, x)


def region_closed_form(n: int, k: int) -> Fraction:
    """The primary closed form of the Roman coefficient on the pair's region."""
    region = classify_region(n, k)
    if region is Region.R1:
        return Fraction(binom(n, k))
    if region is Region.R2:
        return Fraction(sign(k) * binom(-n + k - 1, k))
    if region is Region.R3:
        return Fraction(sign(n + k) * binom(-k - 1, n - k))
    if region is Region.R4:
        return sign(n + k) * _recip((n - k) * binom(k, n))
    if region is Region.R5:
        return sign(k) * _recip(k * binom(n - k, n))
    return _recip((n - k) * binom(-n - 1, -k - 1))


def region_forms(n: int, k: int) -> list[tuple[str, Fraction]]:
    """Every finite closed form for the pair's region, labelled.

    Two of the R5/R6 forms carry corrections relative to their usual printed
    statement: the third R5 form uses C(n-k, n+1), and the two R6 forms that
    reduce to other regions carry the sign (-1)**k.
    """
    region = classify_region(n, k)
    if region in (Region.R1, Region.R2, Region.R3):
        return [("binomial", region_closed_form(n, k))]
    if region is Region.R4:
        s = sign(n + k)
        return [
            ("recip C(k,n)", s * _recip((n - k) * binom(k, n))),
            ("recip C(k,n+1)", -s * _recip((n + 1) * binom(k, n + 1))),
            ("recip C(k-1,n)", -s * _recip(k * binom(k - 1, n))),
            ("forward difference", s * forward_diff_inverse(n, k)),
        ]
    if region is Region.R5:
        s = sign(k)
        return [
            ("recip C(n-k,n)", s * _recip(k * binom(n - k, n))),
            ("recip C(n-k-1,n)", s * _recip((k - n) * binom(n - k - 1, n))),
            ("recip C(n-k,n+1)", -s * _recip((n + 1) * binom(n - k, n + 1))),
            ("complement in R4", region_closed_form(n, n - k)),
            ("forward difference", s * forward_diff_inverse(n, n - k)),
            ("beta", -beta_limit(k - n, -k)),
        ]
    s = sign(k)
    return [
        ("recip C(-n-1,-k-1)", _recip((n - k) * binom(-n - 1, -k - 1))),
        ("recip C(-n-1,-k)", _recip(k * binom(-n - 1, -k))),
        ("recip C(-n-2,-k-1)", _recip((n + 1) * binom(-n - 2, -k - 1))),
        ("forward difference", forward_diff_inverse(k - n - 1, -(n + 1))),
        ("via R4 pair", s * region_closed_form(k - n - 1, -n - 1)),
        ("via R5 pair", s * region_closed_form(k - n - 1, k)),
    ]


def region_all_forms(n: int, k: int) -> list[Fraction]:
    return [value for _, value in region_forms(n, k)]


_STIRLING_ROWS: list[list[int]] = [[1]]


def stirling2(j: int, n: int) -> int:
    """Stirling number of the second kind S(j, n) by the triangular recurrence."""
    if j < 0 or n < 0:
        raise DomainError(f"Stirling numbers need j, n >= 0, got ({j}, {n})")
    if n > j:
        return 0
    rows = _STIRLING_ROWS
    while len(rows) <= j:
        prev = rows[-1]
        m = len(rows)
        row = [0] * (m + 1)
        for i in range(1, m + 1):
            row[i] = i * (prev[i] if i < m else 0) + prev[i - 1]
        rows.append(row)
    return rows[j][n]


def stirling_series_partial(n: int, k: int, terms: int) -> Fraction:
    """Truncation of (-1)**(n+k+1) * n! * sum_j S(j, n) / k**(j+1) after ``terms`` terms.

    Defined for region 4 with n >= 1; the full series equals the Roman
    coefficient, so this returns the signed, scaled partial sum.  The scale
    is n!, not n: sum_j S(j, n) x**j = x**n / prod_{i<=n} (1 - i x), so the
    sum is (k-n-1)!/k!.  The two scales coincide only for n <= 2.
    """
    if not (k > n >= 1):
        raise DomainError(f"Stirling series needs k > n >= 1, got ({n}, {k})")
    if terms < 1:
        raise DomainError("at least one term is required")
    total = sum(
        (Fraction(stirling2(j, n), k ** (j + 1)) for j in range(terms)), Fraction(0)
    )
    return sign(n + k + 1) * math.factorial(n) * total


def forward_diff_inverse(order: int, c: RationalLike) -> Fraction:
    """n-th forward difference of x -> 1/(x - c), evaluated at x = 0."""
    if order < 0:
        raise DomainError(f"difference order must be >= 0, got {order}")
    c = Fraction(c)
    if c.denominator == 1 and 0 <= c <= order:
        raise PoleError(f"1/(x - {render_rational(c)}) has a pole at x = {c}")
    total = Fraction(0)
    for j in range(order + 1):
        total += sign(order - j) * binom(order, j) / (j - c)
    return total


def beta_limit(a: int, b: int) -> Fraction:
    """Regularized Beta B(a, b) = lim_{e->0} of the Knuth-factorial quotient."""
    quotient = knuth_factorial(a - 1) * knuth_factorial(b - 1) / knuth_factorial(a + b - 1)
    return eps_limit_at_zero(quotient)
