"""Checkable encodings of the Roman/Knuth/Gamma coefficient identities.

Each checker returns an :class:`IdentityVerdict` with both sides rendered in the
exact-numerics text format.  Where the commonly printed statement of an
identity has the wrong sign (the factorial product and Roman's identity), the
asserted form is the one derived from the definitions and the verdict also
carries the printed form, so the discrepancy stays visible.

:func:`verify_grid` sweeps one identity over an integer box.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Callable, Optional, Sequence

from .coefficients import GAMMA, Scheme, gamma_coeff, roman_coeff, scheme_coeff, sign
from .errors import DomainError, UsageError
from .factorials import ROMAN, roman_factorial
from .numerics import EpsLaurent, render
from .regions import classify_region

__all__ = [
    "IDENTITIES",
    "GridReport",
    "IdentityVerdict",
    "check_complementation",
    "check_corollary_sum",
    "check_iterative",
    "check_knuth_factorial_product",
    "check_pascal",
    "check_pascal_gamma",
    "check_romans_identity",
    "check_rotation_reflection",
    "verify_grid",
]


@dataclass(frozen=True)
class IdentityVerdict:
    identity: str
    args: tuple[int, ...]
    applicable: bool
    holds: bool
    lhs: str
    rhs: str
    details: dict = field(default_factory=dict, compare=False)


def _verdict(name, args, applicable, lhs, rhs, **details) -> IdentityVerdict:
    return IdentityVerdict(
        identity=name,
        args=tuple(args),
        applicable=applicable,
        holds=EpsLaurent.coerce(lhs) == EpsLaurent.coerce(rhs),
        lhs=render(lhs),
        rhs=render(rhs),
        details=details,
    )


def _iverson(cond: bool) -> int:
    return 1 if cond else 0


def check_complementation(n: int, k: int, scheme: Scheme = ROMAN) -> IdentityVerdict:
    return _verdict(
        "complementation", (n, k), True,
        scheme_coeff(scheme, n, k), scheme_coeff(scheme, n, n - k),
    )


def check_iterative(a: int, b: int, c: int, scheme: Scheme = ROMAN) -> IdentityVerdict:
    lhs = scheme_coeff(scheme, a, b) * scheme_coeff(scheme, b, c)
    rhs = scheme_coeff(scheme, a, c) * scheme_coeff(scheme, a - c, b - c)
    return _verdict("iterative", (a, b, c), True, lhs, rhs)


def check_pascal(a: int, k: int, scheme: Scheme = ROMAN) -> IdentityVerdict:
    """Pascal's recursion; applicable when a, k and a - k are all nonzero."""
    lhs = scheme_coeff(scheme, a, k)
    rhs = scheme_coeff(scheme, a - 1, k) + scheme_coeff(scheme, a - 1, k - 1)
    return _verdict("pascal", (a, k), a != 0 and k != 0 and a != k, lhs, rhs)


def check_pascal_gamma(n: int, k: int) -> IdentityVerdict:
    lhs = gamma_coeff(n, k)
    rhs = gamma_coeff(n - 1, k) + gamma_coeff(n - 1, k - 1)
    return _verdict("pascal-gamma", (n, k), not (n == 0 and k == 0), lhs, rhs)


def check_corollary_sum(n: int, k: int, r: int) -> IdentityVerdict:
    """Summation corollary; applicable when the four corner pairs share a region."""
    if r < 0:
        raise DomainError(f"r must be >= 0, got {r}")
    corners = [(n, k), (n + r, k), (n, k + 1), (n + r + 1, k + 1)]
    applicable = len({classify_region(*p) for p in corners}) == 1
    lhs = sum((roman_coeff(m, k) for m in range(n, n + r + 1)), Fraction(0))
    rhs = roman_coeff(n + r + 1, k + 1) - roman_coeff(n, k + 1)
    return _verdict("corollary-sum", (n, k, r), applicable, lhs, rhs)


def check_rotation_reflection(n: int, k: int) -> IdentityVerdict:
    """Rotation/reflection law, plus its form [n, k] = +-[-k-1, -n-1]; both must hold."""
    lhs = sign(k + _iverson(k > 0)) * roman_coeff(-n, k - 1)
    rhs = sign(n + _iverson(n > 0)) * roman_coeff(-k, n - 1)
    proof_lhs = roman_coeff(n, k)
    proof_rhs = sign(n + k + _iverson(n < 0) + _iverson(k < 0)) * roman_coeff(-k - 1, -n - 1)
    v = _verdict(
        "rotation-reflection", (n, k), True, lhs, rhs,
        proof_lhs=render(proof_lhs), proof_rhs=render(proof_rhs),
        proof_holds=proof_lhs == proof_rhs,
    )
    if v.holds and proof_lhs != proof_rhs:
        v = IdentityVerdict(v.identity, v.args, v.applicable, False, v.lhs, v.rhs, v.details)
    return v


def check_romans_identity(n: int, k: int) -> IdentityVerdict:
    """[n, k][k, n] = (-1)**(n+k+1) / |n - k|  (printed form has (-1)**(n+k))."""
    if n == k:
        raise DomainError("Roman's identity needs n != k")
    lhs = roman_coeff(n, k) * roman_coeff(k, n)
    rhs = Fraction(sign(n + k + 1), abs(n - k))
    printed = Fraction(sign(n + k), abs(n - k))
    return _verdict(
        "romans-identity", (n, k), True, lhs, rhs,
        printed_rhs=render(printed), printed_holds=lhs == printed,
    )


def check_knuth_factorial_product(n: int) -> IdentityVerdict:
    """[n]! [-n]! = (-1)**(|n|+1) |n| for n != 0, and 1 at n = 0."""
    lhs = roman_factorial(n) * roman_factorial(-n)
    rhs = Fraction(1) if n == 0 else Fraction(sign(abs(n) + 1) * abs(n))
    printed = Fraction(sign(n) * abs(n))
    return _verdict(
        "knuth-factorial-product", (n,), True, lhs, rhs,
        printed_rhs=render(printed), printed_holds=lhs == printed,
        form="paper-sign-adjusted",
    )


@dataclass(frozen=True)
class _Spec:
    arity: int
    run: Callable[[tuple[int, ...], Scheme], Optional[IdentityVerdict]]
    uses_scheme: bool


def _romans(args, scheme):
    n, k = args
    return None if n == k else check_romans_identity(n, k)


IDENTITIES: dict[str, _Spec] = {
    "complementation": _Spec(2, lambda a, s: check_complementation(*a, scheme=s), True),
    "iterative": _Spec(3, lambda a, s: check_iterative(*a, scheme=s), True),
    "pascal": _Spec(2, lambda a, s: check_pascal(*a, scheme=s), True),
    "pascal-gamma": _Spec(2, lambda a, s: check_pascal_gamma(*a), False),
    "corollary-sum": _Spec(3, lambda a, s: check_corollary_sum(*a), False),
    "rotation-reflection": _Spec(2, lambda a, s: check_rotation_reflection(*a), False),
    "romans-identity": _Spec(2, _romans, False),
    "knuth-factorial-product": _Spec(1, lambda a, s: check_knuth_factorial_product(*a), False),
}

Bounds = Sequence[tuple[int, int]]


def _normalize_bounds(name: str, bounds) -> tuple[tuple[int, int], ...]:
    arity = IDENTITIES[name].arity
    if len(bounds) == 2 and all(isinstance(b, int) for b in bounds):
        bounds = [tuple(bounds)] * arity
    bounds = [tuple(b) for b in bounds]
    if len(bounds) == 1:
        bounds = bounds * arity
    if len(bounds) != arity:
        raise DomainError(f"{name} takes {arity} arguments, got {len(bounds)} ranges")
    if name == "corollary-sum":
        lo, hi = bounds[2]
        bounds[2] = (max(lo, 0), hi)
    return tuple(bounds)


@dataclass
class GridReport:
    identity: str
    bounds: tuple[tuple[int, int], ...]
    scheme: str
    applicable: int = 0
    held: int = 0
    failed: int = 0
    failures: list = field(default_factory=list)
    inapplicable: int = 0
    inapplicable_held: int = 0

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def to_dict(self) -> dict:
        d = asdict(self)
        d["bounds"] = [list(b) for b in self.bounds]
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=False)


def verify_grid(identity: str, bounds, scheme: Scheme = ROMAN) -> GridReport:
    """Run ``identity`` over every integer tuple in ``bounds`` (inclusive ranges).

    ``bounds`` is one ``(lo, hi)`` pair applied to every argument, or one pair
    per argument.  For corollary-sum the r range is clipped at 0.
    """
    if identity not in IDENTITIES:
        raise UsageError(f"unknown identity {identity!r}; choose from {sorted(IDENTITIES)}")
    spec = IDENTITIES[identity]
    box = _normalize_bounds(identity, bounds)
    report = GridReport(
        identity=identity,
        bounds=box,
        scheme=scheme.name if spec.uses_scheme else (
            GAMMA.name if identity == "pascal-gamma" else ROMAN.name
        ),
    )
    ranges = [range(lo, hi + 1) for lo, hi in box]
    for args in itertools.product(*ranges):
        v = spec.run(args, scheme)
        if v is None or not v.applicable:
            report.inapplicable += 1
            if v is not None and v.holds:
                report.inapplicable_held += 1
            continue
        report.applicable += 1
        if v.holds:
            report.held += 1
        else:
            report.failed += 1
            report.failures.append({"args": list(v.args), "lhs": v.lhs, "rhs": v.rhs})
    report.failures.sort(key=lambda f: f["args"])
    return report
