"""Machine-generated list of places where printed values contradict the definitions."""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass

from .errors import UsageError
from .figures import PRINTED
from .identities import check_knuth_factorial_product, check_romans_identity
from .numerics import render_rational
from .coefficients import roman_coeff
from .regions import region_forms, stirling_series_partial
from .tables import build_table

__all__ = ["LedgerEntry", "figure_discrepancies", "discrepancy_ledger", "render_ledger"]


@dataclass(frozen=True)
class LedgerEntry:
    id: str
    location: str
    printed: str
    derived: str
    evidence: str

    def line(self) -> str:
        return f"{self.id}: paper {self.printed}, derived {self.derived}"


def figure_discrepancies() -> list[LedgerEntry]:
    """Every printed table cell whose value differs from the generated table."""
    entries = []
    for name, printed in PRINTED.items():
        table = build_table(name)
        for (n, k), value in sorted(printed.items(), key=lambda item: (item[0][0], item[0][1] or 0)):
            derived = table.get(n, k)
            if derived == value:
                continue
            where = f"n={n}" if k is None else f"n={n},k={k}"
            entries.append(
                LedgerEntry(
                    id=f"{name}-table {where}",
                    location=f"table {name}, cell {where}",
                    printed=render_rational(value),
                    derived="absent" if derived is None else render_rational(derived),
                    evidence="definitional formula",
                )
            )
    return entries


def _sign_entries() -> list[LedgerEntry]:
    kfp = check_knuth_factorial_product(2)
    ri = check_romans_identity(2, 0)
    return [
        LedgerEntry(
            id="knuth-factorial-product",
            location="factorial product proposition",
            printed="sign (-1)^n",
            derived="(-1)^{n+1} (n>=1)",
            evidence=(
                f"[2]![-2]! = {kfp.lhs}, printed form gives {kfp.details['printed_rhs']}; "
                "at n=0 the product is 1, printed form gives 0"
            ),
        ),
        LedgerEntry(
            id="romans-identity",
            location="Roman's identity",
            printed="sign (-1)^{n+k}",
            derived="(-1)^{n+k+1}",
            evidence=(
                f"[2 choose 0][0 choose 2] = {ri.lhs}, printed form gives {ri.details['printed_rhs']}"
            ),
        ),
    ]


def _form_entries() -> list[LedgerEntry]:
    r5 = dict(region_forms(1, -1))
    r6 = dict(region_forms(-3, -2))
    scaled_by_n = stirling_series_partial(3, 4, 400) / 2
    return [
        LedgerEntry(
            id="region-4 stirling form",
            location="six regions proposition, region 4, Stirling series",
            printed="scale factor n",
            derived="scale factor n!",
            evidence=(
                f"at (3,4) the n-scaled series tends to {scaled_by_n.limit_denominator(10**6)}, "
                f"the coefficient is {render_rational(roman_coeff(3, 4))}; the factors agree only for n <= 2"
            ),
        ),
        LedgerEntry(
            id="region-5 form 3",
            location="six regions proposition, region 5, third expression",
            printed="(-1)^{k+1} / ((n+1) C(n-k-1, n+1))",
            derived="(-1)^{k+1} / ((n+1) C(n-k, n+1))",
            evidence=f"printed form divides by C(1, 2) = 0 at (1,-1); corrected form gives {render_rational(r5['recip C(n-k,n+1)'])}",
        ),
        LedgerEntry(
            id="region-6 forms 5-6",
            location="six regions proposition, region 6, reductions to regions 4 and 5",
            printed="sign (-1)^{k+1}",
            derived="sign (-1)^k",
            evidence=f"at (-3,-2) the corrected forms give {render_rational(r6['via R4 pair'])}, the coefficient itself",
        ),
    ]


def discrepancy_ledger() -> list[LedgerEntry]:
    return _sign_entries() + _form_entries() + figure_discrepancies()


def render_ledger(entries: list[LedgerEntry], fmt: str = "plain") -> str:
    if fmt == "json":
        return json.dumps([asdict(e) for e in entries], indent=2) + "\n"
    if fmt == "csv":
        import csv
        import io

        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["id", "location", "printed", "derived", "evidence"])
        for e in entries:
            w.writerow([e.id, e.location, e.printed, e.derived, e.evidence])
        return buf.getvalue()
    if fmt == "plain":
        return "".join(f"{e.line()}\n    {e.location}; {e.evidence}\n" for e in entries)
    raise UsageError(f"unknown output format {fmt!r}")
