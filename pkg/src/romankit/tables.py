"""Generated reference tables and their plain / CSV / JSON renderings.

Every cell is computed from the definitions; nothing here is transcribed.
"""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional

from .coefficients import gamma_coeff, roman_coeff
from .cube import resistance_direct
from .errors import UsageError
from .factorials import roman_factorial
from .regions import Region, classify_region, region_closed_form
from .numerics import render_rational

__all__ = ["TABLES", "Table", "build_table", "render_table"]

Cell = Optional[Fraction]


@dataclass
class Table:
    name: str
    title: str
    row_keys: list[int]
    col_keys: Optional[list[int]]  # None for one-dimensional tables
    cells: dict  # (n, k) -> Fraction; k is None in 1-D tables
    notes: dict = field(default_factory=dict)  # (n, k) -> short note

    @property
    def one_dimensional(self) -> bool:
        return self.col_keys is None

    def get(self, n: int, k: Optional[int] = None) -> Cell:
        return self.cells.get((n, k))


def _grid(name, title, rows, cols, value: Callable[[int, int], Fraction], keep=None) -> Table:
    cells = {}
    for n in rows:
        for k in cols:
            if keep is None or keep(n, k):
                cells[(n, k)] = Fraction(value(n, k))
    return Table(name, title, list(rows), list(cols), cells)


def _region_table(region: Region, rows, cols) -> Table:
    return _grid(
        f"region-{region.value}",
        f"Region {region.value}",
        rows,
        cols,
        region_closed_form,
        keep=lambda n, k: classify_region(n, k) is region,
    )


# row order follows the printed figures
_COEFF_ROWS = range(6, -6, -1)
_COEFF_COLS = range(-4, 7)

RESISTANCE_N7_NOTE = "see ledger: resistance-table n=7"


def _resistance() -> Table:
    rows = list(range(0, 8))
    cells = {(n, None): resistance_direct(n).ohms for n in rows}
    return Table(
        "resistance",
        "Resistance of the n-cube (ohms)",
        rows,
        None,
        cells,
        notes={(7, None): RESISTANCE_N7_NOTE},
    )


TABLES: dict[str, Callable[[], Table]] = {
    "roman-factorials": lambda: Table(
        "roman-factorials",
        "Roman factorials [n]!",
        list(range(-6, 7)),
        None,
        {(n, None): roman_factorial(n) for n in range(-6, 7)},
    ),
    "roman-coefficients": lambda: _grid(
        "roman-coefficients", "Roman coefficients [n choose k]",
        _COEFF_ROWS, _COEFF_COLS, roman_coeff,
    ),
    "gamma-coefficients": lambda: _grid(
        "gamma-coefficients", "Gamma-coefficients [n choose k]^0",
        _COEFF_ROWS, _COEFF_COLS, gamma_coeff,
    ),
    "region-1": lambda: _region_table(Region.R1, range(7, -1, -1), range(0, 8)),
    "region-2": lambda: _region_table(Region.R2, range(-1, -6, -1), range(0, 7)),
    "region-3": lambda: _region_table(Region.R3, range(-1, -7, -1), range(-6, 0)),
    "region-4": lambda: _region_table(Region.R4, range(6, -1, -1), range(1, 8)),
    "region-5": lambda: _region_table(Region.R5, range(6, -1, -1), range(-4, 0)),
    "region-6": lambda: _region_table(Region.R6, range(-2, -8, -1), range(-6, 0)),
    "resistance": _resistance,
}


def build_table(name: str) -> Table:
    try:
        builder = TABLES[name]
    except KeyError:
        raise UsageError(f"unknown table {name!r}; choose from {sorted(TABLES)}") from None
    return builder()


def _cell_text(table: Table, n: int, k) -> str:
    v = table.get(n, k)
    return "" if v is None else render_rational(v)


def render_table(table: Table, fmt: str = "plain") -> str:
    if fmt == "csv":
        return _render_csv(table)
    if fmt == "json":
        return _render_json(table)
    if fmt == "plain":
        return _render_plain(table)
    raise UsageError(f"unknown output format {fmt!r}")


def _render_csv(table: Table) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    if table.one_dimensional:
        has_notes = bool(table.notes)
        w.writerow(["n", "value"] + (["note"] if has_notes else []))
        for n in table.row_keys:
            row = [n, _cell_text(table, n, None)]
            if has_notes:
                row.append(table.notes.get((n, None), ""))
            w.writerow(row)
    else:
        w.writerow(["n\\k"] + table.col_keys)
        for n in table.row_keys:
            w.writerow([n] + [_cell_text(table, n, k) for k in table.col_keys])
    return buf.getvalue()


def _render_json(table: Table) -> str:
    rows = []
    for n in table.row_keys:
        cells = []
        for k in table.col_keys if not table.one_dimensional else [None]:
            v = table.get(n, k)
            if v is None:
                continue
            cell = {"k": k, "value": render_rational(v)}
            if (n, k) in table.notes:
                cell["note"] = table.notes[(n, k)]
            cells.append(cell)
        rows.append({"n": n, "cells": cells})
    return json.dumps({"table": table.name, "rows": rows}, indent=2) + "\n"


def _render_plain(table: Table) -> str:
    lines = [table.title]
    if table.one_dimensional:
        texts = [_cell_text(table, n, None) for n in table.row_keys]
        marks = ["*" if (n, None) in table.notes else "" for n in table.row_keys]
        width = max(len(t) + len(m) for t, m in zip(texts, marks))
        for n, t, m in zip(table.row_keys, texts, marks):
            lines.append(f"{n:>4} | {(t + m):>{width}}")
        for (n, _), note in table.notes.items():
            lines.append(f"* n={n}: {note}")
        return "\n".join(lines) + "\n"
    grid = [[_cell_text(table, n, k) for k in table.col_keys] for n in table.row_keys]
    width = max([len(str(k)) for k in table.col_keys] + [len(t) for row in grid for t in row])
    lines.append("n\\k  | " + " ".join(f"{k:>{width}}" for k in table.col_keys))
    lines.append("-" * len(lines[-1]))
    for n, row in zip(table.row_keys, grid):
        lines.append(f"{n:>4} | " + " ".join(f"{t:>{width}}" for t in row))
    return "\n".join(lines) + "\n"
