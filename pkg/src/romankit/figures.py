"""Printed reference tables, transcribed cell by cell.

These are used only for comparison: the tables emitted by :mod:`romankit.tables`
are always computed from the definitions, and any printed cell that disagrees
shows up in the discrepancy ledger.
"""
from __future__ import annotations

from fractions import Fraction

from .numerics import parse_rational

__all__ = ["PRINTED", "printed_cells"]


def _row(text: str) -> list[Fraction]:
    return [parse_rational(t) for t in text.split()]


def _grid(rows: dict[int, str], cols: list[int], align: str = "left") -> dict[tuple[int, int], Fraction]:
    cells = {}
    for n, text in rows.items():
        values = _row(text)
        used = cols[: len(values)] if align == "left" else cols[len(cols) - len(values):]
        for k, v in zip(used, values):
            cells[(n, k)] = v
    return cells


_COEFF_COLS = list(range(-4, 7))

PRINTED: dict[str, dict] = {
    "roman-factorials": {
        (n, None): v
        for n, v in zip(
            range(-6, 7), _row("-1/120 1/24 -1/6 1/2 -1 1 1 1 2 6 24 120 720")
        )
    },
    "roman-coefficients": _grid(
        {
            6: "-1/840 1/252 -1/56 1/7 1 6 15 20 15 6 1",
            5: "-1/504 1/168 -1/42 1/6 1 5 10 10 5 1 1/6",
            4: "-1/280 1/105 -1/30 1/5 1 4 6 4 1 1/5 -1/30",
            3: "-1/140 1/60 -1/20 1/4 1 3 3 1 1/4 -1/20 1/60",
            2: "-1/80 1/30 -1/12 1/3 1 2 1 1/3 -1/12 1/30 -1/60",
            1: "-1/20 1/12 -1/6 1/2 1 1 1/2 -1/6 1/12 -1/20 1/30",
            0: "-1/4 1/3 -1/2 1 1 1 -1/2 1/3 -1/4 1/5 -1/6",
            -1: "-1 1 -1 1 1 -1 1 -1 1 -1 1",
            -2: "3 -2 1 -1 1 -2 3 -4 5 -6 7",
            -3: "-3 1 -1/2 -1/2 1 -3 6 -10 15 -21 28",
            -4: "1 -1/3 -1/6 -1/3 1 -4 10 -20 35 -56 84",
            -5: "-1/4 -1/12 -1/12 -1/4 1 -5 15 -35 70 -126 210",
        },
        _COEFF_COLS,
    ),
    "gamma-coefficients": _grid(
        {
            6: "0 0 0 0 1 6 15 20 15 6 1",
            5: "0 0 0 0 1 5 10 10 5 1 0",
            4: "0 0 0 0 1 4 6 4 1 0 0",
            3: "0 0 0 0 1 3 3 1 0 0 0",
            2: "0 0 0 0 1 2 1 0 0 0 0",
            1: "0 0 0 0 1 1 0 0 0 0 0",
            0: "0 0 0 0 1 0 0 0 0 0 0",
            -1: "-1 1 -1 1 1 -1 1 -1 1 -1 1",
            -2: "3 -2 1 0 1 -2 3 -4 5 -6 7",
            -3: "-3 1 0 0 1 -3 6 -10 15 -21 28",
            -4: "1 0 0 0 1 -4 10 -20 35 -56 84",
            -5: "0 0 0 0 1 -5 15 -35 70 -126 210",
        },
        _COEFF_COLS,
    ),
    "region-1": _grid(
        {
            7: "1 7 21 35 35 21 7 1",
            6: "1 6 15 20 15 6 1",
            5: "1 5 10 10 5 1",
            4: "1 4 6 4 1",
            3: "1 3 3 1",
            2: "1 2 1",
            1: "1 1",
            0: "1",
        },
        list(range(0, 8)),
    ),
    "region-2": _grid(
        {
            -1: "1 -1 1 -1 1 -1 1",
            -2: "1 -2 3 -4 5 -6 7",
            -3: "1 -3 6 -10 15 -21 28",
            -4: "1 -4 10 -20 35 -56 84",
            -5: "1 -5 15 -35 70 -126 210",
        },
        list(range(0, 7)),
    ),
    "region-3": _grid(
        {
            -1: "-1 1 -1 1 -1 1",
            -2: "5 -4 3 -2 1",
            -3: "-10 6 -3 1",
            -4: "10 -4 1",
            -5: "-5 1",
            -6: "1",
        },
        list(range(-6, 0)),
    ),
    "region-4": _grid(
        {
            6: "1/7",
            5: "1/6 -1/42",
            4: "1/5 -1/30 1/105",
            3: "1/4 -1/20 1/60 -1/140",
            2: "1/3 -1/12 1/30 -1/60 1/105",
            1: "1/2 -1/6 1/12 -1/20 1/30 -1/42",
            0: "1 -1/2 1/3 -1/4 1/5 -1/6 1/7",
        },
        list(range(1, 8)),
        align="right",
    ),
    "region-5": _grid(
        {
            6: "-1/840 1/252 -1/56 1/7",
            5: "-1/504 1/168 -1/42 1/6",
            4: "-1/280 1/105 -1/30 1/5",
            3: "-1/140 1/60 -1/20 1/4",
            2: "-1/80 1/30 -1/12 1/3",
            1: "-1/20 1/12 -1/6 1/2",
            0: "-1/4 1/3 -1/2 1",
        },
        list(range(-4, 0)),
    ),
    "region-6": _grid(
        {
            -2: "-1",
            -3: "-1/2 -1/2",
            -4: "-1/3 -1/6 -1/3",
            -5: "-1/4 -1/12 -1/12 -1/4",
            -6: "-1/5 -1/20 -1/30 -1/20 -1/5",
            -7: "-1/6 -1/30 -1/60 -1/60 -1/30 -1/6",
        },
        list(range(-6, 0)),
        align="right",
    ),
    "resistance": {
        (n, None): v
        for n, v in zip(range(0, 8), _row("0 1 1 5/6 2/3 8/15 13/30 151/340"))
    },
}


def printed_cells(table: str) -> dict:
    return dict(PRINTED[table])
