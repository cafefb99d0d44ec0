"""Regenerate tests/golden/ from the current table builders.

Run after an intentional change to a table; the table tests compare byte for byte.
"""
from __future__ import annotations

import argparse
from pathlib import Path

from romankit.tables import TABLES, build_table, render_table

EXTENSIONS = {"plain": "txt", "csv": "csv", "json": "json"}


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--dest", type=Path, default=Path(__file__).resolve().parent.parent / "tests" / "golden")
    args = parser.parse_args()
    args.dest.mkdir(parents=True, exist_ok=True)
    for name in sorted(TABLES):
        table = build_table(name)
        for fmt, ext in EXTENSIONS.items():
            path = args.dest / f"{name}.{ext}"
            path.write_text(render_table(table, fmt), encoding="utf-8", newline="")
            print(path)


if __name__ == "__main__":
    main()
