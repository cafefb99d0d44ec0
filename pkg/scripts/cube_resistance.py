"""Print R_n three ways, plus n * R_n, to watch the 2/n asymptote."""
from __future__ import annotations

import argparse

from romankit.cube import level_resistance, resistance_direct, resistance_via_roman


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=12)
    args = parser.parse_args()
    print(f"{'n':>4}  {'R_n':>24}  {'float':>12}  {'n*R_n':>8}  agree")
    for n in range(0, args.max_n + 1):
        r = resistance_direct(n).ohms
        agree = n == 0 or (resistance_via_roman(n).ohms == r == sum(level_resistance(n, i) for i in range(n)))
        print(f"{n:>4}  {str(r):>24}  {float(r):>12.8f}  {float(n * r):>8.5f}  {agree}")


if __name__ == "__main__":
    main()
