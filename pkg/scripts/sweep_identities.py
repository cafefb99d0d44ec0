"""Sweep every identity over a square grid and print one summary line each."""
from __future__ import annotations

import argparse
import time

from romankit.coefficients import GAMMA, parse_scheme
from romankit.factorials import KNUTH, ROMAN, q_scheme
from romankit.identities import IDENTITIES, verify_grid

SCHEMES_FOR = {
    "complementation": [ROMAN, KNUTH, GAMMA, q_scheme(2)],
    "iterative": [ROMAN, KNUTH, GAMMA],
    "pascal": [ROMAN, KNUTH],
}


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--lo", type=int, default=-15)
    parser.add_argument("--hi", type=int, default=15)
    parser.add_argument("--scheme", default=None, help="restrict to one scheme")
    args = parser.parse_args()
    failed = 0
    for name in sorted(IDENTITIES):
        schemes = [parse_scheme(args.scheme)] if args.scheme else SCHEMES_FOR.get(name, [ROMAN])
        for scheme in schemes:
            start = time.perf_counter()
            r = verify_grid(name, (args.lo, args.hi), scheme)
            failed += r.failed
            print(f"{'PASS' if r.ok else 'FAIL'} {name:<24} {r.scheme:<8} applicable={r.applicable:<6} "
                  f"failed={r.failed:<4} {time.perf_counter() - start:.2f}s")
    raise SystemExit(1 if failed else 0)


if __name__ == "__main__":
    main()
