#!/usr/bin/env python3
"""Print the sharpness grid: exact iota of the extremal family versus the
floor(n/(k+1)) ceiling it is designed to attain.

Each cell shows the solved minimum for the extremal graph on n vertices with
block size k; a trailing '!' would mark a cell where the value misses the
floor (none exist if the construction and solver are correct).
"""

from __future__ import annotations

import argparse
import sys

from cliqueiso import build_extremal, iota_solve


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n-min", type=int, default=3)
    parser.add_argument("--n-max", type=int, default=18)
    parser.add_argument("--k-max", type=int, default=4)
    args = parser.parse_args()

    ks = list(range(1, args.k_max + 1))
    header = ["  n"] + [f"k={k}" for k in ks]
    print(" ".join(f"{h:>5}" for h in header))
    mismatches = 0
    for n in range(args.n_min, args.n_max + 1):
        cells = [f"{n:>5}"]
        for k in ks:
            got = iota_solve(build_extremal(n, k), k).iota
            floor = n // (k + 1)
            mark = "" if got == floor else "!"
            mismatches += got != floor
            cells.append(f"{got}{mark:>1}".rjust(5))
        print(" ".join(cells))
    if mismatches:
        print(f"{mismatches} cells miss the floor", file=sys.stderr)
        return 1
    print(f"all cells equal floor(n/(k+1)) for {args.n_min} <= n <= {args.n_max}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
