#!/usr/bin/env python3
"""Exhaustive bound sweep over all labeled connected graphs up to --n-max.

For every connected graph and every k up to --k-max this checks, unless the
graph is one of the two excluded shapes:

  * the exact solver stays within floor(n/(k+1)),
  * the constructive routine returns a verified set within the same floor,
  * solver and subset-scan oracle agree (for n up to --oracle-cap).

The default --n-max of 7 is the opt-in extended run (1,866,256 connected
graphs per k); n <= 6 finishes in seconds.  Progress goes to stderr, one summary line
per (n, k) goes to stdout, and the exit status is nonzero if any check fails.
"""

from __future__ import annotations

import argparse
import sys
import time

from cliqueiso import (
    ExceptionKind,
    bounded_isolating_set,
    classify_exception,
    enumerate_connected,
    format_edge_list,
    iota_oracle,
    iota_solve,
    verify_isolating,
)


def sweep(n_max: int, k_max: int, oracle_cap: int, progress_every: int) -> int:
    failures = 0
    t_start = time.perf_counter()
    for n in range(1, n_max + 1):
        stats = {k: {"graphs": 0, "exceptional": 0, "max_iota": 0} for k in range(1, k_max + 1)}
        seen = 0
        for g in enumerate_connected(n, cap=max(n_max, 8)):
            seen += 1
            if progress_every and seen % progress_every == 0:
                rate = seen / (time.perf_counter() - t_start)
                print(f"  n={n}: {seen} graphs ({rate:,.0f}/s)", file=sys.stderr)
            for k in range(1, k_max + 1):
                st = stats[k]
                st["graphs"] += 1
                if classify_exception(g, k) is not ExceptionKind.NONE:
                    st["exceptional"] += 1
                    continue
                bound = n // (k + 1)
                problems = []
                exact = iota_solve(g, k).iota
                st["max_iota"] = max(st["max_iota"], exact)
                if exact > bound:
                    problems.append(f"iota {exact} > floor {bound}")
                res = bounded_isolating_set(g, k)
                if not verify_isolating(g, k, res.set).valid:
                    problems.append("constructed set does not isolate")
                if len(res.set) > bound:
                    problems.append(f"constructed size {len(res.set)} > floor {bound}")
                if n <= oracle_cap and iota_oracle(g, k, cap=oracle_cap).iota != exact:
                    problems.append("solver disagrees with oracle")
                if problems:
                    failures += 1
                    print(f"FAIL n={n} k={k}: {'; '.join(problems)}")
                    print(format_edge_list(g), end="")
        for k in range(1, k_max + 1):
            st = stats[k]
            print(
                f"n={n} k={k}: graphs={st['graphs']} exceptional={st['exceptional']} "
                f"max_iota={st['max_iota']} floor={n // (k + 1)}"
            )
    elapsed = time.perf_counter() - t_start
    verdict = "FAIL" if failures else "PASS"
    print(f"{verdict}: {failures} failures in {elapsed:.1f}s")
    return 1 if failures else 0


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n-max", type=int, default=7, help="largest vertex count (default 7)")
    parser.add_argument("--k-max", type=int, default=3, help="largest clique size (default 3)")
    parser.add_argument(
        "--oracle-cap", type=int, default=20,
        help="cross-check against the subset-scan oracle up to this n (default 20)",
    )
    parser.add_argument(
        "--progress-every", type=int, default=100_000,
        help="stderr progress interval in graphs; 0 disables (default 100000)",
    )
    args = parser.parse_args()
    return sweep(args.n_max, args.k_max, args.oracle_cap, args.progress_every)


if __name__ == "__main__":
    sys.exit(main())
