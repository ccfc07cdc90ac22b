#!/usr/bin/env python3
"""Exhaustively tabulate optimal bisections for small (d, m) instances.

For each dimension d and hop count m within the brute-force budget, print
the best achievable normalized bisection and one optimal hop set.  The
first d hops are pinned to the hypercube basis (every spanning hop set is
isomorphic to such a set).
"""
from __future__ import annotations

import sys

from longhop import gf2
from longhop.optimize import brute_force_search


def main() -> int:
    print(f"{'d':>2} {'m':>2} {'b_opt':>5} {'evaluated':>9}  hops")
    for d in range(2, 6):
        for m in range(d, d + 4):
            if m >= (1 << d):
                continue
            report = brute_force_search(d, m)
            hops = ",".join(gf2.word_to_text(h, d) for h in report.best.hops)
            print(f"{d:>2} {m:>2} {report.best_b:>5} {report.evaluated:>9}  {hops}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
