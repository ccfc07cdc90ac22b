#!/usr/bin/env python3
"""Print the topology-family cost comparison at the reference design point.

Target: P = 131072 non-oversubscribed ports from radix-64 switches, with
the long-hop network built from a [48, 13] distance-16 code.  Pass a
generator-matrix file to also fill the LH hop-count columns from an
actual breadth-first scan.

Usage: python3 scripts/reproduce_comparison.py [lh_generator_file]
"""
from __future__ import annotations

import sys

from longhop import codes
from longhop.compare import compare, render_text

PORTS = 131072
RADIX = 64
LH_TRIPLE = (13, 48, 16)


def main() -> int:
    if len(sys.argv) > 1:
        with open(sys.argv[1], encoding="utf-8") as fh:
            lh = codes.parse_generator(fh.read())
    else:
        lh = LH_TRIPLE
    rows = compare(PORTS, RADIX, lh, ft_levels=4)
    sys.stdout.write(f"target: ports={PORTS} radix={RADIX} oversubscription=1\n")
    sys.stdout.write(render_text(rows))
    return 0


if __name__ == "__main__":
    sys.exit(main())
