"""Search for bisection-maximizing hop sets.

Exhaustive search is exact but exponential in m - d, so it is budgeted to
desk-scale instances; greedy hop replacement scales further but only
guarantees a local optimum.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import gf2
from .topology import CayleyTopology, bisection_fwht

__all__ = ["SearchReport", "brute_force_search", "greedy_improve"]


@dataclass(frozen=True)
class SearchReport:
    best: CayleyTopology
    best_b: int
    evaluated: int
    method: str
    rounds: int = 0


def _score(t: CayleyTopology) -> int:
    return bisection_fwht(t).b


def brute_force_search(
    d: int,
    m: int,
    *,
    max_extra: int = 3,
    max_d: int = 5,
) -> SearchReport:
    """Exact optimum over all hop sets with the first d hops pinned to the
    hypercube basis (any spanning hop set is isomorphic to one of these, so
    nothing is lost).  The remaining m - d hops run over ascending,
    deduplicated nonzero words.

    Refuses instances beyond the budget (default m - d <= 3, d <= 5) rather
    than silently truncating the search.
    """
    if m < d:
        raise ValueError(f"m={m} must be at least d={d}")
    if m - d > max_extra or d > max_d:
        raise ValueError(
            f"brute force budget exceeded: need m-d<={max_extra} and d<={max_d}, "
            f"got (d={d}, m={m})"
        )
    basis = tuple(1 << i for i in range(d))
    pool = [w for w in range(1, 1 << d) if w not in basis]
    if m - d > len(pool):
        raise ValueError(f"not enough distinct nonzero words for m={m} at d={d}")
    best_t = None
    best_b = -1
    evaluated = 0
    for extras in itertools.combinations(pool, m - d):
        t = CayleyTopology(d=d, hops=basis + extras)
        b = _score(t)
        evaluated += 1
        if b > best_b:
            best_b = b
            best_t = t
    assert best_t is not None
    return SearchReport(best=best_t, best_b=best_b, evaluated=evaluated, method="brute")


def greedy_improve(
    start: CayleyTopology,
    swap_width: int = 1,
    max_rounds: int = 100,
) -> SearchReport:
    """First-improvement greedy replacement of swap_width non-basis hops.

    Each round scans, in ascending position/word order, every replacement
    of swap_width non-basis hops by currently unused nonzero words, and
    accepts the first strict improvement in b (the scan order makes the
    accepted set the lexicographically lowest among first improvements).
    Stops at a local optimum or after max_rounds accepted swaps; b never
    decreases.
    """
    if swap_width not in (1, 2):
        raise ValueError(f"swap_width must be 1 or 2, got {swap_width}")
    d = start.d
    basis = {1 << i for i in range(d)}
    current = start.hops
    cache: dict[tuple[int, ...], int] = {}
    evaluated = 0

    def score(hops: tuple[int, ...]) -> int:
        nonlocal evaluated
        key = tuple(sorted(hops))
        if key not in cache:
            cache[key] = _score(CayleyTopology(d=d, hops=hops))
            evaluated += 1
        return cache[key]

    b = score(current)
    rounds = 0
    while rounds < max_rounds:
        positions = [i for i, h in enumerate(current) if h not in basis]
        improved = False
        for pos_combo in itertools.combinations(positions, swap_width):
            in_use = set(current)
            pool = [w for w in range(1, 1 << d) if w not in in_use]
            for repl in itertools.combinations(pool, swap_width):
                cand = list(current)
                for p, w in zip(pos_combo, repl):
                    cand[p] = w
                if gf2.rank(cand) != d:
                    continue
                cand_t = tuple(cand)
                if score(cand_t) > b:
                    current = cand_t
                    b = score(cand_t)
                    rounds += 1
                    improved = True
                    break
            if improved:
                break
        if not improved:
            break
    return SearchReport(
        best=CayleyTopology(d=d, hops=current),
        best_b=b,
        evaluated=evaluated,
        method="greedy",
        rounds=rounds,
    )
