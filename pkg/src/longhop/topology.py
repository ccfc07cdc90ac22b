"""XOR Cayley topologies over d-bit node labels.

Nodes are the integers 0..N-1 with N = 2**d.  Port s (1-based) at node x
leads to x XOR hops[s-1].  Adjacency is never materialized as a matrix;
neighbors are computed by XOR on demand, which keeps N = 2**24 feasible.

The normalized bisection b of such a graph is the minimum over r > 0 of
the cut C_r = sum_s parity(r & h_s); the corresponding partition puts
node x on side parity(r & x).  Bisection in links is b * N/2.
"""
from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from . import gf2

__all__ = [
    "CayleyTopology",
    "SpectrumResult",
    "DistanceSummary",
    "build",
    "cut_walsh",
    "bisection_scan",
    "bisection_fwht",
    "bisection_bruteforce",
    "hop_distances",
    "distances",
    "cluster",
    "parse_hopset",
    "emit_hopset",
    "parse_edge_list",
    "DEFAULT_MAX_D",
    "HARD_MAX_D",
]

DEFAULT_MAX_D = 24   # full-spectrum scans above this are refused unless overridden
HARD_MAX_D = 32      # words are 32-bit at most

THREADS_ENV = "LONGHOP_THREADS"


@dataclass(frozen=True)
class CayleyTopology:
    """A validated hop set; the graph it generates is implicit."""

    d: int
    hops: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 1 <= self.d <= HARD_MAX_D:
            raise ValueError(f"dimension must be in 1..{HARD_MAX_D}, got {self.d}")
        if not self.hops:
            raise ValueError("hop set is empty")
        seen = set()
        for s, h in enumerate(self.hops, 1):
            if h == 0:
                raise ValueError(f"hop {s} is zero (would be a self-loop)")
            if h < 0 or h >> self.d:
                raise ValueError(f"hop {s} does not fit in {self.d} bits")
            if h in seen:
                raise ValueError(f"hop {s} duplicates an earlier hop (multi-edge)")
            seen.add(h)
        if gf2.rank(self.hops) != self.d:
            raise ValueError(
                "hops do not span the full dimension (graph would be disconnected)"
            )

    @property
    def N(self) -> int:
        return 1 << self.d

    @property
    def m(self) -> int:
        return len(self.hops)

    def neighbors(self, x: int) -> list[tuple[int, int]]:
        """(port, neighbor) pairs of node x, in port order 1..m."""
        if not 0 <= x < self.N:
            raise ValueError(f"node {x} out of range 0..{self.N - 1}")
        return [(s, x ^ h) for s, h in enumerate(self.hops, 1)]

    def edges(self) -> Iterator[tuple[int, int]]:
        """All undirected edges, each once, as (u, v) with u < v."""
        for x in range(self.N):
            for h in self.hops:
                y = x ^ h
                if y > x:
                    yield (x, y)


def build(d: int, hops: Sequence[int]) -> CayleyTopology:
    """Validate and build a topology from a hop list."""
    return CayleyTopology(d=d, hops=tuple(int(h) for h in hops))


@dataclass(frozen=True, eq=False)
class SpectrumResult:
    """Full cut/eigenvalue spectrum of a topology.

    cuts[r] is the cut of the Walsh partition r in units of N/2;
    alphas[r] = m - 2*cuts[r] is the matching adjacency eigenvalue;
    b = min over r > 0 of cuts[r]; argmin_rs lists every minimizing r.
    """

    cuts: np.ndarray
    alphas: np.ndarray
    b: int
    argmin_rs: np.ndarray

    @property
    def N(self) -> int:
        return int(self.cuts.size)

    @property
    def links(self) -> int:
        """Bisection in links: b * N/2."""
        return self.b * (self.N // 2)


def cut_walsh(t: CayleyTopology, r: int) -> int:
    """Cut of the Walsh partition r, in units of N/2."""
    if not 0 <= r < t.N:
        raise ValueError(f"r={r} out of range 0..{t.N - 1}")
    return sum((r & h).bit_count() & 1 for h in t.hops)


def _check_cap(t: CayleyTopology, max_d: int) -> None:
    cap = min(max_d, HARD_MAX_D)
    if t.d > cap:
        raise ValueError(
            f"d={t.d} exceeds the full-spectrum cap {cap}; pass a larger max_d to override"
        )


def _parity_u32(a: np.ndarray) -> np.ndarray:
    """Elementwise parity of a uint32 array (folds bits, modifies a)."""
    a ^= a >> np.uint32(16)
    a ^= a >> np.uint32(8)
    a ^= a >> np.uint32(4)
    a ^= a >> np.uint32(2)
    a ^= a >> np.uint32(1)
    return a & np.uint32(1)


def _spectrum_from_cuts(cuts: np.ndarray, m: int, alphas: np.ndarray | None = None) -> SpectrumResult:
    if alphas is None:
        alphas = m - 2 * cuts
    b = int(cuts[1:].min())
    argmin = np.flatnonzero(cuts[1:] == b).astype(np.int64) + 1
    return SpectrumResult(cuts=cuts, alphas=alphas, b=b, argmin_rs=argmin)


def _scan_chunk(hops: tuple[int, ...], lo: int, hi: int) -> np.ndarray:
    r = np.arange(lo, hi, dtype=np.uint32)
    acc = np.zeros(hi - lo, dtype=np.int64)
    for h in hops:
        acc += _parity_u32(r & np.uint32(h))
    return acc


def bisection_scan(t: CayleyTopology, *, max_d: int = DEFAULT_MAX_D) -> SpectrumResult:
    """Exact bisection by direct evaluation of all N-1 Walsh cuts.

    O(N*m) bit work; the r-range is chunked and may be spread over the
    thread count named by the LONGHOP_THREADS environment variable.  The
    result is exact integer arithmetic either way.
    """
    _check_cap(t, max_d)
    N = t.N
    cuts = np.empty(N, dtype=np.int64)
    threads = int(os.environ.get(THREADS_ENV, "1") or "1")
    bounds = list(range(0, N, 1 << 20)) + [N]
    spans = [(lo, hi) for lo, hi in zip(bounds, bounds[1:]) if hi > lo]
    if threads > 1 and len(spans) > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=threads) as pool:
            for (lo, hi), chunk in zip(
                spans, pool.map(lambda s: _scan_chunk(t.hops, *s), spans)
            ):
                cuts[lo:hi] = chunk
    else:
        for lo, hi in spans:
            cuts[lo:hi] = _scan_chunk(t.hops, lo, hi)
    return _spectrum_from_cuts(cuts, t.m)


def bisection_fwht(t: CayleyTopology, *, max_d: int = DEFAULT_MAX_D) -> SpectrumResult:
    """Exact bisection via the fast Walsh-Hadamard transform, O(N log N).

    Transforms the hop indicator vector: the transform coefficient at r is
    the adjacency eigenvalue alpha_r, and cuts follow as (m - alpha_r)/2.
    Result is identical to bisection_scan.
    """
    _check_cap(t, max_d)
    f = np.zeros(t.N, dtype=np.int64)
    f[list(t.hops)] = 1
    alphas = gf2.fwht(f)
    cuts = (t.m - alphas) // 2
    return _spectrum_from_cuts(cuts, t.m, alphas=alphas)


def bisection_bruteforce(edges: Sequence[tuple[int, int]], n: int) -> int:
    """Minimum equipartition cut of an arbitrary small graph, in links.

    Enumerates all C(n, n/2)/2 equipartitions explicitly, so it serves as
    an independent oracle for any graph given as an edge list, not only
    Cayley graphs.  Refuses n > 20 or odd n.
    """
    if n < 2 or n % 2:
        raise ValueError(f"node count must be even and positive, got {n}")
    if n > 20:
        raise ValueError(f"n={n} too large for equipartition enumeration (max 20)")
    us, vs = [], []
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) out of node range")
        if u == v:
            raise ValueError(f"self-loop on node {u}")
        us.append(u)
        vs.append(v)
    if not us:
        return 0
    u_arr = np.array(us, dtype=np.uint32)
    v_arr = np.array(vs, dtype=np.uint32)
    # fix node 0 on one side: enumerates each equipartition exactly once
    half = n // 2
    masks = np.fromiter(
        (
            1 | sum(1 << i for i in combo)
            for combo in itertools.combinations(range(1, n), half - 1)
        ),
        dtype=np.uint32,
    )
    best = len(us) + 1
    step = 1 << 14
    for lo in range(0, masks.size, step):
        chunk = masks[lo : lo + step, None]
        crossing = ((chunk >> u_arr) ^ (chunk >> v_arr)) & np.uint32(1)
        best = min(best, int(crossing.sum(axis=1).min()))
    return best


def hop_distances(t: CayleyTopology) -> np.ndarray:
    """BFS hop distance from node 0 to every node (vector of length N)."""
    N = t.N
    hop_arr = np.array(t.hops, dtype=np.int64)
    dist = np.full(N, -1, dtype=np.int64)
    dist[0] = 0
    frontier = np.array([0], dtype=np.int64)
    level = 0
    while frontier.size:
        level += 1
        cand = np.unique((frontier[:, None] ^ hop_arr).ravel())
        new = cand[dist[cand] < 0]
        dist[new] = level
        frontier = new
    return dist


@dataclass(frozen=True)
class DistanceSummary:
    diameter: int
    mean: float              # over the N-1 destinations other than the source
    histogram: tuple[int, ...]  # histogram[k] = number of nodes at distance k


def distances(t: CayleyTopology) -> DistanceSummary:
    """Diameter, average hop count and distance histogram from node 0.

    Vertex symmetry makes the single-source view representative of every
    node.  The average excludes the source itself (N-1 destinations).
    """
    dist = hop_distances(t)
    return DistanceSummary(
        diameter=int(dist.max()),
        mean=float(dist.sum()) / (t.N - 1),
        histogram=tuple(int(c) for c in np.bincount(dist)),
    )


def cluster(t: CayleyTopology, levels: int, *, max_d: int = DEFAULT_MAX_D) -> np.ndarray:
    """Recursive equal-halves clustering along minimum Walsh cuts.

    Each level splits every current cell in half along a Walsh partition:
    the smallest index r, linearly independent of the indices already
    used, that minimizes the number of edges crossing the split inside
    the current cells.  Because the cells are cosets of one subspace, that
    count is proportional to the cut restricted to hops that stay inside
    cells, which is what is minimized here.

    Returns an array of 2**levels equally populated labels; the level-1
    split is the label's most significant bit.
    """
    if not 0 <= levels <= t.d:
        raise ValueError(f"levels must be in 0..{t.d}, got {levels}")
    _check_cap(t, max_d)
    N = t.N
    labels = np.zeros(N, dtype=np.int64)
    if levels == 0:
        return labels
    used: list[int] = []
    span = {0}
    sentinel = t.m * N + 1
    for _ in range(levels):
        intra = [
            h for h in t.hops if all(((h & u).bit_count() & 1) == 0 for u in used)
        ]
        cross = np.zeros(N, dtype=np.int64)
        r_idx = np.arange(N, dtype=np.uint32)
        for h in intra:
            cross += _parity_u32(r_idx & np.uint32(h))
        cross[list(span)] = sentinel  # r must be independent of earlier splits
        r_star = int(np.argmin(cross))  # argmin takes the smallest such r
        used.append(r_star)
        span |= {s ^ r_star for s in span}
    x = np.arange(N, dtype=np.uint32)
    for r in used:
        bit = _parity_u32(x & np.uint32(r))
        labels = (labels << 1) | bit.astype(np.int64)
    return labels


def parse_hopset(text: str) -> CayleyTopology:
    """Parse a hop-set file: '#' comments, a "d=<int>" line, then one hop
    per line as a d-character binary string written MSB first.
    """
    d: int | None = None
    hops: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if d is None:
            if not line.startswith("d="):
                raise ValueError(f"line {lineno}: expected 'd=<int>' header, got {line!r}")
            try:
                d = int(line[2:])
            except ValueError:
                raise ValueError(f"line {lineno}: invalid dimension {line[2:]!r}") from None
            continue
        if len(line) != d:
            raise ValueError(
                f"line {lineno}: hop must be exactly {d} binary digits, got {line!r}"
            )
        try:
            hops.append(gf2.word_from_text(line))
        except ValueError as exc:
            raise ValueError(f"line {lineno}: {exc}") from None
    if d is None:
        raise ValueError("missing 'd=<int>' header line")
    try:
        return build(d, hops)
    except ValueError as exc:
        raise ValueError(f"invalid hop set: {exc}") from exc


def emit_hopset(t: CayleyTopology) -> str:
    lines = [f"d={t.d}"]
    lines += [gf2.word_to_text(h, t.d) for h in t.hops]
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> tuple[list[tuple[int, int]], int]:
    """Parse "u v" lines (0-based ids); returns (edges, node_count)."""
    edges: list[tuple[int, int]] = []
    max_node = -1
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ValueError(f"line {lineno}: non-integer node id in {line!r}") from None
        if u < 0 or v < 0:
            raise ValueError(f"line {lineno}: negative node id")
        edges.append((u, v))
        max_node = max(max_node, u, v)
    if not edges:
        raise ValueError("no edges found")
    return edges, max_node + 1
