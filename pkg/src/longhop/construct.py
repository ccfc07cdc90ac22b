"""Translation between binary block codes and XOR Cayley topologies.

An [n, k] generator matrix, read column by column, is a hop list: column s
becomes the d-bit hop h_s (d = k, m = n), with row 1 supplying bit 2**0.
Under this transposition the code's minimum distance equals the network's
normalized bisection, so published optimal codes become maximum-bisection
topologies directly.
"""
from __future__ import annotations

from . import gf2
from .codes import GeneratorMatrix
from .topology import CayleyTopology

__all__ = ["code_to_network", "network_to_code", "normalize_basis"]


def code_to_network(g: GeneratorMatrix) -> CayleyTopology:
    """Build the topology whose hops are the columns of g.

    The resulting graph has 2**k switches of topological degree n and
    bisection min_distance(g) * N/2 links.  Codes with repeated or zero
    columns (e.g. repetition codes, which correspond to trunked links)
    are rejected because they would need multi-edges or self-loops.
    """
    hops = []
    for s in range(g.n):
        h = 0
        for i, row in enumerate(g.rows):
            h |= ((row >> s) & 1) << i
        hops.append(h)
    return CayleyTopology(d=g.k, hops=tuple(hops))


def network_to_code(t: CayleyTopology) -> GeneratorMatrix:
    """Inverse of code_to_network; hops become columns in port order."""
    rows = []
    for i in range(t.d):
        row = 0
        for s, h in enumerate(t.hops):
            row |= ((h >> i) & 1) << s
        rows.append(row)
    return GeneratorMatrix(k=t.d, n=t.m, rows=tuple(rows))


def normalize_basis(t: CayleyTopology) -> CayleyTopology:
    """Rewrite the hop set so it contains the hypercube basis {2**s}.

    Applies an invertible linear map to every hop (a column-space
    diagonalization of the hop bit matrix), which is a graph isomorphism:
    the multiset of Walsh cuts, and hence the bisection, is unchanged.
    """
    new_hops, ok = gf2.column_diagonalize(t.hops, t.d)
    if not ok:
        raise ValueError("hop set does not span the full dimension")
    return CayleyTopology(d=t.d, hops=tuple(new_hops))
