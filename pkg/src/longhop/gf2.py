"""Bit-level GF(2) primitives shared by the rest of the package.

A d-bit word is a plain Python int in [0, 2**d); bit mu is the
coefficient of 2**mu.  Rendered as text, words are written most
significant bit first.
"""
from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "parity",
    "weight",
    "walsh",
    "fwht",
    "rank",
    "column_diagonalize",
    "word_from_text",
    "word_to_text",
]


def parity(x: int) -> int:
    """XOR of all bits of x: 1 iff an odd number of bits are set."""
    return x.bit_count() & 1


def weight(x: int) -> int:
    """Hamming weight (number of set bits)."""
    return x.bit_count()


def walsh(r: int, x: int) -> int:
    """Binary Walsh function: parity(r AND x)."""
    return (r & x).bit_count() & 1


def fwht(values: Sequence[int] | np.ndarray) -> np.ndarray:
    """Unnormalized Walsh-Hadamard transform of a length-2**d integer vector.

    Returns w with w[r] = sum_x values[x] * (-1)**parity(r & x), computed by
    the in-place butterfly in exact int64 arithmetic, O(N log N).  Applying
    it twice multiplies the input by N.
    """
    a = np.array(values, dtype=np.int64)
    n = a.size
    if n == 0 or n & (n - 1):
        raise ValueError(f"fwht length must be a power of two, got {n}")
    h = 1
    while h < n:
        b = a.reshape(-1, 2 * h)
        lo = b[:, :h].copy()
        hi = b[:, h:].copy()
        b[:, :h] = lo + hi
        b[:, h:] = lo - hi
        h *= 2
    return a


def rank(rows: Iterable[int]) -> int:
    """GF(2) rank of a collection of words (each row an int bitset)."""
    by_msb: dict[int, int] = {}
    for row in rows:
        row = int(row)
        while row:
            msb = row.bit_length() - 1
            if msb not in by_msb:
                by_msb[msb] = row
                break
            row ^= by_msb[msb]
    return len(by_msb)


def column_diagonalize(rows: Sequence[int], width: int) -> tuple[list[int], bool]:
    """Column-reduce a bit matrix so d of its rows become the unit words.

    `rows` holds m words of `width` bits each.  Only invertible column
    operations are applied (bit-position swaps and XORing one bit position
    into another), so the set of all 2**width GF(2) column combinations is
    preserved and row order is untouched.  Pivots are taken from the first
    row, in ascending index order, that has a usable nonzero bit.

    Returns (new_rows, ok); ok is False when the columns do not have full
    rank `width`, in which case new_rows holds the partial reduction.
    """
    work = [int(r) for r in rows]
    m = len(work)
    col = 0
    for row_idx in range(m):
        if col == width:
            break
        rest = work[row_idx] >> col
        if rest == 0:
            continue
        j = col + ((rest & -rest).bit_length() - 1)
        if j != col:
            for q in range(m):
                v = work[q]
                bc = (v >> col) & 1
                bj = (v >> j) & 1
                if bc != bj:
                    work[q] = v ^ (1 << col) ^ (1 << j)
        # clear every other set bit of the pivot row via column additions
        mask = work[row_idx] & ~(1 << col)
        while mask:
            j2 = (mask & -mask).bit_length() - 1
            mask &= mask - 1
            for q in range(m):
                work[q] ^= ((work[q] >> col) & 1) << j2
        col += 1
    return work, col == width


def word_from_text(text: str) -> int:
    """Parse a binary string written most significant bit first."""
    if not text or set(text) - {"0", "1"}:
        raise ValueError(f"not a binary word: {text!r}")
    return int(text, 2)


def word_to_text(value: int, width: int) -> str:
    """Render a word as `width` binary digits, most significant bit first."""
    if value < 0 or value >> width:
        raise ValueError(f"value {value} does not fit in {width} bits")
    return format(value, f"0{width}b")
