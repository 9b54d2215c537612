"""Row reduction over GF(2) with vectors packed into Python ints.

The pivot of a row is its highest set bit. A reduced basis is returned
sorted by pivot, highest first, which makes it canonical for its span.
"""

from __future__ import annotations

from typing import Iterable


def rref(vectors: Iterable[int]) -> tuple[int, ...]:
    """Canonical reduced echelon basis of the span of ``vectors``."""
    pivots: dict[int, int] = {}
    for v in vectors:
        while v:
            p = v.bit_length() - 1
            row = pivots.get(p)
            if row is None:
                pivots[p] = v
                break
            v ^= row
    # lower rows are already reduced when a row is cleaned, so XORing one in
    # flips only its own pivot among the pivot columns
    order = sorted(pivots)
    for i, p in enumerate(order):
        row = pivots[p]
        for q in order[:i]:
            if (row >> q) & 1:
                row ^= pivots[q]
        pivots[p] = row
    return tuple(pivots[p] for p in sorted(pivots, reverse=True))


def reduce_vec(basis: tuple[int, ...], v: int) -> int:
    """Residue of ``v`` after eliminating the pivots of a reduced basis."""
    for row in basis:
        if (v >> (row.bit_length() - 1)) & 1:
            v ^= row
    return v


def in_span(basis: tuple[int, ...], v: int) -> bool:
    return reduce_vec(basis, v) == 0


def nullspace(rows: Iterable[int], nbits: int) -> tuple[int, ...]:
    """Basis of {x : popcount(r & x) even for every r}, canonical form."""
    red = rref(rows)
    pivot_bits = {r.bit_length() - 1: r for r in red}
    out = []
    for f in range(nbits):
        if f in pivot_bits:
            continue
        x = 1 << f
        for p, r in pivot_bits.items():
            if (r >> f) & 1:
                x |= 1 << p
        out.append(x)
    return rref(out)


def parity(x: int) -> int:
    return x.bit_count() & 1
