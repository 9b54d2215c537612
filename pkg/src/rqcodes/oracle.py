"""Brute-force referee for the code machinery.

Nothing here goes through the constraint solver in :mod:`codes`: duals come
from scanning all of R^n with table lookups, distances from summing the Lee
table over every codeword, and the Gray checks work on explicit bit tuples.

Two layouts of the Gray image are in play. ``ring.gray_map`` emits
consecutive triples (a_i, a_i+c_i, b_i); the block view used by ``tau_map``
is (a_0..a_{n-1} | (a+c)_0.. | b_0..). Triple position 3i+j is block position
j*n+i.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from . import kernels, ring
from .codes import CodeBasis, DualBasis, R, shift
from .linalg2 import in_span, rref

__all__ = [
    "MAX_SCAN_N",
    "triple_to_block",
    "block_to_triple",
    "tau_map",
    "exhaustive_dual",
    "exhaustive_min_lee",
    "check_shift_commutation",
    "check_quasi_cyclic",
    "check_gray_self_orthogonal",
    "is_self_orthogonal",
]

MAX_SCAN_N = 7


def triple_to_block(word: Sequence[int]) -> tuple[int, ...]:
    if len(word) % 3:
        raise ValueError("word length must be a multiple of 3")
    n = len(word) // 3
    return tuple(word[3 * i + j] for j in range(3) for i in range(n))


def block_to_triple(word: Sequence[int]) -> tuple[int, ...]:
    if len(word) % 3:
        raise ValueError("word length must be a multiple of 3")
    n = len(word) // 3
    return tuple(word[j * n + i] for i in range(n) for j in range(3))


def tau_map(word: Sequence[int]) -> tuple[int, ...]:
    """Cyclically shift each of the three n-blocks right by one."""
    if len(word) % 3:
        raise ValueError("word length must be a multiple of 3")
    n = len(word) // 3
    out = []
    for j in range(3):
        out.extend(shift(word[j * n : (j + 1) * n]))
    return tuple(out)


def _natural_pack(vec: Sequence[int]) -> int:
    # 3 bits per position, element code bits in order, position i at bits 3i..3i+2
    out = 0
    for i, x in enumerate(vec):
        out |= int(x) << (3 * i)
    return out


def _natural_unpack(v: int, n: int) -> tuple[int, ...]:
    return tuple((v >> (3 * i)) & 7 for i in range(n))


def _subspace_basis_from_sorted(elements: np.ndarray) -> list[int]:
    # For a subspace listed in increasing order, the element at index 2^k is
    # the k-th row of its reduced basis (pivots = leading bits).
    size = len(elements)
    if size & (size - 1):
        raise AssertionError(f"scanned set of size {size} is not a subspace")
    return [int(elements[1 << k]) for k in range(size.bit_length() - 1)]


def exhaustive_dual(B: CodeBasis) -> DualBasis:
    """Every x in R^n with x.b = 0 for all basis vectors b, by full scan."""
    if B.ring is not R:
        raise ValueError("exhaustive_dual works over R only")
    n = B.n
    if n > MAX_SCAN_N:
        raise ValueError(f"n={n} too large for a full scan of R^n (max {MAX_SCAN_N})")
    basis = B.vectors()
    if 3 * len(basis) > 64:
        raise ValueError("too many basis vectors for a 64-bit syndrome")
    mul = ring.R_MUL
    # column for input bit (i, k): the 3-bit products unit_k * b_i, one slot per b
    columns = []
    for i in range(n):
        for k in range(3):
            col = 0
            for s, b in enumerate(basis):
                col |= mul[1 << k][b[i]] << (3 * s)
            columns.append(col)
    found = kernels.zero_syndrome_scan(columns)
    vectors = [_natural_unpack(v, n) for v in _subspace_basis_from_sorted(found)]
    return DualBasis(n, CodeBasis.from_vectors(n, vectors).rows, canonical=True)


def _lee_weights(B: CodeBasis) -> np.ndarray:
    # Lee weight of every codeword, summed per position from the Lee table
    if B.ring is not R:
        raise ValueError("Lee enumeration works over R only")
    basis = B.vectors()
    if len(basis) > 24 or 3 * B.n > 63:
        raise ValueError("code too large for exhaustive enumeration")
    words = np.zeros(1, dtype=np.uint64)
    for v in basis:
        words = np.concatenate([words, words ^ np.uint64(_natural_pack(v))])
    lee = np.asarray(ring.LEE, dtype=np.int64)
    weight = np.zeros(len(words), dtype=np.int64)
    for i in range(B.n):
        weight += lee[((words >> np.uint64(3 * i)) & np.uint64(7)).astype(np.int64)]
    return weight


def exhaustive_min_lee(B: CodeBasis) -> int:
    """Minimum Lee weight over all nonzero codewords, summed from the Lee table."""
    if not B.rows:
        raise ValueError("the zero code has no minimum distance")
    return int(_lee_weights(B)[1:].min())


def lee_weight_distribution(B: CodeBasis) -> list[int]:
    """Number of codewords of each Lee weight 0..3n."""
    return np.bincount(_lee_weights(B), minlength=3 * B.n + 1).tolist()


def gray_weight_distribution(B: CodeBasis) -> list[int]:
    """Number of Gray-image codewords of each Hamming weight 0..3n."""
    words = [0]
    for v in _gray_block_ints(B):
        words += [w ^ v for w in words]
    counts = [0] * (3 * B.n + 1)
    for w in words:
        counts[w.bit_count()] += 1
    return counts


def check_shift_commutation(v: Sequence) -> bool:
    """Gray image of the shifted vector equals tau of the Gray image (block view)."""
    lhs = triple_to_block(ring.gray_map(shift(v)))
    rhs = tau_map(triple_to_block(ring.gray_map(v)))
    return lhs == rhs


def _bits_to_int(bits: Sequence[int]) -> int:
    out = 0
    for j, b in enumerate(bits):
        out |= b << j
    return out


def _gray_block_ints(B: CodeBasis) -> list[int]:
    return [_bits_to_int(triple_to_block(ring.gray_map(v))) for v in B.vectors()]


def check_quasi_cyclic(B: CodeBasis) -> bool:
    """The Gray image span is closed under tau (quasi-cyclic of index 3)."""
    span = rref(_gray_block_ints(B))
    for v in B.vectors():
        image = _bits_to_int(tau_map(triple_to_block(ring.gray_map(v))))
        if not in_span(span, image):
            return False
    return True


def is_self_orthogonal(B: CodeBasis) -> bool:
    vecs = B.vectors()
    return all(ring.inner(x, y).code == 0 for x in vecs for y in vecs)


def check_gray_self_orthogonal(B: CodeBasis) -> bool:
    """For a self-orthogonal code over R, its Gray image is self-orthogonal over F2."""
    if not is_self_orthogonal(B):
        raise ValueError("code is not self-orthogonal over R")
    imgs = [ring.gray_map(v) for v in B.vectors()]
    return all(sum(a & b for a, b in zip(x, y)) % 2 == 0 for x in imgs for y in imgs)
