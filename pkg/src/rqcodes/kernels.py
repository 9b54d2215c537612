"""Enumeration kernels, compiled when available.

The Cython extension ``_ckernels`` is used if it imports; otherwise the
numpy fallback in ``_pykernels`` is. Set ``RQCODES_PURE=1`` to force the
fallback. ``BACKEND`` names the active implementation.
"""

from __future__ import annotations

import os

import numpy as np

from . import _pykernels

if os.environ.get("RQCODES_PURE"):
    _impl = _pykernels
    BACKEND = "python"
else:
    try:
        from . import _ckernels as _impl

        BACKEND = "cython"
    except ImportError:
        _impl = _pykernels
        BACKEND = "python"


def pack_words(vectors, nbits: int) -> np.ndarray:
    """Split Python-int bit vectors into rows of little-endian uint64 words."""
    nwords = max(1, -(-nbits // 64))
    out = np.zeros((len(vectors), nwords), dtype=np.uint64)
    mask = (1 << 64) - 1
    for i, v in enumerate(vectors):
        for k in range(nwords):
            out[i, k] = (v >> (64 * k)) & mask
    return out


def min_weight_span(vectors, nbits: int, impl=None) -> int:
    """Minimum Hamming weight over the nonzero span of independent vectors."""
    impl = impl or _impl
    return int(impl.min_weight_span(pack_words(vectors, nbits)))


def min_weight_combos(vectors, nbits: int, t: int, impl=None) -> int:
    """Minimum weight over XORs of at most ``t`` of the vectors."""
    impl = impl or _impl
    return int(impl.min_weight_combos(pack_words(vectors, nbits), t))


def zero_syndrome_scan(columns, impl=None) -> np.ndarray:
    """Sorted x whose bits select columns XOR-ing to zero (x over all 2^len)."""
    impl = impl or _impl
    return impl.zero_syndrome_scan(np.asarray(columns, dtype=np.uint64))
