"""numpy implementations of the enumeration kernels (fallback when the
compiled extension is unavailable). Same signatures as ``_ckernels``."""

from __future__ import annotations

import numpy as np

_LOW_BITS = 14


def _span_table(rows: np.ndarray) -> np.ndarray:
    # table[i] = XOR of rows selected by the bits of i
    table = np.zeros((1, rows.shape[1]), dtype=np.uint64)
    for r in rows:
        table = np.concatenate([table, table ^ r])
    return table


def min_weight_span(rows) -> int:
    rows = np.ascontiguousarray(rows, dtype=np.uint64)
    m = rows.shape[0]
    if m == 0:
        return -1
    if m > 62:
        raise ValueError("too many rows for exhaustive enumeration")
    low = min(m, _LOW_BITS)
    table = _span_table(rows[:low])
    weights = np.bitwise_count(table).sum(axis=1, dtype=np.int64)
    best = int(weights[1:].min()) if len(weights) > 1 else 1 << 30
    high = rows[low:]
    cur = np.zeros(rows.shape[1], dtype=np.uint64)
    for i in range(1, 1 << len(high)):
        if best <= 1:
            break
        cur ^= high[(i & -i).bit_length() - 1]
        w = int(np.bitwise_count(table ^ cur).sum(axis=1, dtype=np.int64).min())
        best = min(best, w)
    return best


def min_weight_combos(rows, t: int) -> int:
    rows = np.ascontiguousarray(rows, dtype=np.uint64)
    m = rows.shape[0]
    if m == 0:
        return -1
    best = 1 << 30

    def scan(prefix: np.ndarray, start: int, depth: int) -> None:
        nonlocal best
        block = prefix ^ rows[start:]
        w = np.bitwise_count(block).sum(axis=1, dtype=np.int64)
        if len(w):
            best = min(best, int(w.min()))
        if depth < t:
            for r in range(start, m - 1):
                scan(prefix ^ rows[r], r + 1, depth + 1)

    scan(np.zeros(rows.shape[1], dtype=np.uint64), 0, 1)
    return best


def zero_syndrome_scan(columns) -> np.ndarray:
    columns = np.asarray(columns, dtype=np.uint64)
    syn = np.zeros(1, dtype=np.uint64)
    for c in columns:
        syn = np.concatenate([syn, syn ^ c])
    return np.flatnonzero(syn == 0).astype(np.uint64)
