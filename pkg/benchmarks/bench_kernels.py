"""Compare the compiled and numpy kernel backends on the workloads they serve.

    python benchmarks/bench_kernels.py [--repeat 3]
"""

from __future__ import annotations

import argparse
import time

from rqcodes import _pykernels, kernels, oracle
from rqcodes.codes import CodeSpec, span_basis
from rqcodes.gf2poly import parse_poly

try:
    from rqcodes import _ckernels
except ImportError:
    _ckernels = None


def _timeit(fn, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t)
    return best, result


def workloads():
    # exhaustive distance: a 24-dimensional code over R of length 15 (45 bits)
    s15 = CodeSpec(15, parse_poly("x^3+1"), parse_poly("x^3+1"), parse_poly("x^15+1"))
    c15 = span_basis(s15)
    yield f"min_weight_span m={len(c15)} bits={c15.nbits}", lambda impl: kernels.min_weight_span(
        c15.rows, c15.nbits, impl
    )
    # bounded distance on the whole space at n=31 (93 rows)
    c31 = span_basis(CodeSpec(31, parse_poly("1"), parse_poly("1"), parse_poly("1")))
    yield f"min_weight_combos m={len(c31)} t=3", lambda impl: kernels.min_weight_combos(
        c31.rows, c31.nbits, 3, impl
    )
    # oracle dual scan over all of R^7 for a 10-dimensional code
    c7 = span_basis(CodeSpec(7, parse_poly("x^4+x^2+x+1"), parse_poly("x^3+x^2+1"), parse_poly("x^3+x+1")))
    basis = c7.vectors()
    columns = []
    for i in range(7):
        for k in range(3):
            col = 0
            for j, b in enumerate(basis):
                col |= oracle.ring.R_MUL[1 << k][b[i]] << (3 * j)
            columns.append(col)
    yield "zero_syndrome_scan 2^21", lambda impl: len(kernels.zero_syndrome_scan(columns, impl))


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    backends = [("python", _pykernels)]
    if _ckernels is not None:
        backends.insert(0, ("cython", _ckernels))
    print(f"active backend: {kernels.BACKEND}")
    print(f"{'workload':<40} " + " ".join(f"{name:>12}" for name, _ in backends) + "   speedup")
    for label, fn in workloads():
        times, results = [], []
        for _, impl in backends:
            t, r = _timeit(lambda: fn(impl), args.repeat)
            times.append(t)
            results.append(r)
        if len(set(results)) != 1:
            raise SystemExit(f"backends disagree on {label}: {results}")
        speed = f"{times[-1] / times[0]:8.1f}x" if len(times) == 2 else ""
        print(f"{label:<40} " + " ".join(f"{t * 1e3:10.1f}ms" for t in times) + f"  {speed}")


if __name__ == "__main__":
    main()
