"""CSS quantum codes from dual-containing cyclic codes over R."""

from __future__ import annotations

import time
from dataclasses import dataclass

from .codes import (
    DEFAULT_BUDGET,
    CodeBasis,
    CodeSpec,
    ContainmentEvidence,
    InvariantError,
    binary_code,
    rw_code,
    is_dual_containing,
    min_lee_distance,
    span_basis,
    validate_spec,
)
from .gf2poly import divisors_xn1

__all__ = [
    "QuantumParams",
    "SearchRecord",
    "NotDualContaining",
    "css_params",
    "all_specs",
    "search_quantum",
    "DEFAULT_MAX_N",
]

DEFAULT_MAX_N = 63


class NotDualContaining(ValueError):
    """The CSS construction needs C^perp inside C."""


@dataclass(frozen=True)
class QuantumParams:
    length: int
    dimension: int
    distance: int
    exact: bool = True

    def __post_init__(self):
        if self.dimension < 0 or self.distance < 1:
            raise ValueError(f"invalid quantum parameters {self}")

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.length, self.dimension, self.distance)

    def __str__(self):
        d = self.distance if self.exact else f"<={self.distance}"
        return f"[[{self.length},{self.dimension},{d}]]"


def css_params(
    s: CodeSpec,
    budget: int = DEFAULT_BUDGET,
    *,
    code: CodeBasis | None = None,
    evidence: ContainmentEvidence | None = None,
) -> QuantumParams:
    """[[3n, 2 log2|C| - 3n, d_L(C)]] for a dual-containing code.

    2 log2|C| - 3n equals 6k1 + 4(k2+k3) + 2(k4+k5) - 3n, since
    log2|C| = 3k1 + 2k2 + 2k3 + k4 + k5 for a code of type 8^k1 4^k2 4^k3 2^k4 2^k5.
    """
    validate_spec(s)
    if code is None:
        code = span_basis(s)
    if evidence is None:
        evidence = is_dual_containing(s, code)
    if not evidence.verdict:
        raise NotDualContaining(f"{s.text()} does not contain its dual")
    m = len(code)
    d = min_lee_distance(code, budget)
    return QuantumParams(3 * s.n, 2 * m - 3 * s.n, d.value, d.exact)


@dataclass(frozen=True)
class SearchRecord:
    spec: CodeSpec
    params: QuantumParams
    evidence: ContainmentEvidence
    size_log2: int
    seconds: float = 0.0

    def sort_key(self):
        p = self.params
        return (-p.dimension, -p.distance, self.spec.text())


def all_specs(n: int) -> list[CodeSpec]:
    """Every valid generator triple of length n, in canonical order."""
    divisors = divisors_xn1(n)
    return [
        CodeSpec(n, g1, a1, g2)
        for g1 in divisors
        for a1 in divisors
        if a1.divides(g1)
        for g2 in divisors
    ]


def search_quantum(
    n: int,
    budget: int = DEFAULT_BUDGET,
    max_n: int = DEFAULT_MAX_N,
    reverify: bool = True,
) -> list[SearchRecord]:
    """All dual-containing codes of length n with their quantum parameters.

    Sorted by dimension descending, distance descending, then spec text.
    Codes with the same span are reported once, under the least spec.
    """
    if n % 2 == 0 or n < 1:
        raise ValueError(f"length must be odd and positive, got {n}")
    if n > max_n:
        raise ValueError(f"n={n} exceeds the search limit {max_n}")
    seen: dict[CodeBasis, SearchRecord] = {}
    for s in all_specs(n):
        start = time.perf_counter()
        code = span_basis(s)
        evidence = is_dual_containing(s, code)
        if not evidence.verdict:
            continue
        params = css_params(s, budget, code=code, evidence=evidence)
        rec = SearchRecord(s, params, evidence, len(code), time.perf_counter() - start)
        prev = seen.get(code)
        if prev is None or s.sort_key() < prev.spec.sort_key():
            seen[code] = rec
    records = sorted(seen.values(), key=SearchRecord.sort_key)
    if reverify:
        # recompute the component codes too, not just the R-level check
        binary_code.cache_clear()
        rw_code.cache_clear()
        for rec in records:
            again = is_dual_containing(validate_spec(CodeSpec(rec.spec.n, rec.spec.g1, rec.spec.a1, rec.spec.g2)))
            if not again.verdict:
                raise InvariantError(f"{rec.spec.text()} failed re-verification")
    return records
