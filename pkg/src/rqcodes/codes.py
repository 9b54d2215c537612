"""Cyclic codes of odd length over R, built from CRT generator triples.

A code is held as the canonical reduced F2 basis of its span. Vectors over a
ring with F2-dimension ``dim`` are packed into ``dim * n`` bits: coordinate
``k`` of position ``i`` goes to column ``k*n + i``, and column ``j`` is stored
at bit ``dim*n - 1 - j`` so the highest pivot is the earliest column. For R
the coordinates are the Gray image ``(a, a+c, b)``, which makes the packed
form of an R-vector its Gray image in block layout and its popcount its Lee
weight.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import NamedTuple, Sequence

from . import kernels
from .gf2poly import BinPoly, reciprocal, xn_minus_1
from .linalg2 import in_span, nullspace, rref
from .ring import GRAY, R_MUL, RW_MUL, RElem

__all__ = [
    "Ring",
    "F2",
    "RW",
    "R",
    "CodeSpec",
    "SpecError",
    "InvariantError",
    "CodeBasis",
    "DualBasis",
    "RPoly",
    "LeeDistance",
    "ContainmentEvidence",
    "DualReading",
    "DualFormula",
    "validate_spec",
    "generator_poly",
    "span_basis",
    "code_size_log2",
    "contains",
    "dual_code",
    "dual_generator_formula",
    "is_dual_containing",
    "is_self_dual",
    "reciprocal_criterion",
    "binary_code",
    "rw_code",
    "min_lee_distance",
    "shift",
]


class SpecError(ValueError):
    """A generator triple violates the divisibility chain or the length is even."""


class InvariantError(AssertionError):
    """Independent computations of the same quantity disagree."""


@dataclass(frozen=True)
class Ring:
    """A finite commutative F2-algebra, as far as the code machinery needs it."""

    name: str
    dim: int
    mul: tuple
    gens: tuple  # F2 basis of the ring; spans of x^i*e*g give ideals
    coords: tuple  # element code -> coordinate bits used for packing
    uncoords: dict = field(compare=False, repr=False, default_factory=dict)

    def __post_init__(self):
        for code, bits in enumerate(self.coords):
            self.uncoords[tuple(bits)] = code


F2 = Ring("F2", 1, ((0, 0), (0, 1)), (1,), ((0,), (1,)))
RW = Ring("Rw", 2, RW_MUL, (1, 2), tuple((c & 1, c >> 1) for c in range(4)))
R = Ring("R", 3, R_MUL, (1, 2, 4), GRAY)


@lru_cache(maxsize=None)
def _pack_table(ring: Ring, n: int) -> tuple:
    nbits = ring.dim * n
    table = []
    for i in range(n):
        row = []
        for code in range(1 << ring.dim):
            v = 0
            for k, bit in enumerate(ring.coords[code]):
                if bit:
                    v |= 1 << (nbits - 1 - (k * n + i))
            row.append(v)
        table.append(tuple(row))
    return tuple(table)


def pack(ring: Ring, vec: Sequence) -> int:
    table = _pack_table(ring, len(vec))
    out = 0
    for i, x in enumerate(vec):
        out |= table[i][int(x)]
    return out


def unpack(ring: Ring, n: int, v: int) -> tuple[int, ...]:
    nbits = ring.dim * n
    out = []
    for i in range(n):
        bits = tuple((v >> (nbits - 1 - (k * n + i))) & 1 for k in range(ring.dim))
        out.append(ring.uncoords[bits])
    return tuple(out)


def shift(v: Sequence) -> tuple:
    """Right cyclic shift: (c0, ..., c_{n-1}) -> (c_{n-1}, c0, ..., c_{n-2})."""
    v = tuple(v)
    if not v:
        return v
    return v[-1:] + v[:-1]


def _scale(ring: Ring, e: int, vec: Sequence[int]) -> tuple[int, ...]:
    row = ring.mul[e]
    return tuple(row[x] for x in vec)


class CodeBasis:
    """F2 basis of a linear code of length ``n`` over ``ring``.

    ``rows`` is the canonical reduced basis of the packed vectors, so two
    instances are equal exactly when they span the same code.
    """

    __slots__ = ("ring", "n", "rows")

    def __init__(self, n: int, rows=(), ring: Ring = R, *, canonical: bool = False):
        self.ring = ring
        self.n = n
        self.rows = tuple(rows) if canonical else rref(rows)

    @classmethod
    def from_vectors(cls, n: int, vectors, ring: Ring = R):
        """F2 span of the given vectors (no closure under the ring is applied)."""
        vecs = [tuple(int(x) for x in v) for v in vectors]
        for v in vecs:
            if len(v) != n:
                raise ValueError(f"vector of length {len(v)} given for length {n}")
        return cls(n, (pack(ring, v) for v in vecs), ring)

    @property
    def nbits(self) -> int:
        return self.ring.dim * self.n

    @property
    def size_log2(self) -> int:
        return len(self.rows)

    def __len__(self):
        return len(self.rows)

    def vectors(self) -> list[tuple[int, ...]]:
        """Basis rows as vectors of element codes."""
        return [unpack(self.ring, self.n, r) for r in self.rows]

    def contains(self, v: Sequence) -> bool:
        if len(v) != self.n:
            raise ValueError(f"vector length {len(v)} does not match code length {self.n}")
        return in_span(self.rows, pack(self.ring, [int(x) for x in v]))

    def contains_code(self, other: CodeBasis) -> bool:
        return all(in_span(self.rows, r) for r in other.rows)

    def is_cyclic(self) -> bool:
        return all(self.contains(shift(v)) for v in self.vectors())

    def is_submodule(self) -> bool:
        """Closed under multiplication by every ring element."""
        return all(
            self.contains(_scale(self.ring, e, v)) for v in self.vectors() for e in self.ring.gens
        )

    def dual(self) -> DualBasis:
        return dual_code(self)

    def __eq__(self, other):
        if not isinstance(other, CodeBasis):
            return NotImplemented
        return (self.ring.name, self.n, self.rows) == (other.ring.name, other.n, other.rows)

    def __hash__(self):
        return hash((self.ring.name, self.n, self.rows))

    def __repr__(self):
        return f"{type(self).__name__}(ring={self.ring.name}, n={self.n}, size_log2={len(self.rows)})"


class DualBasis(CodeBasis):
    """Basis of a dual code; same representation as :class:`CodeBasis`."""

    __slots__ = ()


@lru_cache(maxsize=None)
def _constraint_table(ring: Ring) -> tuple:
    # table[y][k]: coordinate bits kk such that bit k of (unit(kk) * y) is set
    nat_bits = (1 << ring.dim).bit_length() - 1
    units = [ring.uncoords[tuple(int(j == kk) for j in range(ring.dim))] for kk in range(ring.dim)]
    table = []
    for y in range(1 << ring.dim):
        per_k = []
        for k in range(nat_bits):
            per_k.append(tuple(kk for kk in range(ring.dim) if (ring.mul[units[kk]][y] >> k) & 1))
        table.append(tuple(per_k))
    return tuple(table)


def dual_code(B: CodeBasis) -> DualBasis:
    """Solve x . b = 0 (in the ring) for every basis vector b, over F2.

    Each ring equation splits into one binary equation per bit of the
    element code (the 1, u, u^2 components for R).
    """
    ring, n = B.ring, B.n
    nbits = ring.dim * n
    table = _constraint_table(ring)
    constraints = []
    for b in B.vectors():
        for k in range(len(table[0])):
            r = 0
            for i, y in enumerate(b):
                for kk in table[y][k]:
                    r |= 1 << (nbits - 1 - (kk * n + i))
            if r:
                constraints.append(r)
    return DualBasis(n, nullspace(constraints, nbits), ring, canonical=True)


def contains(B: CodeBasis, v: Sequence) -> bool:
    return B.contains(v)


# -- polynomials over R -------------------------------------------------------


def _residue_coeffs(p: BinPoly, n: int) -> tuple[int, ...]:
    """Coefficients of p mod (x^n - 1), length n."""
    out = [0] * n
    for i, c in enumerate(p.coeffs):
        out[i % n] ^= c
    return tuple(out)


class RPoly(NamedTuple):
    """Residue class of a polynomial over R modulo x^n - 1 (ascending codes)."""

    coeffs: tuple

    @property
    def n(self) -> int:
        return len(self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __str__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            name = str(RElem.from_code(c))
            mono = "" if i == 0 else "x" if i == 1 else f"x^{i}"
            if not mono:
                terms.append(f"({name})" if "+" in name else name)
            elif c == 1:
                terms.append(mono)
            else:
                terms.append(f"({name})*{mono}" if "+" in name else f"{name}*{mono}")
        return "+".join(terms) if terms else "0"


def crt_poly(n: int, binary: BinPoly, rw_unit: BinPoly, rw_w: BinPoly) -> RPoly:
    """CRT^{-1}(binary, rw_unit + w*rw_w) via idempotents 1+u^2 and u^2.

    Rw sits inside R as the u^2 component: 1 -> u^2, w -> u+u^2.
    """
    e1, e2, w = 0b101, 0b100, 0b110
    p, q, s = (_residue_coeffs(x, n) for x in (binary, rw_unit, rw_w))
    return RPoly(tuple((e1 * p[i]) ^ (e2 * q[i]) ^ (w * s[i]) for i in range(n)))


def ideal_basis(ring: Ring, n: int, generators) -> CodeBasis:
    """Ideal of ring[x]/(x^n - 1) generated by the given coefficient vectors."""
    vecs = []
    for g in generators:
        g = tuple(int(c) for c in g)
        cur = g
        for _ in range(n):
            for e in ring.gens:
                vecs.append(pack(ring, _scale(ring, e, cur)))
            cur = shift(cur)
    return CodeBasis(n, vecs, ring)


# -- generator triples --------------------------------------------------------


@dataclass(frozen=True)
class CodeSpec:
    """Generator triple: C = CRT^{-1}(<g2>, <g1 + w*a1>) of odd length n."""

    n: int
    g1: BinPoly
    a1: BinPoly
    g2: BinPoly

    @classmethod
    def parse(cls, n: int, g1: str, a1: str, g2: str) -> CodeSpec:
        from .gf2poly import parse_poly

        return validate_spec(cls(int(n), parse_poly(g1), parse_poly(a1), parse_poly(g2)))

    def text(self) -> str:
        return f"n={self.n} g1={self.g1} a1={self.a1} g2={self.g2}"

    def sort_key(self) -> tuple:
        return (self.n, self.g1.sort_key(), self.a1.sort_key(), self.g2.sort_key())

    def __str__(self):
        return self.text()


def validate_spec(s: CodeSpec) -> CodeSpec:
    """Check n odd and a1 | g1 | x^n - 1, g2 | x^n - 1."""
    n = s.n
    if not isinstance(n, int) or n < 1:
        raise SpecError(f"length must be a positive integer, got {n!r}")
    if n % 2 == 0:
        raise SpecError(f"even length n={n} is not supported (CRT decomposition needs odd n)")
    f = xn_minus_1(n)
    for name, p in (("g1", s.g1), ("a1", s.a1), ("g2", s.g2)):
        if p.is_zero():
            raise SpecError(f"{name} is the zero polynomial")
    if not s.g1.divides(f):
        raise SpecError(f"g1 does not divide x^{n}-1: g1={s.g1}")
    if not s.a1.divides(s.g1):
        raise SpecError(f"a1 does not divide g1: a1={s.a1}, g1={s.g1}")
    if not s.g2.divides(f):
        raise SpecError(f"g2 does not divide x^{n}-1: g2={s.g2}")
    return s


def generator_poly(s: CodeSpec) -> RPoly:
    """(1+u^2)*g2 + u^2*g1 + (u+u^2)*a1, the single generator of the code."""
    validate_spec(s)
    return crt_poly(s.n, s.g2, s.g1, s.a1)


def span_basis(s: CodeSpec) -> CodeBasis:
    return ideal_basis(R, s.n, [generator_poly(s).coeffs])


def code_size_log2(s: CodeSpec) -> int:
    """3n - deg g1 - deg a1 - deg g2."""
    validate_spec(s)
    return 3 * s.n - s.g1.degree - s.a1.degree - s.g2.degree


@lru_cache(maxsize=4096)
def binary_code(n: int, g: BinPoly) -> CodeBasis:
    """Binary cyclic code <g> of length n."""
    return ideal_basis(F2, n, [_residue_coeffs(g, n)])


@lru_cache(maxsize=4096)
def rw_code(n: int, g1: BinPoly, a1: BinPoly) -> CodeBasis:
    """Cyclic code <g1 + w*a1> over Rw."""
    gen = [p | (q << 1) for p, q in zip(_residue_coeffs(g1, n), _residue_coeffs(a1, n))]
    return ideal_basis(RW, n, [gen])


def reciprocal_criterion(n: int, g: BinPoly) -> bool:
    """x^n - 1 == 0 mod g * reciprocal(g): the binary cyclic code <g> contains its dual."""
    return (g * reciprocal(g)).divides(xn_minus_1(n))


def _rw_divisibility(n: int, g1: BinPoly, a1: BinPoly) -> bool:
    # <g1 + w a1> = {alpha + w beta : alpha in <g1>, beta in <a1>}; its dual is
    # {alpha in <a1>^perp, beta in <g1>^perp}, and <g>^perp = <recip((x^n-1)/g)>
    f = xn_minus_1(n)
    return g1.divides(reciprocal(f // a1)) and a1.divides(reciprocal(f // g1))


def is_self_dual(f1: BinPoly, f2: BinPoly, f3: BinPoly, n: int) -> bool:
    """f1 == reciprocal(f3) and f2 == reciprocal(f2), for f1*f2*f3 = x^n - 1.

    Decides self-duality of the Rw code (f1*f2, w*f1*f3).
    """
    if f1 * f2 * f3 != xn_minus_1(n):
        raise ValueError(f"f1*f2*f3 = {f1 * f2 * f3} is not x^{n}-1")
    return f1 == reciprocal(f3) and f2 == reciprocal(f2)


def rw_pair_code(n: int, f1: BinPoly, f2: BinPoly, f3: BinPoly) -> CodeBasis:
    """Rw code generated by f1*f2 and w*f1*f3."""
    g = _residue_coeffs(f1 * f2, n)
    t = _residue_coeffs(f1 * f3, n)
    return ideal_basis(RW, n, [g, tuple(c << 1 for c in t)])


@dataclass(frozen=True)
class ContainmentEvidence:
    """Outcome of the dual-containment decision and the votes behind it.

    ``polynomial_plus_rw``, ``componentwise`` and ``direct`` are the three
    independent methods; they always agree in an instance that was returned.
    The remaining fields are component details and side findings.
    """

    verdict: bool
    polynomial_plus_rw: bool
    componentwise: bool
    direct: bool
    binary_criterion: bool
    binary_basis: bool
    rw_basis: bool
    rw_divisibility: bool
    rw_self_dual_condition: bool

    @property
    def methods_agree(self) -> bool:
        return self.polynomial_plus_rw == self.componentwise == self.direct == self.verdict

    def __bool__(self):
        return self.verdict

    def as_dict(self) -> dict:
        return {
            "polynomial_plus_rw": self.polynomial_plus_rw,
            "componentwise": self.componentwise,
            "direct": self.direct,
        }


def is_dual_containing(s: CodeSpec, C: CodeBasis | None = None) -> ContainmentEvidence:
    """Decide C^perp <= C three ways and insist they agree."""
    validate_spec(s)
    n = s.n
    C2 = binary_code(n, s.g2)
    Cw = rw_code(n, s.g1, s.a1)
    binary_criterion = reciprocal_criterion(n, s.g2)
    binary_basis = C2.contains_code(dual_code(C2))
    rw_basis = Cw.contains_code(dual_code(Cw))

    if C is None:
        C = span_basis(s)
    direct = C.contains_code(dual_code(C))

    m1 = binary_criterion and rw_basis
    m2 = binary_basis and rw_basis
    if not (m1 == m2 == direct):
        raise InvariantError(
            f"containment methods disagree for {s.text()}: "
            f"polynomial+rw={m1}, componentwise={m2}, direct={direct}"
        )
    rw_div = _rw_divisibility(n, s.g1, s.a1)
    if rw_div != rw_basis:
        raise InvariantError(f"Rw divisibility criterion disagrees with basis check for {s.text()}")

    f = xn_minus_1(n)
    rw_condition = binary_criterion and is_self_dual(s.a1, s.g1 // s.a1, f // s.g1, n)
    return ContainmentEvidence(
        verdict=direct,
        polynomial_plus_rw=m1,
        componentwise=m2,
        direct=direct,
        binary_criterion=binary_criterion,
        binary_basis=binary_basis,
        rw_basis=rw_basis,
        rw_divisibility=rw_div,
        rw_self_dual_condition=rw_condition,
    )


@dataclass(frozen=True)
class DualReading:
    name: str
    generator: RPoly
    matches: bool


@dataclass(frozen=True)
class DualFormula:
    """Closed-form dual generators checked against the linear-algebra dual.

    ``generator``/``matches`` are the plain closed form
    h2^ + r1^ u + (h2^ + r1^) u^2 with h2 = (x^n-1)/g2 and r1 = (x^n-1)/g1.
    ``readings`` also holds the h2 = (x^n-1)/g1 reading and the corrected
    generator CRT^{-1}(h2^, recip((x^n-1)/a1) + w r1^), which accounts for a1.
    """

    generator: RPoly
    matches: bool
    readings: tuple

    @property
    def discrepancy(self) -> bool:
        return not self.matches


def dual_generator_formula(s: CodeSpec) -> DualFormula:
    validate_spec(s)
    n = s.n
    f = xn_minus_1(n)
    truth = dual_code(span_basis(s))
    r1_hat = reciprocal(f // s.g1)
    zero = BinPoly(0)
    candidates = [
        ("h2=(x^n-1)/g2", crt_poly(n, reciprocal(f // s.g2), zero, r1_hat)),
        ("h2=(x^n-1)/g1", crt_poly(n, reciprocal(f // s.g1), zero, r1_hat)),
        ("corrected", crt_poly(n, reciprocal(f // s.g2), reciprocal(f // s.a1), r1_hat)),
    ]
    readings = tuple(
        DualReading(name, gen, ideal_basis(R, n, [gen.coeffs]) == truth) for name, gen in candidates
    )
    return DualFormula(readings[0].generator, readings[0].matches, readings)


# -- distance -----------------------------------------------------------------


class LeeDistance(NamedTuple):
    value: int
    exact: bool


DEFAULT_BUDGET = 24
DEFAULT_COMBO_DEPTH = 3


def min_lee_distance(B: CodeBasis, budget: int = DEFAULT_BUDGET, t: int = DEFAULT_COMBO_DEPTH) -> LeeDistance:
    """Minimum nonzero Lee weight (the packed weight, for codes over R).

    Exact when ``log2|C| <= budget``; otherwise the best weight among sums
    of at most ``t`` basis rows, flagged inexact.
    """
    m = len(B.rows)
    if m == 0:
        raise ValueError("the zero code has no minimum distance")
    if m <= budget:
        return LeeDistance(kernels.min_weight_span(B.rows, B.nbits), True)
    return LeeDistance(kernels.min_weight_combos(B.rows, B.nbits, t), False)
