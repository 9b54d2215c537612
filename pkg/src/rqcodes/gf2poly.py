"""Polynomials over GF(2) and the factorization of x^n - 1 for odd n.

A polynomial is stored as a nonnegative integer whose bit i is the
coefficient of x^i, so addition is XOR and multiplication is carry-less.
"""

from __future__ import annotations

import math
import re
from functools import lru_cache, reduce
from itertools import combinations

__all__ = [
    "BinPoly",
    "ZERO_DEGREE",
    "poly_mul",
    "poly_divrem",
    "poly_gcd",
    "reciprocal",
    "cyclotomic_cosets",
    "factor_xn_minus_1",
    "divisors_xn1",
    "xn_minus_1",
    "parse_poly",
]

#: Degree of the zero polynomial. Negative infinity keeps
#: ``deg(p*q) == deg(p) + deg(q)`` true and fails loudly if used as an index.
ZERO_DEGREE = -math.inf


def _clmul(a: int, b: int) -> int:
    if a < b:
        a, b = b, a
    c = 0
    while b:
        if b & 1:
            c ^= a
        a <<= 1
        b >>= 1
    return c


def _divmod(a: int, b: int) -> tuple[int, int]:
    if b == 0:
        raise ZeroDivisionError("division by zero polynomial")
    db = b.bit_length()
    q = 0
    while a.bit_length() >= db:
        shift = a.bit_length() - db
        q ^= 1 << shift
        a ^= b << shift
    return q, a


def _mod(a: int, b: int) -> int:
    return _divmod(a, b)[1]


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, _mod(a, b)
    return a


class BinPoly:
    """Immutable polynomial over GF(2)."""

    __slots__ = ("bits",)

    def __init__(self, bits: int = 0):
        if bits < 0:
            raise ValueError("coefficient mask must be nonnegative")
        object.__setattr__(self, "bits", int(bits))

    def __setattr__(self, name, value):
        raise AttributeError("BinPoly is immutable")

    @classmethod
    def from_coeffs(cls, coeffs) -> BinPoly:
        """Build from an ascending coefficient sequence (index i is x^i)."""
        bits = 0
        for i, c in enumerate(coeffs):
            if c not in (0, 1):
                raise ValueError(f"coefficient {c!r} is not binary")
            bits |= c << i
        return cls(bits)

    @classmethod
    def x_pow(cls, k: int) -> BinPoly:
        return cls(1 << k)

    @property
    def degree(self):
        """Highest exponent with a nonzero coefficient, ``ZERO_DEGREE`` for 0."""
        if self.bits == 0:
            return ZERO_DEGREE
        return self.bits.bit_length() - 1

    @property
    def coeffs(self) -> tuple[int, ...]:
        """Ascending coefficients, no trailing zeros; empty for the zero polynomial."""
        return tuple((self.bits >> i) & 1 for i in range(self.bits.bit_length()))

    def is_zero(self) -> bool:
        return self.bits == 0

    def __bool__(self):
        return self.bits != 0

    def __add__(self, other: BinPoly) -> BinPoly:
        return BinPoly(self.bits ^ other.bits)

    __sub__ = __add__

    def __mul__(self, other: BinPoly) -> BinPoly:
        return BinPoly(_clmul(self.bits, other.bits))

    def __divmod__(self, other: BinPoly) -> tuple[BinPoly, BinPoly]:
        q, r = _divmod(self.bits, other.bits)
        return BinPoly(q), BinPoly(r)

    def __floordiv__(self, other: BinPoly) -> BinPoly:
        return divmod(self, other)[0]

    def __mod__(self, other: BinPoly) -> BinPoly:
        return divmod(self, other)[1]

    def divides(self, other: BinPoly) -> bool:
        return _mod(other.bits, self.bits) == 0

    def __call__(self, x: int) -> int:
        """Evaluate at x in GF(2)."""
        if x & 1:
            return bin(self.bits).count("1") & 1
        return self.bits & 1

    def __eq__(self, other):
        if not isinstance(other, BinPoly):
            return NotImplemented
        return self.bits == other.bits

    def __hash__(self):
        return hash(("BinPoly", self.bits))

    def sort_key(self) -> tuple[int, int]:
        """Order by degree, then by coefficient mask (zero sorts first)."""
        return (self.bits.bit_length(), self.bits)

    def __lt__(self, other: BinPoly) -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"BinPoly({format_poly(self)!r})"

    def to_binary_string(self) -> str:
        """Ascending coefficient string, e.g. ``x^2+1 -> "101"``."""
        if self.bits == 0:
            return "0"
        return "".join(str(c) for c in self.coeffs)


ONE = BinPoly(1)


def poly_mul(p: BinPoly, q: BinPoly) -> BinPoly:
    return p * q


def poly_divrem(p: BinPoly, d: BinPoly) -> tuple[BinPoly, BinPoly]:
    """Quotient and remainder with ``p == q*d + r`` and ``deg r < deg d``."""
    return divmod(p, d)


def poly_gcd(p: BinPoly, q: BinPoly) -> BinPoly:
    if p.bits == 0 and q.bits == 0:
        raise ValueError("gcd(0, 0) is undefined")
    return BinPoly(_gcd(p.bits, q.bits))


def reciprocal(h: BinPoly) -> BinPoly:
    """x^deg(h) * h(1/x): the coefficient sequence reversed.

    Trailing factors of x in ``h`` vanish, so the degree can drop.
    """
    if h.bits == 0:
        raise ValueError("reciprocal of the zero polynomial is undefined")
    d = h.bits.bit_length()
    return BinPoly(int(format(h.bits, f"0{d}b")[::-1], 2))


def xn_minus_1(n: int) -> BinPoly:
    return BinPoly((1 << n) | 1)


def _check_odd(n: int) -> None:
    if not isinstance(n, int) or n < 1 or n % 2 == 0:
        raise ValueError(f"length must be an odd positive integer, got {n!r}")


def cyclotomic_cosets(n: int) -> list[tuple[int, ...]]:
    """2-cyclotomic cosets modulo n, each sorted, ordered by least element."""
    _check_odd(n)
    seen = set()
    cosets = []
    for s in range(n):
        if s in seen:
            continue
        coset = []
        j = s
        while j not in coset:
            coset.append(j)
            j = (2 * j) % n
        seen.update(coset)
        cosets.append(tuple(sorted(coset)))
    return cosets


def _sqr_mod(a: int, m: int) -> int:
    return _mod(_clmul(a, a), m)


def _frobenius_power(f: int, k: int) -> int:
    """x^(2^k) mod f."""
    r = _mod(0b10, f)
    for _ in range(k):
        r = _sqr_mod(r, f)
    return r


def _distinct_degree(f: int) -> dict[int, int]:
    out = {}
    rest = f
    d = 0
    xq = 0b10
    while rest.bit_length() - 1 >= 2 * (d + 1):
        d += 1
        xq = _sqr_mod(xq, rest)
        g = _gcd(rest, xq ^ 0b10)
        if g != 1:
            out[d] = g
            rest = _divmod(rest, g)[0]
            xq = _mod(xq, rest)
    if rest != 1:
        out[rest.bit_length() - 1] = rest
    return out


def _trace_split(f: int, d: int) -> list[int]:
    """Split a square-free product of degree-d irreducibles deterministically.

    The trace h + h^2 + ... + h^(2^(d-1)) is 0 or 1 on every factor, and the
    monomials x^j (j < deg f) span the residue ring, so refining by every
    monomial separates all factors.
    """
    parts = [f]
    deg_f = f.bit_length() - 1
    for j in range(1, deg_f):
        if all(p.bit_length() - 1 == d for p in parts):
            break
        refined = []
        for p in parts:
            if p.bit_length() - 1 == d:
                refined.append(p)
                continue
            h = _mod(1 << j, p)
            t, acc = h, h
            for _ in range(d - 1):
                t = _sqr_mod(t, p)
                acc ^= t
            g = _gcd(p, acc)
            if g in (1, p):
                refined.append(p)
            else:
                refined.extend((g, _divmod(p, g)[0]))
        parts = refined
    return parts


@lru_cache(maxsize=None)
def _factor_bits(n: int) -> tuple[int, ...]:
    f = (1 << n) | 1
    factors = []
    for d, g in _distinct_degree(f).items():
        factors.extend(_trace_split(g, d))
    factors.sort(key=lambda b: (b.bit_length(), b))
    degrees = sorted(b.bit_length() - 1 for b in factors)
    expected = sorted(len(c) for c in cyclotomic_cosets(n))
    if degrees != expected:
        raise ArithmeticError(f"factor degrees {degrees} disagree with coset sizes {expected}")
    return tuple(factors)


def factor_xn_minus_1(n: int) -> list[BinPoly]:
    """Irreducible factors of x^n - 1 over GF(2), n odd, sorted by (degree, mask)."""
    _check_odd(n)
    return [BinPoly(b) for b in _factor_bits(n)]


def divisors_xn1(n: int) -> list[BinPoly]:
    """All 2^t monic divisors of x^n - 1, sorted by (degree, mask)."""
    factors = factor_xn_minus_1(n)
    out = []
    for r in range(len(factors) + 1):
        for combo in combinations(factors, r):
            out.append(reduce(poly_mul, combo, ONE))
    out.sort()
    return out


_TERM = re.compile(r"^(?:(0|1)|x(?:\^(\d+))?)$")


def parse_poly(text: str) -> BinPoly:
    """Parse ``"x^2+x+1"`` (any term order) or an ascending bit string ``"111"``.

    Repeated terms cancel, as they would over GF(2).
    """
    s = "".join(text.split())
    if not s:
        raise ValueError("empty polynomial text")
    if set(s) <= {"0", "1"}:
        return BinPoly.from_coeffs(int(ch) for ch in s)
    bits = 0
    for term in s.split("+"):
        m = _TERM.match(term)
        if m is None:
            raise ValueError(f"cannot parse term {term!r} in {text!r}")
        if m.group(1) is not None:
            bits ^= int(m.group(1))
        else:
            bits ^= 1 << int(m.group(2) or 1)
    return BinPoly(bits)


def format_poly(p: BinPoly) -> str:
    if p.bits == 0:
        return "0"
    terms = []
    for i in range(p.bits.bit_length() - 1, -1, -1):
        if (p.bits >> i) & 1:
            terms.append("1" if i == 0 else "x" if i == 1 else f"x^{i}")
    return "+".join(terms)
