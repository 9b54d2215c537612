"""Arithmetic in R = F2 + uF2 + u^2F2 (u^3 = u) and Rw = F2 + wF2 (w^2 = 0).

An element a + ub + u^2c of R is packed into a 3-bit code ``a | b<<1 | c<<2``;
an element alpha + beta*w of Rw into the 2-bit code ``alpha | beta<<1``.
All products come from precomputed tables.
"""

from __future__ import annotations

from typing import Iterable, Sequence

__all__ = [
    "RElem",
    "RwElem",
    "R_MUL",
    "RW_MUL",
    "LEE",
    "r_add",
    "r_mul",
    "rw_mul",
    "lee_weight",
    "lee_weight_vec",
    "gray_elem",
    "gray_map",
    "crt_split",
    "crt_join",
    "inner",
]


def _r_mul_raw(x: int, y: int) -> int:
    # multiply as polynomials in u of degree <= 2, then fold u^3 -> u, u^4 -> u^2
    xs = [(x >> i) & 1 for i in range(3)]
    ys = [(y >> i) & 1 for i in range(3)]
    prod = [0] * 5
    for i in range(3):
        for j in range(3):
            prod[i + j] ^= xs[i] & ys[j]
    a = prod[0]
    b = prod[1] ^ prod[3]
    c = prod[2] ^ prod[4]
    return a | (b << 1) | (c << 2)


def _gray_raw(x: int) -> tuple[int, int, int]:
    a, b, c = x & 1, (x >> 1) & 1, (x >> 2) & 1
    return (a, a ^ c, b)


R_MUL = tuple(tuple(_r_mul_raw(x, y) for y in range(8)) for x in range(8))
RW_MUL = tuple(
    tuple(((x & y) & 1) | ((((x & 1) & (y >> 1)) ^ ((y & 1) & (x >> 1))) << 1) for y in range(4))
    for x in range(4)
)
GRAY = tuple(_gray_raw(x) for x in range(8))
LEE = tuple(sum(g) for g in GRAY)

_R_NAMES = ("1", "u", "u^2")


class RElem:
    """One element a + ub + u^2c of R."""

    __slots__ = ("code",)

    def __init__(self, a: int = 0, b: int = 0, c: int = 0):
        for v in (a, b, c):
            if v not in (0, 1):
                raise ValueError(f"coordinate {v!r} is not binary")
        object.__setattr__(self, "code", a | (b << 1) | (c << 2))

    def __setattr__(self, name, value):
        raise AttributeError("RElem is immutable")

    @classmethod
    def from_code(cls, code: int) -> RElem:
        code = int(code)
        if not 0 <= code < 8:
            raise ValueError(f"element code {code} out of range")
        return cls(code & 1, (code >> 1) & 1, (code >> 2) & 1)

    @classmethod
    def parse(cls, text: str) -> RElem:
        """Parse a '+'-joined subset of ``1, u, u^2`` (``"0"`` is zero)."""
        s = "".join(text.split())
        if s == "0":
            return cls()
        code = 0
        for term in s.split("+"):
            if term not in _R_NAMES:
                raise ValueError(f"unknown term {term!r} in {text!r}")
            code ^= 1 << _R_NAMES.index(term)
        return cls.from_code(code)

    a = property(lambda self: self.code & 1)
    b = property(lambda self: (self.code >> 1) & 1)
    c = property(lambda self: (self.code >> 2) & 1)

    def __int__(self):
        return self.code

    __index__ = __int__

    def __add__(self, other: RElem) -> RElem:
        return RElem.from_code(self.code ^ int(other))

    __sub__ = __add__

    def __mul__(self, other: RElem) -> RElem:
        return RElem.from_code(R_MUL[self.code][int(other)])

    def __eq__(self, other):
        if isinstance(other, RElem):
            return self.code == other.code
        return NotImplemented

    def __hash__(self):
        return hash(("RElem", self.code))

    def is_unit(self) -> bool:
        return any(R_MUL[self.code][y] == 1 for y in range(8))

    def __str__(self):
        if self.code == 0:
            return "0"
        return "+".join(name for i, name in enumerate(_R_NAMES) if (self.code >> i) & 1)

    def __repr__(self):
        return f"RElem({self})"


class RwElem:
    """One element alpha + beta*w of Rw."""

    __slots__ = ("code",)

    def __init__(self, alpha: int = 0, beta: int = 0):
        if alpha not in (0, 1) or beta not in (0, 1):
            raise ValueError("coordinates must be binary")
        object.__setattr__(self, "code", alpha | (beta << 1))

    def __setattr__(self, name, value):
        raise AttributeError("RwElem is immutable")

    @classmethod
    def from_code(cls, code: int) -> RwElem:
        code = int(code)
        if not 0 <= code < 4:
            raise ValueError(f"element code {code} out of range")
        return cls(code & 1, code >> 1)

    alpha = property(lambda self: self.code & 1)
    beta = property(lambda self: self.code >> 1)

    def __int__(self):
        return self.code

    __index__ = __int__

    def __add__(self, other: RwElem) -> RwElem:
        return RwElem.from_code(self.code ^ int(other))

    def __mul__(self, other: RwElem) -> RwElem:
        return RwElem.from_code(RW_MUL[self.code][int(other)])

    def __eq__(self, other):
        if isinstance(other, RwElem):
            return self.code == other.code
        return NotImplemented

    def __hash__(self):
        return hash(("RwElem", self.code))

    def __str__(self):
        return {0: "0", 1: "1", 2: "w", 3: "1+w"}[self.code]

    def __repr__(self):
        return f"RwElem({self})"


def r_add(x: RElem, y: RElem) -> RElem:
    return x + y


def r_mul(x: RElem, y: RElem) -> RElem:
    return x * y


def rw_mul(x: RwElem, y: RwElem) -> RwElem:
    return x * y


def lee_weight(x) -> int:
    return LEE[int(x)]


def lee_weight_vec(v: Iterable) -> int:
    return sum(LEE[int(x)] for x in v)


def gray_elem(x) -> tuple[int, int, int]:
    """(a, a+c, b) for x = a + ub + u^2c."""
    return GRAY[int(x)]


def gray_map(v: Sequence) -> tuple[int, ...]:
    """Gray image of a vector, laid out as consecutive triples (a_i, a_i+c_i, b_i)."""
    out = []
    for x in v:
        out.extend(GRAY[int(x)])
    return tuple(out)


def crt_split(x) -> tuple[int, RwElem]:
    """R -> F2 x Rw: a + ub + u^2c maps to (a, (a+b+c) + bw)."""
    code = int(x)
    a, b, c = code & 1, (code >> 1) & 1, (code >> 2) & 1
    return a, RwElem(a ^ b ^ c, b)


def crt_join(f: int, g) -> RElem:
    """F2 x Rw -> R: (a, A + Bw) maps to a + Bu + (a+A+B)u^2."""
    g = int(g)
    A, B = g & 1, g >> 1
    return RElem(f & 1, B, (f ^ A ^ B) & 1)


def inner(x: Sequence, y: Sequence) -> RElem:
    """Euclidean inner product sum x_i*y_i in R."""
    if len(x) != len(y):
        raise ValueError("length mismatch")
    acc = 0
    for xi, yi in zip(x, y):
        acc ^= R_MUL[int(xi)][int(yi)]
    return RElem.from_code(acc)
