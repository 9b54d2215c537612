from functools import reduce
from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from rqcodes.gf2poly import (
    ZERO_DEGREE,
    BinPoly,
    cyclotomic_cosets,
    divisors_xn1,
    factor_xn_minus_1,
    parse_poly,
    poly_divrem,
    poly_gcd,
    poly_mul,
    reciprocal,
    xn_minus_1,
)

P = parse_poly
polys = st.integers(min_value=0, max_value=(1 << 40) - 1).map(BinPoly)
nonzero = st.integers(min_value=1, max_value=(1 << 40) - 1).map(BinPoly)


def test_mul_examples():
    assert poly_mul(P("x+1"), P("x^2+x+1")) == P("x^3+1")
    assert poly_mul(P("x^5+x^2+1"), P("1")) == P("x^5+x^2+1")
    assert poly_mul(P("x+1"), P("x+1")) == P("x^2+1")


def test_divrem_examples():
    assert poly_divrem(P("x^3+1"), P("x+1")) == (P("x^2+x+1"), BinPoly(0))
    p = P("x^6+x+1")
    assert poly_divrem(p, p) == (P("1"), BinPoly(0))
    assert poly_divrem(P("x^5+1"), P("x+1")) == (P("x^4+x^3+x^2+x+1"), BinPoly(0))


def test_divide_by_zero():
    with pytest.raises(ZeroDivisionError):
        poly_divrem(P("x+1"), BinPoly(0))


def test_gcd_examples():
    assert poly_gcd(P("x^3+1"), P("x+1")) == P("x+1")
    assert poly_gcd(P("x^2+x+1"), P("x+1")) == P("1")
    assert poly_gcd(P("x^4+x+1"), BinPoly(0)) == P("x^4+x+1")
    with pytest.raises(ValueError):
        poly_gcd(BinPoly(0), BinPoly(0))


def test_reciprocal_examples():
    assert reciprocal(P("x^2+x+1")) == P("x^2+x+1")
    assert reciprocal(P("x^3+x+1")) == P("x^3+x^2+1")
    assert reciprocal(P("x+1")) == P("x+1")
    # a factor of x drops out
    assert reciprocal(P("x^3+x")) == P("x^2+1")
    with pytest.raises(ValueError):
        reciprocal(BinPoly(0))


def test_zero_degree_sentinel():
    z = BinPoly(0)
    assert z.degree == ZERO_DEGREE
    assert z.degree not in range(0, 1000)
    assert (z * P("x+1")).degree == z.degree + P("x+1").degree
    with pytest.raises(TypeError):
        [0, 1][z.degree]


def _is_irreducible_by_trial(f: BinPoly) -> bool:
    d = f.degree
    for k in range(1, d // 2 + 1):
        for low in range(1 << k):
            cand = BinPoly((1 << k) | low)
            if cand.divides(f):
                return False
    return True


def test_factor_examples():
    assert factor_xn_minus_1(3) == [P("x+1"), P("x^2+x+1")]
    assert factor_xn_minus_1(5) == [P("x+1"), P("x^4+x^3+x^2+x+1")]
    assert factor_xn_minus_1(7) == [P("x+1"), P("x^3+x+1"), P("x^3+x^2+1")]


@pytest.mark.parametrize("n", [1, 3, 5, 7, 9, 15, 17, 21, 23, 31])
def test_factor_by_trial_division(n):
    factors = factor_xn_minus_1(n)
    assert reduce(poly_mul, factors, P("1")) == xn_minus_1(n)
    assert all(_is_irreducible_by_trial(f) for f in factors)
    assert len(set(factors)) == len(factors)
    for f, g in product(factors, repeat=2):
        if f != g:
            assert poly_gcd(f, g) == P("1")


@pytest.mark.parametrize("n", [33, 45, 51, 63])
def test_factor_large(n):
    factors = factor_xn_minus_1(n)
    assert reduce(poly_mul, factors, P("1")) == xn_minus_1(n)
    assert sorted(f.degree for f in factors) == sorted(len(c) for c in cyclotomic_cosets(n))


@pytest.mark.parametrize("n", [0, 2, 4, -3])
def test_factor_rejects_even_or_nonpositive(n):
    with pytest.raises(ValueError):
        factor_xn_minus_1(n)


def test_cyclotomic_cosets_7():
    assert cyclotomic_cosets(7) == [(0,), (1, 2, 4), (3, 5, 6)]


def test_divisors_examples():
    assert divisors_xn1(3) == [P("1"), P("x+1"), P("x^2+x+1"), P("x^3+1")]
    assert divisors_xn1(1) == [P("1"), P("x+1")]
    assert len(divisors_xn1(5)) == 4


@pytest.mark.parametrize("n", [3, 7, 9, 15])
def test_divisors_divide(n):
    ds = divisors_xn1(n)
    assert len(ds) == 2 ** len(factor_xn_minus_1(n))
    assert len(set(ds)) == len(ds)
    assert all(poly_divrem(xn_minus_1(n), d)[1] == BinPoly(0) for d in ds)


@pytest.mark.parametrize(
    "text, bits",
    [("x^2+x+1", 0b111), ("1+x^2", 0b101), ("x+x^3", 0b1010), ("111", 0b111), ("1101", 0b1011), ("0", 0), ("x+x", 0)],
)
def test_parse(text, bits):
    assert parse_poly(text).bits == bits


@pytest.mark.parametrize("bad", ["", "y+1", "x^", "2", "x^2++1"])
def test_parse_rejects(bad):
    with pytest.raises(ValueError):
        parse_poly(bad)


@given(polys)
def test_text_round_trip(p):
    assert parse_poly(str(p)) == p
    assert parse_poly(p.to_binary_string()) == p


@given(nonzero, nonzero)
def test_degree_additive(p, q):
    assert (p * q).degree == p.degree + q.degree


@given(polys, nonzero)
def test_divrem_recombines(p, d):
    q, r = poly_divrem(p, d)
    assert q * d + r == p
    assert r.is_zero() or r.degree < d.degree


@given(nonzero)
def test_reciprocal_involution_when_constant_term(p):
    p = BinPoly(p.bits | 1)
    assert reciprocal(reciprocal(p)) == p
    assert reciprocal(p).degree == p.degree


@given(polys, polys)
def test_mul_commutes_and_distributes(p, q):
    r = P("x^3+x+1")
    assert p * q == q * p
    assert (p + q) * r == p * r + q * r
