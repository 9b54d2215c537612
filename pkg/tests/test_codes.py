import pytest

from rqcodes.codes import (
    F2,
    R,
    RW,
    CodeBasis,
    CodeSpec,
    SpecError,
    binary_code,
    code_size_log2,
    contains,
    dual_code,
    dual_generator_formula,
    generator_poly,
    ideal_basis,
    is_dual_containing,
    is_self_dual,
    min_lee_distance,
    pack,
    reciprocal_criterion,
    rw_code,
    rw_pair_code,
    shift,
    span_basis,
    unpack,
)
from rqcodes.gf2poly import divisors_xn1, parse_poly, xn_minus_1
from rqcodes.quantum import all_specs
from rqcodes.ring import RElem, crt_split

P = parse_poly
E = RElem.parse


def spec(n, g1, a1, g2):
    return CodeSpec.parse(n, g1, a1, g2)


EVEN3 = ("3", "x+1", "1", "x+1")
EVEN5 = ("5", "x+1", "1", "x+1")


def test_validate_accepts_example():
    s = spec(*EVEN3)
    assert s.text() == "n=3 g1=x+1 a1=1 g2=x+1"


@pytest.mark.parametrize(
    "args, message",
    [
        ((3, "x+1", "x^2+x+1", "x+1"), "a1 does not divide g1"),
        ((4, "x+1", "1", "x+1"), "even length"),
        ((3, "x^2+1", "1", "x+1"), "g1 does not divide"),
        ((3, "x+1", "1", "x^2+1"), "g2 does not divide"),
        ((3, "0", "1", "x+1"), "zero polynomial"),
    ],
)
def test_validate_errors(args, message):
    with pytest.raises(SpecError, match=message):
        spec(*args)


def test_generator_examples():
    assert str(generator_poly(spec(*EVEN3))) == "(1+u+u^2)+x"
    assert str(generator_poly(spec(*EVEN5))) == "(1+u+u^2)+x"
    g = generator_poly(spec(5, "1", "1", "1"))
    # (1+u^2) + u^2 + (u+u^2) = 1+u+u^2, a unit, so the ideal is all of R^5
    assert g.coeffs == (E("1+u+u^2").code, 0, 0, 0, 0)
    assert E("1+u+u^2").is_unit()
    assert len(span_basis(spec(5, "1", "1", "1"))) == 15


def test_generator_matches_crt_components():
    s = spec(7, "x^4+x^2+x+1", "x^3+x^2+1", "x^3+x+1")
    parts = [crt_split(RElem.from_code(c)) for c in generator_poly(s).coeffs]
    assert [b for b, _ in parts] == list(s.g2.coeffs) + [0] * (7 - len(s.g2.coeffs))
    assert [rw.alpha for _, rw in parts] == list(s.g1.coeffs) + [0] * (7 - len(s.g1.coeffs))
    assert [rw.beta for _, rw in parts] == list(s.a1.coeffs) + [0] * (7 - len(s.a1.coeffs))
    C = span_basis(s)
    # projecting onto each CRT component gives the component codes
    binary = CodeBasis.from_vectors(7, [[crt_split(RElem.from_code(x))[0] for x in v] for v in C.vectors()], F2)
    rw = CodeBasis.from_vectors(7, [[crt_split(RElem.from_code(x))[1].code for x in v] for v in C.vectors()], RW)
    assert binary == binary_code(7, s.g2)
    assert rw == rw_code(7, s.g1, s.a1)


@pytest.mark.parametrize(
    "args, size",
    [(EVEN3, 7), ((3, "1", "1", "1"), 9), ((3, "x^3+1", "x^3+1", "x^3+1"), 0), (EVEN5, 13)],
)
def test_span_size(args, size):
    s = spec(*args)
    assert len(span_basis(s)) == size
    assert code_size_log2(s) == size


def test_contains_examples():
    C = span_basis(spec(*EVEN3))
    one_u2 = E("1+u^2").code
    assert C.contains((one_u2, one_u2, 0))
    assert contains(C, (0, 0, 0))
    Z = span_basis(spec(3, "x^3+1", "x^3+1", "x^3+1"))
    assert not Z.contains((1, 0, 0))
    with pytest.raises(ValueError):
        C.contains((0, 0))


def test_dual_examples():
    assert len(dual_code(span_basis(spec(3, "1", "1", "1")))) == 0
    assert len(dual_code(span_basis(spec(3, "x^3+1", "x^3+1", "x^3+1")))) == 9
    assert len(dual_code(span_basis(spec(*EVEN3)))) == 2


def test_dual_is_orthogonal_and_closed():
    s = spec(7, "x^3+x+1", "1", "x+1")
    C = span_basis(s)
    D = dual_code(C)
    for x in D.vectors():
        for y in C.vectors():
            acc = 0
            for a, b in zip(x, y):
                acc ^= R.mul[a][b]
            assert acc == 0
    assert D.is_cyclic() and D.is_submodule()
    assert len(C) + len(D) == 21


def test_dual_generator_formula_readings():
    f = dual_generator_formula(spec(*EVEN3))
    by_name = {r.name: r.matches for r in f.readings}
    assert by_name["corrected"]
    # with a1 = 1 the plain closed form agrees with the linear-algebra dual
    assert f.matches and not f.discrepancy

    whole = dual_generator_formula(spec(3, "1", "1", "1"))
    assert whole.matches
    assert ideal_basis(R, 3, [whole.generator.coeffs]).size_log2 == 0

    zero = dual_generator_formula(spec(3, "x^3+1", "x^3+1", "x^3+1"))
    # the plain form ignores a1 and misses the w-component here; the discrepancy is surfaced
    assert zero.discrepancy
    corrected = next(r for r in zero.readings if r.name == "corrected")
    assert corrected.matches
    assert ideal_basis(R, 3, [corrected.generator.coeffs]).size_log2 == 9


@pytest.mark.parametrize("n", [3, 5])
def test_corrected_dual_formula_everywhere(n):
    for s in all_specs(n):
        f = dual_generator_formula(s)
        readings = {r.name: r.matches for r in f.readings}
        assert readings["corrected"], s.text()
        assert f.matches == (s.a1 == P("1") or readings["h2=(x^n-1)/g2"]), s.text()


def test_example_triples_are_not_dual_containing():
    # <x+1> over F2 is the even-weight code; its dual holds the all-ones word, which is odd for n odd
    for args in (EVEN3, EVEN5, (3, "x+1", "1", "x^2+x+1")):
        ev = is_dual_containing(spec(*args))
        assert ev.verdict is False
        assert ev.methods_agree
        assert ev.binary_criterion is False


def test_containment_positive_cases():
    ev = is_dual_containing(spec(3, "1", "1", "1"))
    assert ev.verdict and ev.methods_agree
    ev = is_dual_containing(spec(7, "x^3+x+1", "1", "x^3+x+1"))
    assert ev.verdict
    assert ev.as_dict() == {"polynomial_plus_rw": True, "componentwise": True, "direct": True}


def test_reciprocal_criterion_n7():
    assert reciprocal_criterion(7, P("x^3+x+1"))
    ev = is_dual_containing(spec(7, "x+1", "1", "x^3+x+1"))
    assert ev.binary_criterion and ev.binary_basis


@pytest.mark.parametrize("n", [3, 5, 7])
def test_containment_three_way_agreement(n):
    for s in all_specs(n):
        ev = is_dual_containing(s)
        assert ev.methods_agree
        assert ev.rw_divisibility == ev.rw_basis


def test_is_self_dual_examples():
    assert is_self_dual(P("1"), P("x^3+1"), P("1"), 3)
    with pytest.raises(ValueError):
        is_self_dual(P("x+1"), P("x^2+x+1"), P("x+1"), 3)
    assert not is_self_dual(P("x^3+x+1"), P("x^3+x^2+1"), P("x+1"), 7)


@pytest.mark.parametrize("n", [3, 5, 7])
def test_is_self_dual_against_materialized_code(n):
    f = xn_minus_1(n)
    for f1 in divisors_xn1(n):
        for f2 in divisors_xn1(n):
            if not (f1 * f2).divides(f):
                continue
            f3 = f // (f1 * f2)
            C = rw_pair_code(n, f1, f2, f3)
            assert is_self_dual(f1, f2, f3, n) == (dual_code(C) == C)


def test_min_lee_distance_examples():
    assert min_lee_distance(span_basis(spec(*EVEN3))) == (2, True)
    assert min_lee_distance(span_basis(spec(*EVEN5))) == (2, True)
    assert min_lee_distance(span_basis(spec(1, "1", "1", "1"))) == (1, True)
    with pytest.raises(ValueError):
        min_lee_distance(span_basis(spec(3, "x^3+1", "x^3+1", "x^3+1")))


def test_min_lee_distance_budget_flag():
    C = span_basis(spec(*EVEN5))
    d = min_lee_distance(C, budget=5)
    assert d.exact is False and d.value >= 2


def test_shift_examples():
    v = (1, E("u").code, 0)
    assert shift(v) == (0, 1, E("u").code)
    w = v
    for _ in range(3):
        w = shift(w)
    assert w == v
    assert shift((5, 5, 5)) == (5, 5, 5)


def test_pack_unpack_round_trip():
    v = (1, 2, 3, 4, 5, 6, 7)
    assert unpack(R, 7, pack(R, v)) == v
    # packed weight is the Lee weight
    from rqcodes.ring import LEE

    assert bin(pack(R, v)).count("1") == sum(LEE[x] for x in v)


@pytest.mark.parametrize("n", [3, 5, 7])
def test_every_code_is_cyclic_submodule(n):
    for s in all_specs(n):
        C = span_basis(s)
        assert C.is_cyclic() and C.is_submodule()


def test_code_equality_is_by_span():
    a = span_basis(spec(3, "1", "1", "1"))
    b = CodeBasis.from_vectors(3, [(1, 0, 0), (2, 0, 0), (4, 0, 0), (0, 1, 0), (0, 2, 0), (0, 4, 0), (0, 0, 1), (0, 0, 2), (0, 0, 4)])
    assert a == b and hash(a) == hash(b)
