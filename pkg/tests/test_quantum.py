import pytest

from rqcodes.codes import CodeSpec, InvariantError, is_dual_containing, span_basis
from rqcodes.gf2poly import parse_poly
from rqcodes.oracle import exhaustive_min_lee
from rqcodes.quantum import NotDualContaining, QuantumParams, all_specs, css_params, search_quantum


@pytest.mark.parametrize(
    "args",
    [(3, "x+1", "1", "x+1"), (5, "x+1", "1", "x+1"), (3, "x+1", "1", "x^2+x+1")],
)
def test_css_params_refuses_non_containing(args):
    with pytest.raises(NotDualContaining):
        css_params(CodeSpec.parse(*args))


def test_css_params_containing():
    p = css_params(CodeSpec.parse(7, "x^3+x+1", "1", "x^3+x+1"))
    assert p.length == 21 and p.exact
    assert str(p) == f"[[21,{p.dimension},{p.distance}]]"
    assert css_params(CodeSpec.parse(1, "1", "1", "1")).as_tuple() == (3, 3, 1)


def test_quantum_params_validation():
    with pytest.raises(ValueError):
        QuantumParams(9, -1, 2)
    with pytest.raises(ValueError):
        QuantumParams(9, 3, 0)
    assert str(QuantumParams(45, 3, 4, exact=False)) == "[[45,3,<=4]]"


def test_search_n1_whole_space():
    records = search_quantum(1)
    assert [str(r.params) for r in records][0] == "[[3,3,1]]"


def test_search_n3_contents():
    got = [str(r.params) for r in search_quantum(3)]
    assert got == ["[[9,9,1]]", "[[9,7,1]]", "[[9,5,1]]", "[[9,3,1]]"]


def test_search_n7_finds_distance_three():
    got = {r.params.as_tuple() for r in search_quantum(7)}
    assert (21, 3, 3) in got
    assert (21, 13, 2) in got


@pytest.mark.parametrize("n", [3, 5, 7])
def test_search_record_invariants(n):
    records = search_quantum(n)
    keys = [r.sort_key() for r in records]
    assert keys == sorted(keys)
    assert len({r.spec for r in records}) == len(records)
    for r in records:
        k = r.params.dimension
        assert 0 <= k <= 3 * n and (k - 3 * n) % 2 == 0
        assert k == 2 * r.size_log2 - 3 * n
        assert r.evidence.verdict and r.evidence.methods_agree
        assert is_dual_containing(r.spec).verdict
        # Lee distance equals the Hamming distance of the Gray image
        assert r.params.exact
        assert r.params.distance == exhaustive_min_lee(span_basis(r.spec))


def test_search_is_deterministic():
    a = search_quantum(5)
    b = search_quantum(5)
    assert [(r.spec, r.params) for r in a] == [(r.spec, r.params) for r in b]


def test_search_dedups_equal_spans():
    specs = all_specs(3)
    spans = {span_basis(s) for s in specs if is_dual_containing(s).verdict}
    assert len(search_quantum(3)) == len(spans)


def test_search_rejects_bad_lengths():
    with pytest.raises(ValueError):
        search_quantum(4)
    with pytest.raises(ValueError):
        search_quantum(65)
    with pytest.raises(ValueError):
        search_quantum(9, max_n=7)


def test_reverification_catches_corruption(monkeypatch):
    from rqcodes import codes

    real = codes.reciprocal_criterion
    monkeypatch.setattr(codes, "reciprocal_criterion", lambda n, g: not real(n, g))
    with pytest.raises(InvariantError):
        search_quantum(3)


def test_all_specs_count():
    # 4 divisors at n=3: pairs a1 | g1 number 9, times 4 choices of g2
    assert len(all_specs(3)) == 36
    assert all(s.a1.divides(s.g1) for s in all_specs(7))
    assert all_specs(3)[0] == CodeSpec(3, parse_poly("1"), parse_poly("1"), parse_poly("1"))
