"""Bivariate Vandermonde determinants attached to Dyck paths."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from altcoinv import parking as PK
from altcoinv import paths as P
from altcoinv import poly
from altcoinv import vandermonde as V
from altcoinv.util import CapExceeded

from conftest import area_sequences

LAWS = settings(max_examples=200, derandomize=True, deadline=None)


def _parse3(s: str) -> poly.Poly:
    return poly.parse_text(s, 3)


def _prod3(*factors: str) -> poly.Poly:
    out = _parse3("1")
    for f in factors:
        out = poly.mul(out, _parse3(f))
    return out


# the five n=3 determinants, keyed by bidegree (x-degree, y-degree);
# each is pinned up to an overall sign
FIVE_N3 = {
    (0, 3): _prod3("y1 - y2", "y2 - y3", "y1 - y3"),
    (1, 1): _parse3("x1*y2 - x1*y3 - x2*y1 + x2*y3 + x3*y1 - x3*y2"),
    (1, 2): _parse3(
        "-x1*y1*y2 + x1*y1*y3 + x2*y1*y2 - x2*y2*y3 - x3*y1*y3 + x3*y2*y3"
    ),
    (2, 1): _parse3(
        "x1*x2*y1 - x1*x2*y2 - x1*x3*y1 + x1*x3*y3 + x2*x3*y2 - x2*x3*y3"
    ),
    (3, 0): _prod3("x1 - x2", "x2 - x3", "x1 - x3"),
}


def _equal_up_to_sign(f: poly.Poly, g: poly.Poly) -> bool:
    return f.terms == g.terms or f.terms == poly.scalar_mul(g, -1).terms


def test_exponent_set_of_path():
    assert V.x_of_path((0, 1, 0)) == ((1, 0), (1, 1), (0, 0))
    assert V.x_of_path((0, 1, 2)) == ((0, 0), (0, 1), (0, 2))


def test_five_n3_determinants_match_catalog():
    seen = set()
    for a in P.enumerate_paths(3):
        d = V.delta_of_path(a)
        bideg = (sum(P.dinv_sequence(a)), sum(a))
        assert bideg in FIVE_N3 and bideg not in seen
        seen.add(bideg)
        assert _equal_up_to_sign(d, FIVE_N3[bideg]), a
    assert seen == set(FIVE_N3)


def test_determinants_are_alternating():
    for a in P.enumerate_paths(3):
        d = V.delta_of_path(a)
        assert poly.antisymmetrize(d).terms == poly.scalar_mul(d, 6).terms


def test_determinant_homogeneous_of_dinv_area_bidegree():
    for n in range(1, 6):
        for a in P.enumerate_paths(n):
            d = V.delta_of_path(a)
            bideg = (sum(P.dinv_sequence(a)), sum(a))
            assert d.terms
            for xe, ye in d.terms:
                assert (sum(xe), sum(ye)) == bideg


def test_zero_iff_degenerate_examples():
    assert V.is_degenerate(((0, 0), (0, 0), (1, 2)))
    assert not V.delta(((0, 0), (0, 0), (1, 2))).terms
    assert not V.is_degenerate(((0, 0), (1, 0), (0, 1)))
    assert V.delta(((0, 0), (1, 0), (0, 1))).terms


@LAWS
@given(
    st.lists(
        st.tuples(st.integers(0, 2), st.integers(0, 2)),
        min_size=2,
        max_size=4,
    )
)
def test_zero_iff_degenerate(pairs):
    d = V.delta(pairs)
    assert bool(d.terms) == (not V.is_degenerate(pairs))


def test_delta_cap():
    with pytest.raises(CapExceeded):
        V.delta(tuple((i, 0) for i in range(10)))


def test_exponent_sets_of_paths_are_distinct():
    for n in range(1, 8):
        assert V.verify_distinct_sets(n)


def test_parking_exponent_set_is_relabelled_path_set():
    for a in P.enumerate_paths(4):
        p = PK.phi(a)
        assert sorted(V.x_of_parking(p)) == sorted(V.x_of_path(a))


@LAWS
@given(area_sequences(max_n=6))
def test_co_monomial_unit_coefficient(a):
    mono, coeff = V.co_monomial(tuple(a))
    assert coeff in (1, -1)
    d = PK.dinv_sequence_pf(PK.phi(tuple(a)))
    assert mono.bidegree() == (sum(d), sum(a))


def test_co_monomial_example():
    mono, coeff = V.co_monomial((0, 1, 0))
    assert str(mono) == "x1*x3*y3"
    assert coeff in (1, -1)


def test_co_monomials_injective_small():
    for n in range(1, 7):
        monos = [V.co_monomial(a)[0].key for a in P.enumerate_paths(n)]
        assert len(set(monos)) == len(monos)
