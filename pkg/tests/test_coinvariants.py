"""Quotient by the invariant ideal: graded dimensions and the basis check.

The n=4 series and verification are computed once per session in
conftest fixtures; smaller sizes are cheap enough to recompute here.
"""

from math import comb

from altcoinv import coinvariants as C
from altcoinv import paths as P
from altcoinv.qt import QtPoly
from altcoinv.util import catalan


def test_generator_exponents():
    # one generator per bidegree (h, k) with 1 <= h + k <= n
    assert set(C.generator_exponents(2)) == {(1, 0), (0, 1), (2, 0), (1, 1), (0, 2)}
    for n in range(1, 5):
        assert len(C.generator_exponents(n)) == n * (n + 3) // 2


def test_invariant_generators_are_symmetric():
    from altcoinv import poly
    from itertools import permutations

    for g in C.invariant_generators(3):
        for sigma in permutations((1, 2, 3)):
            assert poly.permute(g, sigma).terms == g.terms


def test_monomial_keys_count():
    # bidegree (i, j) monomials: weak compositions in each variable group
    assert len(C.monomial_keys(2, 1, 1)) == 4
    assert len(C.monomial_keys(3, 2, 0)) == 6
    assert len(C.monomial_keys(1, 3, 2)) == 1


def test_quotient_dimensions_n2():
    assert C.quotient_dimension(2, (0, 0)).quotient_dim == 1
    assert C.quotient_dimension(2, (1, 0)).quotient_dim == 1
    assert C.quotient_dimension(2, (0, 1)).quotient_dim == 1
    assert C.quotient_dimension(2, (2, 0)).quotient_dim == 0
    assert C.quotient_dimension(2, (1, 1)).quotient_dim == 0


def test_hilbert_series_n2():
    h, certs = C.hilbert_series(2)
    assert h == QtPoly({(0, 0): 1, (1, 0): 1, (0, 1): 1})
    assert h.at_one() == 3
    assert all(c.certified for c in certs)
    assert all(c.assumption for c in certs)


def test_hilbert_series_n3():
    h, _ = C.hilbert_series(3)
    assert h.at_one() == 16
    assert h.is_qt_symmetric()
    # top bidegrees carry single classes
    assert h.coeffs[(3, 0)] == 1 and h.coeffs[(0, 3)] == 1


def test_total_dimension_is_parking_count(hilbert4):
    h4, certs = hilbert4
    assert h4.at_one() == 125
    assert h4.is_qt_symmetric()
    assert all(c.certified for c in certs)


def test_alternating_series_matches_path_statistics():
    for n in range(2, 5):
        got, certs = C.alternating_hilbert_series(n)
        want = QtPoly.from_stats(
            (P.dinv(a), P.area(a)) for a in P.enumerate_paths(n)
        )
        assert got == want, n
        assert all(c.certified for c in certs)


def test_alternating_n3_value():
    got, _ = C.alternating_hilbert_series(3)
    assert got == QtPoly({(3, 0): 1, (2, 1): 1, (1, 2): 1, (1, 1): 1, (0, 3): 1})
    assert got.is_qt_symmetric()


def test_qt_catalan_combinatorial():
    assert C.qt_catalan_combinatorial(3) == QtPoly(
        {(3, 0): 1, (2, 1): 1, (1, 2): 1, (1, 1): 1, (0, 3): 1}
    )
    for n in range(1, 7):
        h = C.qt_catalan_combinatorial(n)
        assert h.at_one() == catalan(n)
        assert h.is_qt_symmetric()


def test_modes_agree_on_quotient_dimension():
    for bd in [(1, 1), (2, 0), (2, 1)]:
        exact = C.quotient_dimension(3, bd, mode="exact")
        hybrid = C.quotient_dimension(3, bd, mode="hybrid")
        modular = C.quotient_dimension(3, bd, mode="modular")
        assert exact.quotient_dim == hybrid.quotient_dim == modular.quotient_dim
        assert exact.certified and hybrid.certified
        assert not modular.certified


def test_modular_prime_is_configurable():
    r = C.quotient_dimension(3, (1, 1), mode="modular", prime=10007)
    assert r.quotient_dim == C.quotient_dimension(3, (1, 1)).quotient_dim
    assert "10007" in r.method


def test_certificate_json_carries_assumption():
    c = C.quotient_dimension(2, (1, 0))
    d = c.to_json_dict()
    assert d["bidegree"] == [1, 0]
    assert d["assumption"] == C.GENERATOR_ASSUMPTION


def test_verify_main_theorem_small():
    for n in (1, 2, 3):
        rep = C.verify_main_theorem(n)
        assert rep.ok, rep.failures
        assert rep.total_paths == catalan(n)
        assert not rep.failures
        assert all(cl.independent and cl.spanning for cl in rep.classes if cl.n_paths)


def test_verify_main_theorem_n4(verify4):
    assert verify4.ok, verify4.failures
    assert verify4.total_paths == 14
    # only bidegrees carrying paths or quotient are reported; a class
    # with paths but no quotient room (or vice versa) would break ok
    assert len(verify4.classes) == 14
    for cl in verify4.classes:
        assert cl.n_paths >= 1
        assert cl.ambient_dim - cl.ideal_rank == cl.n_paths


def test_cobasis_independence():
    assert C.verify_cobasis_independence(2)
    assert C.verify_cobasis_independence(3)
