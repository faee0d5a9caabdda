"""Two-variable generating polynomials and q-number helpers."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from altcoinv import paths as P
from altcoinv.qt import (
    QtPoly,
    q_add,
    q_binomial,
    q_divide_exact,
    q_int,
    q_mul,
    q_shift,
    q_text,
)

LAWS = settings(max_examples=200, derandomize=True, deadline=None)


def test_q_int():
    assert q_int(1) == {0: 1}
    assert q_int(4) == {0: 1, 1: 1, 2: 1, 3: 1}


def test_q_binomial_values():
    assert q_binomial(4, 2) == {0: 1, 1: 1, 2: 2, 3: 1, 4: 1}
    assert q_binomial(3, 0) == {0: 1}
    assert q_binomial(3, 3) == {0: 1}
    assert q_binomial(2, 1) == {0: 1, 1: 1}


@LAWS
@given(st.integers(0, 10), st.integers(0, 10))
def test_q_binomial_symmetry_and_count(n, k):
    if k > n:
        return
    assert q_binomial(n, k) == q_binomial(n, n - k)
    from math import comb

    assert sum(q_binomial(n, k).values()) == comb(n, k)


@LAWS
@given(st.integers(1, 9), st.integers(0, 9))
def test_q_binomial_pascal(n, k):
    if k > n:
        return
    # [n,k] = [n-1,k-1] + q^k [n-1,k]
    lhs = q_binomial(n, k)
    rhs = {}
    if k >= 1:
        rhs = q_add(rhs, q_binomial(n - 1, k - 1))
    if k <= n - 1:
        rhs = q_add(rhs, q_shift(q_binomial(n - 1, k), k))
    assert lhs == rhs


def test_q_divide_exact():
    num = q_mul(q_int(3), {0: 2, 1: 5})
    assert q_divide_exact(num, q_int(3)) == {0: 2, 1: 5}
    with pytest.raises(Exception):
        q_divide_exact({0: 1, 1: 1}, {0: 1, 1: 2})


@LAWS
@given(
    st.dictionaries(st.integers(0, 5), st.integers(-6, 6), max_size=4),
    st.dictionaries(st.integers(0, 5), st.integers(-6, 6), min_size=1, max_size=4),
)
def test_q_divide_inverts_mul(a, b):
    b = {k: v for k, v in b.items() if v}
    if not b:
        return
    assert q_divide_exact(q_mul(a, b), b) == {k: v for k, v in a.items() if v}


def test_q_text():
    assert q_text({2: 1, 0: 3, 1: -1}) == "3 - q + q^2"
    assert q_text({0: 1, 2: 2}) == "1 + 2*q^2"
    assert q_text({}) == "0"
    assert q_text({1: 1}) == "q"


def test_qtpoly_text_frozen():
    h = QtPoly({(3, 0): 1, (2, 1): 1, (1, 2): 1, (1, 1): 1, (0, 3): 1})
    assert h.to_text() == "q^3 + q^2*t + q*t^2 + q*t + t^3"
    assert QtPoly().to_text() == "0"
    assert QtPoly({(0, 0): 1}).to_text() == "1"


def test_qtpoly_from_stats_and_specializations():
    h = QtPoly.from_stats((P.dinv(a), P.area(a)) for a in P.enumerate_paths(3))
    assert h == QtPoly({(3, 0): 1, (2, 1): 1, (1, 2): 1, (1, 1): 1, (0, 3): 1})
    assert h.at_one() == 5
    assert h.at_t1() == {0: 1, 1: 2, 2: 1, 3: 1}
    # t = 1/q with the top shift recovers the q-binomial form
    assert h.at_t_qinv(3) == q_divide_exact(q_binomial(6, 3), q_int(4))


def test_qtpoly_symmetry():
    h = QtPoly({(1, 0): 1, (0, 1): 1})
    assert h.is_qt_symmetric()
    assert h.swap_qt() == h
    g = QtPoly({(2, 0): 1})
    assert not g.is_qt_symmetric()
    assert g.swap_qt() == QtPoly({(0, 2): 1})


@LAWS
@given(st.lists(st.tuples(st.integers(0, 4), st.integers(0, 4)), max_size=8))
def test_qtpoly_swap_involution(pairs):
    h = QtPoly.from_stats(pairs)
    assert h.swap_qt().swap_qt() == h
    assert h.at_one() == len(pairs)


def test_qtpoly_arithmetic():
    a = QtPoly({(1, 0): 1})
    b = QtPoly({(0, 1): 1})
    assert (a + b).to_text() == "q + t"
    assert (a - a).is_zero()
    assert (a + b).to_json_dict() == [[1, 0, 1], [0, 1, 1]]
