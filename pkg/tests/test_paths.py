"""Lattice path statistics: area, dinv, bounce, enumeration order."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from altcoinv import paths as P
from altcoinv.util import CapExceeded, catalan, fuss_catalan

from conftest import area_sequences

LAWS = settings(max_examples=200, derandomize=True, deadline=None)

# the five semilength-3 paths in enumeration order with their statistics:
# word, area sequence, area, dinv sequence, dinv, bounce
FIVE = [
    ("NNNEEE", (0, 1, 2), 3, (0, 0, 0), 0, 0),
    ("NNENEE", (0, 1, 1), 2, (0, 1, 0), 1, 1),
    ("NNEENE", (0, 1, 0), 1, (1, 1, 0), 2, 1),
    ("NENNEE", (0, 0, 1), 1, (1, 0, 0), 1, 2),
    ("NENENE", (0, 0, 0), 0, (2, 1, 0), 3, 3),
]


def test_semilength3_catalog():
    got = list(P.enumerate_paths(3))
    assert got == [row[1] for row in FIVE]
    for word, a, ar, dseq, dv, bc in FIVE:
        assert P.area_sequence_to_word(a) == word
        assert P.word_to_area_sequence(word) == a
        assert P.area(a) == ar
        assert P.dinv_sequence(a) == dseq
        assert P.dinv(a) == dv
        assert P.bounce(a) == bc


def test_stats_dataclass():
    st3 = P.stats((0, 1, 0))
    assert (st3.word, st3.area, st3.dinv, st3.bounce) == ("NNEENE", 1, 2, 1)
    assert st3.dinv_sequence == (1, 1, 0)
    assert st3.partition_above == (2,)
    st_m = P.stats((0, 2, 1), m=2)
    assert st_m.dinv is None and st_m.dinv_sequence is None


def test_area_sequence_validity():
    assert P.is_valid_area_sequence((0, 1, 2))
    assert not P.is_valid_area_sequence((1, 0, 0))
    assert not P.is_valid_area_sequence((0, 2, 0))
    assert P.is_valid_area_sequence((0, 2, 4), m=2)
    assert not P.is_valid_area_sequence((0, 3, 0), m=2)
    assert not P.is_valid_area_sequence((0, -1, 0))


def test_word_parsing_rejects_bad_input():
    with pytest.raises(ValueError):
        P.word_to_area_sequence("NXEE")
    with pytest.raises(ValueError):
        P.word_to_area_sequence("NEE")  # wrong length for m=1
    with pytest.raises(ValueError):
        P.word_to_area_sequence("ENNE")  # dips below the diagonal


@LAWS
@given(area_sequences(max_n=7))
def test_word_round_trip(a):
    assert P.word_to_area_sequence(P.area_sequence_to_word(a)) == a


@LAWS
@given(area_sequences(max_n=5, m=2))
def test_word_round_trip_slope2(a):
    assert P.word_to_area_sequence(P.area_sequence_to_word(a, 2), 2) == a


@LAWS
@given(area_sequences(max_n=7))
def test_area_is_sum(a):
    assert P.area(a) == sum(a)


@LAWS
@given(area_sequences(max_n=7))
def test_dinv_is_sequence_sum(a):
    assert P.dinv(a) == sum(P.dinv_sequence(a))


def test_enumeration_counts():
    for n in range(1, 7):
        assert len(list(P.enumerate_paths(n))) == catalan(n)
    for n, m in [(2, 2), (3, 2), (2, 3), (3, 3), (4, 2)]:
        assert len(list(P.enumerate_paths(n, m))) == fuss_catalan(n, m)


def test_enumeration_cap():
    with pytest.raises(CapExceeded):
        list(P.enumerate_paths(16))


def test_enumeration_emits_valid_unique():
    seen = set()
    for a in P.enumerate_paths(4, 2):
        assert P.is_valid_area_sequence(a, 2)
        assert a not in seen
        seen.add(a)


# ----------------------------------------------------------------- bounce


def test_bounce_walk_examples():
    # the rebound from (0,0) along heights: touches strictly between the
    # endpoints score their diagonal coordinate complement
    assert P.bounce((0, 1, 2)) == 0
    assert P.bounce((0, 0, 0)) == 3
    assert P.bounce((0, 1, 0)) == 1
    assert P.bounce((0, 0, 1)) == 2


def test_loehr_bounce_matches_at_slope_one():
    for n in range(1, 9):
        for a in P.enumerate_paths(n):
            assert P.loehr_bounce(a, 1) == P.bounce(a)


def test_loehr_bounce_slope_two_example():
    assert P.loehr_bounce((0, 1, 1), 2) == 3


def test_loehr_bounce_zero_run():
    # (0,0) at slope 2: the first bounce window has a zero vertical run
    assert P.loehr_bounce((0, 0), 2) == 2
    assert P.loehr_bounce((0, 2), 2) == 0


def test_loehr_bounce_rejects_bad_input():
    with pytest.raises(Exception):
        P.loehr_bounce((0, 3, 0), 2)


# --------------------------------------------------------- partition above


@LAWS
@given(area_sequences(max_n=7))
def test_partition_above_complements_area(a):
    n = len(a)
    lam = P.partition_above(a)
    assert sum(lam) + P.area(a) == n * (n - 1) // 2
    assert all(x >= y for x, y in zip(lam, lam[1:]))
    assert all(x > 0 for x in lam)


def test_partition_above_examples():
    assert P.partition_above((0, 1, 2)) == ()
    assert P.partition_above((0, 0, 0)) == (2, 1)
    assert P.partition_above((0, 1, 0)) == (2,)
