"""Shared strategies and session-wide fixtures.

The expensive sweeps (full n=4 quotient, n=4 basis verification, n=4
change-of-basis report) are computed once per session and shared between
the unit tests and the acceptance suite.
"""

from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import strategies as st

from altcoinv.poly import Poly


@pytest.fixture(scope="session")
def hilbert4():
    from altcoinv import coinvariants

    return coinvariants.hilbert_series(4)


@pytest.fixture(scope="session")
def verify4():
    from altcoinv import coinvariants

    return coinvariants.verify_main_theorem(4)


@pytest.fixture(scope="session")
def change_of_basis4():
    from altcoinv import harmonics

    return harmonics.change_of_basis_report(4)


def exponents(n: int, max_exp: int = 3):
    return st.tuples(*(st.integers(0, max_exp) for _ in range(n)))


@st.composite
def polys(draw, n: int | None = None, max_terms: int = 4, max_exp: int = 2):
    """Random sparse polynomials with small rational coefficients."""
    if n is None:
        n = draw(st.integers(1, 3))
    nterms = draw(st.integers(0, max_terms))
    terms = {}
    for _ in range(nterms):
        xe = draw(exponents(n, max_exp))
        ye = draw(exponents(n, max_exp))
        num = draw(st.integers(-6, 6))
        den = draw(st.integers(1, 4))
        if num:
            key = (xe, ye)
            terms[key] = terms.get(key, Fraction(0)) + Fraction(num, den)
    return Poly(n, terms)


@st.composite
def permutations(draw, n: int):
    return tuple(draw(st.permutations(list(range(1, n + 1)))))


@st.composite
def area_sequences(draw, max_n: int = 7, m: int = 1):
    """Valid slope-m area sequences built left to right."""
    n = draw(st.integers(1, max_n))
    a = [0]
    for _ in range(n - 1):
        a.append(draw(st.integers(0, a[-1] + m)))
    return tuple(a)
