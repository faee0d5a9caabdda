"""Bivariate Vandermonde determinants indexed by exponent sets.

An exponent set X is an ordered list of n pairs (alpha_j, beta_j); its
determinant is det(x_i^{alpha_j} y_i^{beta_j}).  Dyck paths select the
exponent sets ((d_i, a_i)) built from their dinv and area sequences.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from . import parking, paths
from .poly import Key, Monomial, Poly
from .util import require, signed_permutations

Pair = tuple[int, int]


def x_of_path(a: Sequence[int]) -> tuple[Pair, ...]:
    """Exponent set of a path: pairs (d_i, a_i) in row order."""
    d = paths.dinv_sequence(a)
    return tuple((d[i], a[i]) for i in range(len(a)))


def x_of_parking(p: parking.ParkingFunction) -> tuple[Pair, ...]:
    """Exponent set of a parking function, pairs ordered by label."""
    d = parking.dinv_sequence_pf(p)
    a = p.area_sequence
    by_label = [(0, 0)] * p.n
    for i in range(p.n):
        by_label[p.sigma[i] - 1] = (d[i], a[i])
    return tuple(by_label)


def is_degenerate(pairs: Sequence[Pair]) -> bool:
    """True iff a pair repeats, which happens iff the determinant is 0."""
    return len(set(pairs)) < len(pairs)


def delta(pairs: Sequence[Pair], n: int | None = None, cap: int = 9) -> Poly:
    """det(x_i^{alpha_j} y_i^{beta_j}) by signed permutation expansion.

    Every permutation contributes a single monomial, so the expansion is
    a hash-merge of n! signed monomials; repeated pairs cancel to 0.
    """
    if n is None:
        n = len(pairs)
    require(len(pairs) == n, f"need exactly {n} exponent pairs, got {len(pairs)}")
    require(n <= cap, f"determinant expansion capped at n={cap}")
    if any(a < 0 or b < 0 for a, b in pairs):
        raise ValueError("exponents must be nonnegative")
    terms: dict[Key, Fraction] = {}
    for tau, sign in signed_permutations(n):
        xe = tuple(pairs[tau[i] - 1][0] for i in range(n))
        ye = tuple(pairs[tau[i] - 1][1] for i in range(n))
        key = (xe, ye)
        s = terms.get(key, Fraction(0)) + sign
        if s:
            terms[key] = s
        elif key in terms:
            del terms[key]
    return Poly(n, terms)


def delta_of_path(a: Sequence[int]) -> Poly:
    return delta(x_of_path(a))


def co_monomial(a: Sequence[int]) -> tuple[Monomial, int]:
    """The distinguished monomial of a path's determinant: the labelled
    monomial of the path's canonical parking function, together with the
    coefficient it carries inside the determinant.

    The coefficient is computed honestly from the expansion and must be
    +1 or -1; anything else falsifies the leading-term argument and
    raises.
    """
    p = parking.phi(a)
    mono = parking.pf_basis_monomial(p)
    coeff = delta_of_path(a).terms.get(mono.key, Fraction(0))
    if coeff not in (1, -1):
        raise AssertionError(
            f"distinguished monomial {mono} has coefficient {coeff}, expected +-1"
        )
    return mono, int(coeff)


def verify_distinct_sets(n: int) -> bool:
    """Whether the underlying pair sets of all X(path) are pairwise distinct."""
    seen = set()
    for a in paths.enumerate_paths(n):
        key = tuple(sorted(x_of_path(a)))
        if key in seen:
            return False
        seen.add(key)
    return True
