"""Diagonal harmonics built from the x-Vandermonde by lowering operators.

E_j sends f to sum_i y_i d^j f / dx_i^j.  Words of E's applied to the
Vandermonde give the alternating harmonics studied here; Schur functions
are carried over by expanding them in power sums (Murnaghan-Nakayama)
and mapping p_mu to the E-word image of mu.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from . import paths as pathmod
from .linalg import FractionSolver, IntegerEchelon, integerize
from .poly import Key, Poly, add, partial, scalar_mul, total_degree
from .util import partitions_of, require
from .vandermonde import delta


def vandermonde_x(n: int) -> Poly:
    """det(x_i^(n-j)): the product of (x_i - x_j) over i < j."""
    return delta(tuple((n - j, 0) for j in range(1, n + 1)))


def apply_E(j: int, f: Poly) -> Poly:
    """sum_i y_i * (d/dx_i)^j applied to f."""
    require(j >= 1, "operator index must be positive")
    out = Poly.zero(f.n)
    for i in range(1, f.n + 1):
        g = partial(f, "x", i, j)
        if g.is_zero():
            continue
        yi = Poly.variable(f.n, "y", i)
        out = add(out, yi * g)
    return out


def e_word_delta(word: Sequence[int], n: int) -> Poly:
    """Apply E_{word[0]} first, then E_{word[1]}, ..., to the Vandermonde.

    The first entry acting first mirrors the convention that the inner
    index of a composed operator word acts before the outer ones.
    """
    f = vandermonde_x(n)
    for j in word:
        if f.is_zero():
            break
        f = apply_E(j, f)
    return f


def e_mu_delta(mu: Sequence[int], n: int) -> Poly:
    """E-word image of a partition; bidegree (binom(n,2) - |mu|, len(mu))
    unless zero."""
    return e_word_delta(tuple(mu), n)


def harmonicity_check(f: Poly, n: int) -> bool:
    """True iff every polarized power-sum differential operator
    sum_i (d/dx_i)^h (d/dy_i)^k with 1 <= h+k <= deg f kills f."""
    deg = total_degree(f)
    if deg < 0:
        return True
    for d in range(1, deg + 1):
        for h in range(d + 1):
            k = d - h
            acc = Poly.zero(n)
            for i in range(1, n + 1):
                g = partial(f, "x", i, h)
                if not g.is_zero():
                    g = partial(g, "y", i, k)
                if not g.is_zero():
                    acc = add(acc, g)
            if not acc.is_zero():
                return False
    return True


# ----------------------------------------------------- symmetric function data


def z_mu(mu: Sequence[int]) -> int:
    """Centralizer size: product over part values k of k^m_k * m_k!."""
    from math import factorial

    out = 1
    for k in set(mu):
        m = sum(1 for p in mu if p == k)
        out *= k**m * factorial(m)
    return out


@lru_cache(maxsize=None)
def _character(lam: tuple[int, ...], mu: tuple[int, ...]) -> int:
    """Symmetric group character via recursive border-strip removal on
    beta-numbers: remove a strip of size mu[0], recurse on the rest."""
    if not mu:
        return 1 if not lam else 0
    r = mu[0]
    rest = mu[1:]
    k = len(lam)
    beta = tuple(lam[i] + (k - 1 - i) for i in range(k))
    bset = set(beta)
    total = 0
    for b in beta:
        nb = b - r
        if nb < 0 or nb in bset:
            continue
        height = sum(1 for c in beta if nb < c < b)
        nbeta = sorted((nb if c == b else c for c in beta), reverse=True)
        nlam = tuple(v - (k - 1 - i) for i, v in enumerate(nbeta))
        nlam = tuple(v for v in nlam if v > 0)
        total += (-1) ** height * _character(nlam, rest)
    return total


def character(lam: Sequence[int], mu: Sequence[int]) -> int:
    """chi^lam evaluated on the conjugacy class of cycle type mu."""
    lam = tuple(sorted((p for p in lam if p), reverse=True))
    mu = tuple(sorted((p for p in mu if p), reverse=True))
    if sum(lam) != sum(mu):
        raise ValueError("character requires |lam| = |mu|")
    return _character(lam, mu)


def mn_expansion(lam: Sequence[int]) -> dict[tuple[int, ...], Fraction]:
    """Power-sum expansion of a Schur function: coefficient of p_mu is
    chi^lam(mu) / z_mu; zero coefficients are dropped."""
    lam = tuple(sorted((p for p in lam if p), reverse=True))
    require(sum(lam) <= 20, "expansion capped at |lam| = 20")
    out: dict[tuple[int, ...], Fraction] = {}
    for mu in partitions_of(sum(lam)):
        chi = character(lam, mu)
        if chi:
            out[mu] = Fraction(chi, z_mu(mu))
    return out


def psi_schur(lam: Sequence[int], n: int) -> Poly:
    """Image of a Schur function: expand in power sums and send p_mu to
    the E-word image of mu."""
    out = Poly.zero(n)
    for mu, c in sorted(mn_expansion(lam).items()):
        g = e_mu_delta(mu, n)
        if not g.is_zero():
            out = add(out, scalar_mul(g, c))
    return out


# ------------------------------------------------------------- basis explorer


def _poly_row(f: Poly, col: dict[Key, int]) -> dict[int, int]:
    row = {}
    for key, c in f.terms.items():
        assert c.denominator == 1
        row[col[key]] = int(c)
    return row


@dataclass(frozen=True)
class GzSelection:
    n: int
    xdeg: int
    ydeg: int
    candidates: list[tuple[int, ...]]
    selected: list[tuple[int, ...]]
    census: int

    @property
    def matches_census(self) -> bool:
        return len(self.selected) == self.census


def path_census(n: int) -> dict[tuple[int, int], int]:
    """Number of paths per (dinv, area) statistic pair."""
    out: dict[tuple[int, int], int] = {}
    for a in pathmod.enumerate_paths(n):
        key = (pathmod.dinv(a), pathmod.area(a))
        out[key] = out.get(key, 0) + 1
    return out


def increasing_sequences(total: int, length: int, top: int) -> list[tuple[int, ...]]:
    """Weakly increasing sequences of the given length summing to total,
    entries in 1..top, ascending lexicographic order."""
    if length == 0:
        return [()] if total == 0 else []
    out = []

    def rec(prefix: list[int], remaining: int, slots: int, low: int) -> None:
        if slots == 0:
            if remaining == 0:
                out.append(tuple(prefix))
            return
        for v in range(low, top + 1):
            if v > remaining:
                break
            if remaining - v > (slots - 1) * top:
                continue
            prefix.append(v)
            rec(prefix, remaining - v, slots - 1, v)
            prefix.pop()

    rec([], total, length, 1)
    return out


def gz_selection(n: int, xdeg: int, ydeg: int) -> GzSelection:
    """Greedy maximal independent subset of E-word images in one bidegree.

    Candidates are the weakly increasing words of length ydeg with entry
    sum binom(n,2) - xdeg, ordered by their partition (decreasing) form;
    the selection keeps the words whose images extend an exact integer
    echelon.  The census is the number of paths with dinv = xdeg and
    area = ydeg, which the selection size should reach.

    The partition ordering makes the greedy pick (2,2) ahead of (1,3)
    when both are present, matching the basis usually written down for
    the area-2 classes; plain input order would keep the proportional
    partner instead, with the same span.
    """
    target = n * (n - 1) // 2 - xdeg
    cands = increasing_sequences(target, ydeg, n) if target >= 0 else []
    cands.sort(key=lambda w: tuple(sorted(w, reverse=True)))
    ech = IntegerEchelon()
    col: dict[Key, int] = {}
    selected = []
    for word in cands:
        f = e_word_delta(word, n)
        if f.is_zero():
            continue
        for key in sorted(f.terms):
            if key not in col:
                col[key] = len(col)
        if ech.add_row(_poly_row(f, col)):
            selected.append(word)
    census = path_census(n).get((xdeg, ydeg), 0)
    return GzSelection(
        n=n,
        xdeg=xdeg,
        ydeg=ydeg,
        candidates=cands,
        selected=selected,
        census=census,
    )


@dataclass(frozen=True)
class BasisBlock:
    """One area block of the change-of-basis report."""

    xdeg: int
    paths: list[tuple[int, ...]]
    partitions: list[tuple[int, ...]]
    e_words: list[tuple[int, ...]]
    matrix: list[list[Fraction]]  # rows: psi(s_partition); cols: e_words
    rank: int
    square: bool
    invertible: bool
    in_span: bool


@dataclass(frozen=True)
class ChangeOfBasisReport:
    n: int
    blocks: list[BasisBlock]

    @property
    def all_invertible(self) -> bool:
        return all(b.invertible for b in self.blocks)


def change_of_basis_report(n: int) -> ChangeOfBasisReport:
    """Express the Schur-labelled harmonics of each area block in the
    selected E-word images and report rank/invertibility per block.

    Non-invertible or out-of-span blocks are reported, not raised: the
    underlying statement is a conjecture.
    """
    require(1 <= n <= 5, "change-of-basis report capped at n=5")
    top = n * (n - 1) // 2
    census = path_census(n)
    blocks = []
    for a in range(top + 1):
        group = [p for p in pathmod.enumerate_paths(n) if pathmod.area(p) == a]
        if not group:
            continue
        partitions = [pathmod.partition_above(p) for p in group]
        e_words: list[tuple[int, ...]] = []
        for b in sorted({j for (i, j), c in census.items() if i == a}):
            e_words.extend(gz_selection(n, a, b).selected)
        solver = FractionSolver()
        col: dict[Key, int] = {}

        def coords(f: Poly) -> dict[int, Fraction]:
            for key in sorted(f.terms):
                if key not in col:
                    col[key] = len(col)
            return {col[k]: c for k, c in f.terms.items()}

        for word in e_words:
            ok = solver.add_generator(coords(e_word_delta(word, n)))
            assert ok, "selected words must be independent"
        matrix: list[list[Fraction]] = []
        in_span = True
        for lam in partitions:
            expr = solver.express(coords(psi_schur(lam, n)))
            if expr is None:
                in_span = False
                expr = [Fraction(0)] * len(e_words)
            matrix.append(expr)
        square = len(matrix) == len(e_words)
        rank = _matrix_rank(matrix)
        blocks.append(
            BasisBlock(
                xdeg=a,
                paths=group,
                partitions=partitions,
                e_words=e_words,
                matrix=matrix,
                rank=rank,
                square=square,
                invertible=square and in_span and rank == len(e_words),
                in_span=in_span,
            )
        )
    return ChangeOfBasisReport(n=n, blocks=blocks)


def _matrix_rank(matrix: list[list[Fraction]]) -> int:
    ech = IntegerEchelon()
    rank = 0
    for row in matrix:
        r = integerize({c: v for c, v in enumerate(row) if v})
        if r and ech.add_row(r):
            rank += 1
    return rank
