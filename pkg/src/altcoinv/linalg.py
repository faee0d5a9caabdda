"""Exact and modular rank computation for sparse integer matrices.

Rows are sparse dicts mapping column index to a nonzero integer.  The
exact engine keeps an integer echelon basis using cross-multiplication
and gcd stripping, so no Fraction arithmetic appears on the hot path.
The modular engine eliminates densely over a fixed large prime and is
probabilistic on its own: a mod-p rank is a lower bound for the rational
rank.  Hybrid mode uses the modular pass to pick candidate pivot rows
and then certifies the rank exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

import numpy as np

MODULUS = 2_147_483_647  # 2^31 - 1, prime; products of two residues fit in int64

Row = dict[int, int]


def strip_gcd(row: Row) -> Row:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    if g > 1:
        return {c: v // g for c, v in row.items()}
    return row


def integerize(row: dict[int, Fraction]) -> Row:
    """Clear denominators and strip content; empty rows stay empty."""
    if not row:
        return {}
    denom = 1
    for v in row.values():
        denom = denom * v.denominator // gcd(denom, v.denominator)
    out = {c: int(v * denom) for c, v in row.items() if v != 0}
    return strip_gcd(out)


class IntegerEchelon:
    """Incremental exact echelon over the integers.

    Pivot of a row is its smallest column index.  Insertion order is the
    caller's; results are deterministic for a fixed order.
    """

    def __init__(self) -> None:
        self.pivot_rows: dict[int, Row] = {}

    @property
    def rank(self) -> int:
        return len(self.pivot_rows)

    def reduce(self, row: Row) -> Row:
        """Eliminate row against the current basis; returns the remainder
        (empty dict when the row is dependent)."""
        # drop stored zeros up front; a zero-valued pivot would break the
        # gcd elimination below
        row = {c: v for c, v in row.items() if v}
        while row:
            lead = min(row)
            piv = self.pivot_rows.get(lead)
            if piv is None:
                return strip_gcd(row)
            a = piv[lead]
            b = row[lead]
            g = gcd(a, b)
            ca, cb = a // g, b // g
            # row := ca * row - cb * piv  (kills column lead)
            new: Row = {}
            for c, v in row.items():
                new[c] = ca * v
            for c, v in piv.items():
                w = new.get(c, 0) - cb * v
                if w:
                    new[c] = w
                elif c in new:
                    del new[c]
            row = new
        return row

    def add_row(self, row: Row) -> bool:
        """Insert a row; True iff it was independent of the basis."""
        rem = self.reduce(row)
        if not rem:
            return False
        self.pivot_rows[min(rem)] = rem
        return True


def rank_mod_p(rows: Sequence[Row], ncols: int, p: int = MODULUS) -> tuple[int, list[int]]:
    """Dense elimination over GF(p); returns (rank, indices of pivot rows).

    The rank over GF(p) never exceeds the rational rank, and rows
    reported independent mod p are independent over the rationals.
    """
    basis = np.zeros((0, ncols), dtype=np.int64)
    pivot_cols: list[int] = []
    pivot_rows: list[int] = []
    for idx, row in enumerate(rows):
        v = np.zeros(ncols, dtype=np.int64)
        for c, val in row.items():
            v[c] = val % p
        for brow, bcol in zip(basis, pivot_cols):
            coeff = v[bcol]
            if coeff:
                v = (v - coeff * brow) % p
        nz = np.nonzero(v)[0]
        if nz.size == 0:
            continue
        col = int(nz[0])
        inv = pow(int(v[col]), p - 2, p)
        v = (v * inv) % p
        basis = np.vstack([basis, v])
        pivot_cols.append(col)
        pivot_rows.append(idx)
    return len(pivot_rows), pivot_rows


class FractionSolver:
    """Echelon basis over Q with combination tracking.

    Generators are inserted in order; express() reduces a vector against
    the basis and returns its coordinates in the generators, or None if
    the vector lies outside their span.
    """

    def __init__(self) -> None:
        self.rows: dict[int, tuple[dict[int, Fraction], list[Fraction]]] = {}
        self.n_generators = 0

    def _reduce(
        self, vec: dict[int, Fraction], combo: list[Fraction]
    ) -> tuple[dict[int, Fraction], list[Fraction]]:
        vec = {c: Fraction(v) for c, v in vec.items() if v}
        while vec:
            lead = min(vec)
            got = self.rows.get(lead)
            if got is None:
                return vec, combo
            prow, pcombo = got
            factor = vec[lead] / prow[lead]
            for c, v in prow.items():
                w = vec.get(c, Fraction(0)) - factor * v
                if w:
                    vec[c] = w
                elif c in vec:
                    del vec[c]
            for idx, v in enumerate(pcombo):
                combo[idx] -= factor * v
        return vec, combo

    def add_generator(self, vec: dict[int, Fraction]) -> bool:
        """Insert a generator; True iff it enlarged the span."""
        combo = [Fraction(0)] * self.n_generators + [Fraction(1)]
        self.n_generators += 1
        for key in self.rows:
            self.rows[key] = (self.rows[key][0], self.rows[key][1] + [Fraction(0)])
        rem, combo = self._reduce(vec, combo)
        if not rem:
            return False
        self.rows[min(rem)] = (rem, combo)
        return True

    def express(self, vec: dict[int, Fraction]) -> list[Fraction] | None:
        """Coordinates of vec in the generators, or None if not in the span."""
        combo = [Fraction(0)] * self.n_generators
        rem, combo = self._reduce(dict(vec), combo)
        if rem:
            return None
        return [-c for c in combo]


@dataclass(frozen=True)
class RankResult:
    rank: int
    method: str
    certified: bool


def sparse_rank(
    rows: Sequence[Row],
    ncols: int,
    mode: str = "exact",
    prime: int = MODULUS,
) -> RankResult:
    """Rank of the row span.

    mode "exact": integer echelon over all rows.
    mode "modular": GF(p) rank only; a certified lower bound, flagged
        probabilistic as an equality claim.
    mode "hybrid": modular pass selects pivot candidates, then the rank
        is certified exactly: candidates must stay independent over Z
        and every remaining row must reduce to zero exactly.
    """
    rows = [r for r in rows if r]
    if mode == "exact":
        ech = IntegerEchelon()
        for r in rows:
            ech.add_row(r)
        return RankResult(ech.rank, "exact-rational", True)
    if mode == "modular":
        rank, _ = rank_mod_p(rows, ncols, prime)
        return RankResult(rank, f"modular-{prime}", False)
    if mode == "hybrid":
        rank_p, pivot_idx = rank_mod_p(rows, ncols, prime)
        if rank_p == ncols or rank_p == len(rows):
            # Equality is forced: mod-p rank bounds rational rank from
            # below and both ncols and the row count bound it above.
            return RankResult(rank_p, f"modular-{prime}+bound-certified", True)
        ech = IntegerEchelon()
        for i in pivot_idx:
            if not ech.add_row(rows[i]):
                raise AssertionError("mod-p independent rows must stay independent over Q")
        chosen = set(pivot_idx)
        for i, r in enumerate(rows):
            if i in chosen:
                continue
            if ech.add_row(r):
                # The prime was unlucky for this row; rank grows.
                chosen.add(i)
        return RankResult(ech.rank, f"modular-{prime}+exact-confirmed", True)
    raise ValueError(f"unknown mode {mode!r}")
