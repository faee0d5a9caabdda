"""Bigraded exact linear algebra in the diagonal polynomial ring modulo the
invariant ideal: quotient dimensions, Hilbert series, the alternating
component, and the basis verification for path-indexed determinants.

Conventions used throughout:
  - The invariant ideal is generated by the polarized power sums
    p_{h,k} = sum_i x_i^h y_i^k with 1 <= h + k <= n.  That degree bound
    is a standard generating-set choice, not forced by anything in this
    package; every certificate records it as an assumption.
  - Alternating-component computations use determinant coordinates: the
    alternating polynomials of one bidegree are spanned by the
    determinants of distinct exponent-pair sets, and an alternating
    polynomial is determined by its coefficients on one monomial per
    pair-set orbit.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from . import paths, vandermonde
from .linalg import MODULUS, IntegerEchelon, RankResult, Row, sparse_rank
from .parking import co_basis
from .poly import Key, Poly, mul
from .qt import QtPoly
from .util import catalan, require

GENERATOR_ASSUMPTION = "generators: polarized power sums with h+k <= n"


def worker_count() -> int:
    env = os.environ.get("ALTCOINV_THREADS", "")
    try:
        return max(1, int(env))
    except ValueError:
        return 1


def _map_bidegrees(fn, jobs: list, threads: int | None = None):
    """Apply fn over jobs, preserving job order in the result list."""
    workers = worker_count() if threads is None else threads
    if workers <= 1 or len(jobs) <= 1:
        return [fn(j) for j in jobs]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, jobs))


# ----------------------------------------------------------------- generators


def generator_exponents(n: int) -> list[tuple[int, int]]:
    """(h, k) with 1 <= h + k <= n, ordered by total degree then h desc."""
    return [
        (h, d - h)
        for d in range(1, n + 1)
        for h in range(d, -1, -1)
    ]


def invariant_generators(n: int) -> list[Poly]:
    """Polarized power sums p_{h,k} = sum_i x_i^h y_i^k, 1 <= h+k <= n."""
    out = []
    for h, k in generator_exponents(n):
        terms = {}
        for i in range(n):
            xe = [0] * n
            ye = [0] * n
            xe[i] = h
            ye[i] = k
            terms[(tuple(xe), tuple(ye))] = Fraction(1)
        out.append(Poly(n, terms))
    return out


# ------------------------------------------------------- full monomial sector


def _compositions(total: int, parts: int) -> Iterable[tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def monomial_keys(n: int, i: int, j: int) -> list[Key]:
    """All exponent keys of bidegree (i, j), in a fixed deterministic order."""
    xs = list(_compositions(i, n))
    ys = list(_compositions(j, n))
    return [(xe, ye) for xe in xs for ye in ys]


@dataclass(frozen=True)
class RankCertificate:
    bidegree: tuple[int, int]
    ambient_dim: int
    ideal_rank: int
    quotient_dim: int
    method: str
    certified: bool
    assumption: str = GENERATOR_ASSUMPTION

    def to_json_dict(self) -> dict:
        return {
            "bidegree": list(self.bidegree),
            "ambient_dim": self.ambient_dim,
            "ideal_rank": self.ideal_rank,
            "quotient_dim": self.quotient_dim,
            "method": self.method,
            "certified": self.certified,
            "assumption": self.assumption,
        }


def _ideal_rows_full(n: int, i: int, j: int, col: dict[Key, int]) -> list[Row]:
    """Rows spanning the bidegree-(i,j) slice of the ideal: every monomial
    times every generator whose bidegree fits.

    Each row has at most n entries: mu * p_{h,k} = sum_i mu * x_i^h y_i^k
    and the n shifted keys are pairwise distinct.
    """
    rows: list[Row] = []
    for h, k in generator_exponents(n):
        if h > i or k > j:
            continue
        for xe, ye in monomial_keys(n, i - h, j - k):
            row: Row = {}
            for v in range(n):
                nxe = xe[:v] + (xe[v] + h,) + xe[v + 1 :]
                nye = ye[:v] + (ye[v] + k,) + ye[v + 1 :]
                key = (nxe, nye)
                row[col[key]] = row.get(col[key], 0) + 1
            rows.append(row)
    return rows


def quotient_dimension(
    n: int, bidegree: tuple[int, int], mode: str = "exact", prime: int = MODULUS
) -> RankCertificate:
    """Dimension of the diagonal quotient in one bidegree, with certificate."""
    i, j = bidegree
    keys = monomial_keys(n, i, j)
    col = {k: c for c, k in enumerate(keys)}
    rows = _ideal_rows_full(n, i, j, col)
    res = sparse_rank(rows, len(keys), mode=mode, prime=prime)
    return RankCertificate(
        bidegree=(i, j),
        ambient_dim=len(keys),
        ideal_rank=res.rank,
        quotient_dim=len(keys) - res.rank,
        method=res.method,
        certified=res.certified,
    )


def hilbert_series(
    n: int,
    mode: str = "exact",
    threads: int | None = None,
    prime: int = MODULUS,
) -> tuple[QtPoly, list[RankCertificate]]:
    """Bigraded Hilbert series of the diagonal quotient.

    Sweeps all bidegrees with i + j <= binomial(n,2) and checks a safety
    shell at i + j = binomial(n,2) + 1.  Vanishing on the whole shell
    implies vanishing everywhere above it: any monomial there is a
    variable times a monomial of a shell-or-lower bidegree, and the
    ideal absorbs products.
    """
    require(1 <= n <= 5, "full quotient sweep capped at n=5")
    top = n * (n - 1) // 2
    jobs = [(i, j) for d in range(top + 2) for i in range(d + 1) for j in [d - i]]
    certs = _map_bidegrees(
        lambda bd: quotient_dimension(n, bd, mode, prime), jobs, threads
    )
    coeffs = {}
    for cert in certs:
        i, j = cert.bidegree
        if i + j == top + 1 and cert.quotient_dim != 0:
            raise AssertionError(
                f"quotient unexpectedly nonzero at shell bidegree {(i, j)}: "
                f"dim {cert.quotient_dim}; the sweep bound is wrong"
            )
        if cert.quotient_dim:
            coeffs[(i, j)] = cert.quotient_dim
    return QtPoly(coeffs), certs


# ------------------------------------------------------- alternating sector


Pair = tuple[int, int]


def distinct_pair_sets(n: int, i: int, j: int) -> list[tuple[Pair, ...]]:
    """All sets of n distinct exponent pairs with coordinate sums (i, j),
    each listed in decreasing pair order; deterministic order."""
    pairs = [(a, b) for a in range(i + 1) for b in range(j + 1)]
    out = []
    for combo in combinations(pairs, n):
        sa = sum(p[0] for p in combo)
        sb = sum(p[1] for p in combo)
        if sa == i and sb == j:
            out.append(tuple(sorted(combo, reverse=True)))
    out.sort()
    return out


def representative_key(xset: Sequence[Pair]) -> Key:
    """The monomial key whose pair sequence is the set in decreasing order:
    point v gets exponents xset[v]."""
    return (tuple(p[0] for p in xset), tuple(p[1] for p in xset))


def alternant_coords(f: Poly, col: dict[Key, int]) -> dict[int, Fraction]:
    """Coordinates of an alternating polynomial on pair-set representatives.

    An alternating polynomial is the sum over pair sets X of
    c_X * delta(X), and c_X is its coefficient on the representative
    monomial of X, so restriction to representative keys is injective.
    """
    out: dict[int, Fraction] = {}
    for key, c in f.terms.items():
        idx = col.get(key)
        if idx is not None:
            out[idx] = c
    return out


def _alternating_ideal_rows(
    n: int, i: int, j: int, col: dict[Key, int]
) -> list[Row]:
    """Integer rows spanning the alternating part of the ideal slice.

    The alternating projector sends mu * p_{h,k} to p_{h,k} times the
    projection of mu, so the slice is spanned by p_{h,k} * delta(X')
    over generators and pair sets X' of the complementary bidegree.
    """
    gens = {
        (h, k): g
        for (h, k), g in zip(generator_exponents(n), invariant_generators(n))
    }
    rows = []
    for (h, k), g in gens.items():
        if h > i or k > j:
            continue
        for xset in distinct_pair_sets(n, i - h, j - k):
            prod = mul(g, vandermonde.delta(xset))
            coords = alternant_coords(prod, col)
            rows.append({c: int(v) for c, v in coords.items() if v})
    return rows


def alternating_quotient_dimension(
    n: int, bidegree: tuple[int, int], mode: str = "exact", prime: int = MODULUS
) -> RankCertificate:
    i, j = bidegree
    sets = distinct_pair_sets(n, i, j)
    col = {representative_key(x): c for c, x in enumerate(sets)}
    rows = _alternating_ideal_rows(n, i, j, col)
    res = sparse_rank(rows, len(sets), mode=mode, prime=prime)
    return RankCertificate(
        bidegree=(i, j),
        ambient_dim=len(sets),
        ideal_rank=res.rank,
        quotient_dim=len(sets) - res.rank,
        method=res.method + " (alternating sector)",
        certified=res.certified,
    )


def alternating_hilbert_series(
    n: int,
    mode: str = "exact",
    threads: int | None = None,
    prime: int = MODULUS,
) -> tuple[QtPoly, list[RankCertificate]]:
    """Hilbert series of the alternating component of the quotient.

    Swept over i + j <= binomial(n,2).  For n <= 4 the full quotient
    sweep proves there is nothing above; at n = 5 the same support
    bound is applied and flagged in the certificates.
    """
    require(1 <= n <= 5, "alternating sweep capped at n=5")
    top = n * (n - 1) // 2
    jobs = [(i, j) for d in range(top + 1) for i in range(d + 1) for j in [d - i]]
    certs = _map_bidegrees(
        lambda bd: alternating_quotient_dimension(n, bd, mode, prime), jobs, threads
    )
    coeffs = {}
    for cert in certs:
        if cert.quotient_dim:
            coeffs[cert.bidegree] = cert.quotient_dim
    return QtPoly(coeffs), certs


def qt_catalan_combinatorial(n: int) -> QtPoly:
    """Sum of q^dinv t^area over all Dyck paths."""
    return QtPoly.from_stats(
        (paths.dinv(a), paths.area(a)) for a in paths.enumerate_paths(n)
    )


# -------------------------------------------------------- basis verification


@dataclass(frozen=True)
class BasisClassReport:
    bidegree: tuple[int, int]
    ambient_dim: int
    ideal_rank: int
    n_paths: int
    independent: bool
    spanning: bool
    method: str

    def to_json_dict(self) -> dict:
        return {
            "bidegree": list(self.bidegree),
            "ambient_dim": self.ambient_dim,
            "ideal_rank": self.ideal_rank,
            "n_paths": self.n_paths,
            "independent": self.independent,
            "spanning": self.spanning,
            "method": self.method,
        }


@dataclass(frozen=True)
class BasisVerification:
    n: int
    ok: bool
    total_paths: int
    classes: list[BasisClassReport]
    failures: list[str]

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "ok": self.ok,
            "total_paths": self.total_paths,
            "classes": [c.to_json_dict() for c in self.classes],
            "failures": self.failures,
            "assumption": GENERATOR_ASSUMPTION,
        }


def verify_main_theorem(
    n: int, mode: str = "exact", threads: int | None = None, prime: int = MODULUS
) -> BasisVerification:
    """Check that the path determinants descend to a basis of the
    alternating component of the quotient.

    Per bidegree: the determinants of the paths with those statistics
    must be independent modulo the ideal slice, and they must fill the
    quotient (quotient dim == number of paths).  Bidegrees without paths
    must have zero alternating quotient.
    """
    require(1 <= n <= 5, "basis verification capped at n=5")
    by_bidegree: dict[tuple[int, int], list[tuple[int, ...]]] = {}
    for a in paths.enumerate_paths(n):
        by_bidegree.setdefault((paths.dinv(a), paths.area(a)), []).append(a)

    top = n * (n - 1) // 2
    jobs = [(i, j) for d in range(top + 1) for i in range(d + 1) for j in [d - i]]
    failures: list[str] = []
    reports: list[BasisClassReport] = []

    def handle(bd: tuple[int, int]) -> BasisClassReport:
        i, j = bd
        sets = distinct_pair_sets(n, i, j)
        col = {representative_key(x): c for c, x in enumerate(sets)}
        ideal_rows = _alternating_ideal_rows(n, i, j, col)
        group = by_bidegree.get(bd, [])
        delta_rows = []
        for a in group:
            coords = alternant_coords(vandermonde.delta_of_path(a), col)
            delta_rows.append({c: int(v) for c, v in coords.items() if v})
        if mode == "exact":
            ech = IntegerEchelon()
            for r in ideal_rows:
                ech.add_row(r)
            ideal_rank = ech.rank
            independent = all(ech.add_row(r) for r in delta_rows)
            method = "exact-rational (alternating sector)"
        else:
            # Independence mod the ideal reads off the rank difference of
            # the stacked and unstacked spans.  In hybrid mode both ranks
            # are exactly certified, so the verdict is too; in modular
            # mode it is probabilistic and flagged as such.
            res1 = sparse_rank(ideal_rows, len(sets), mode=mode, prime=prime)
            res2 = sparse_rank(ideal_rows + delta_rows, len(sets), mode=mode, prime=prime)
            ideal_rank = res1.rank
            independent = res2.rank - res1.rank == len(group)
            certified = res1.certified and res2.certified
            method = res1.method + (
                " (alternating sector)" if certified else " (alternating sector, probabilistic)"
            )
        spanning = len(sets) - ideal_rank == len(group)
        return BasisClassReport(
            bidegree=bd,
            ambient_dim=len(sets),
            ideal_rank=ideal_rank,
            n_paths=len(group),
            independent=independent,
            spanning=spanning,
            method=method,
        )

    all_reports = _map_bidegrees(handle, jobs, threads)
    for rep in all_reports:
        if rep.n_paths or rep.ambient_dim - rep.ideal_rank:
            reports.append(rep)
        if not rep.independent:
            failures.append(f"determinants dependent mod ideal at {rep.bidegree}")
        if not rep.spanning:
            failures.append(
                f"quotient dim {rep.ambient_dim - rep.ideal_rank} != "
                f"{rep.n_paths} paths at {rep.bidegree}"
            )
    total = sum(rep.n_paths for rep in all_reports)
    if total != catalan(n):
        failures.append(f"path total {total} != Catalan({n})")
    return BasisVerification(
        n=n,
        ok=not failures,
        total_paths=total,
        classes=reports,
        failures=failures,
    )


def verify_cobasis_independence(n: int, mode: str = "exact") -> bool:
    """Whether the schedule-basis monomials stay independent in the quotient."""
    monos = co_basis(n)
    by_bd: dict[tuple[int, int], list] = {}
    for m in monos:
        by_bd.setdefault(m.bidegree(), []).append(m)
    for (i, j), group in sorted(by_bd.items()):
        keys = monomial_keys(n, i, j)
        col = {k: c for c, k in enumerate(keys)}
        rows = _ideal_rows_full(n, i, j, col)
        ech = IntegerEchelon()
        for r in rows:
            ech.add_row(r)
        for m in group:
            if not ech.add_row({col[m.key]: 1}):
                return False
    return True
