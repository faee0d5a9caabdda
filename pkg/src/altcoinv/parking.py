"""Parking functions: labelled Dyck paths, their statistics and monomials.

A parking function is a Dyck path plus a permutation sigma of 1..n;
sigma_i is the label of row i, rows numbered bottom to top.  Within each
maximal stack of rows belonging to one column of north steps, labels
must increase bottom-up.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product
from typing import Iterator, Sequence

from .paths import (
    area_sequence_to_word,
    dinv_sequence,
    enumerate_paths,
    is_valid_area_sequence,
)
from .poly import Monomial
from .util import inverse, require


@dataclass(frozen=True)
class ParkingFunction:
    area_sequence: tuple[int, ...]
    sigma: tuple[int, ...]

    def __post_init__(self) -> None:
        if not is_valid_area_sequence(self.area_sequence, 1):
            raise ValueError(f"invalid area sequence {self.area_sequence}")
        if sorted(self.sigma) != list(range(1, len(self.area_sequence) + 1)):
            raise ValueError("sigma must be a permutation of 1..n")
        if not _labels_increase_in_columns(self.area_sequence, self.sigma):
            raise ValueError("labels must increase bottom-up within each column")

    @property
    def n(self) -> int:
        return len(self.area_sequence)

    @property
    def word(self) -> str:
        return area_sequence_to_word(self.area_sequence, 1)


def _labels_increase_in_columns(a: Sequence[int], sigma: Sequence[int]) -> bool:
    # Rows i, i+1 share a column of norths exactly when a_{i+1} = a_i + 1.
    return all(
        sigma[i] < sigma[i + 1]
        for i in range(len(a) - 1)
        if a[i + 1] == a[i] + 1
    )


def dinv_sequence_pf(p: ParkingFunction) -> tuple[int, ...]:
    """d_i counts later rows j with equal area and larger label, or area
    one less and smaller label."""
    a, s = p.area_sequence, p.sigma
    n = p.n
    return tuple(
        sum(
            1
            for j in range(i + 1, n)
            if (a[i] == a[j] and s[i] < s[j]) or (a[i] == a[j] + 1 and s[i] > s[j])
        )
        for i in range(n)
    )


def maj_sequence(p: ParkingFunction) -> tuple[int, ...]:
    """Area sequence carried from rows to labels: entry j is the area of
    the row labelled j."""
    inv = inverse(p.sigma)
    return tuple(p.area_sequence[inv[j - 1] - 1] for j in range(1, p.n + 1))


def phi(a: Sequence[int]) -> ParkingFunction:
    """Canonical labelling of a path: rows sorted by (area, row index)
    ascending receive labels 1..n."""
    a = tuple(a)
    order = sorted(range(len(a)), key=lambda i: (a[i], i))
    sigma = [0] * len(a)
    for label, row in enumerate(order, start=1):
        sigma[row] = label
    return ParkingFunction(a, tuple(sigma))


def enumerate_parking_functions(n: int, cap: int = 200000) -> Iterator[ParkingFunction]:
    """All parking functions on n rows, lex order on (path word, sigma);
    count is (n+1)^(n-1)."""
    require((n + 1) ** (n - 1) <= cap, f"(n+1)^(n-1) exceeds cap {cap}")
    for a in enumerate_paths(n):
        for sigma in permutations(range(1, n + 1)):
            if _labels_increase_in_columns(a, sigma):
                yield ParkingFunction(a, sigma)


# ------------------------------------------------------------ permutation data


def runs(sigma: Sequence[int]) -> list[list[int]]:
    """Maximal consecutive increasing subsequences of sigma."""
    out: list[list[int]] = [[sigma[0]]]
    for v in sigma[1:]:
        if v > out[-1][-1]:
            out[-1].append(v)
        else:
            out.append([v])
    return out


def maj_table(sigma: Sequence[int]) -> tuple[int, ...]:
    """Entry sigma_i is the number of descents of sigma at positions >= i."""
    n = len(sigma)
    a = [0] * n
    tail_descents = 0
    for i in range(n - 1, 0, -1):
        if sigma[i - 1] > sigma[i]:
            tail_descents += 1
        a[sigma[i - 1] - 1] = tail_descents
    a[sigma[n - 1] - 1] = 0
    return tuple(a)


def schedule(sigma: Sequence[int]) -> tuple[int, ...]:
    """sch_i for sigma_i in run r_j: later elements of r_j that are larger,
    plus elements of r_{j+1} that are smaller, where a virtual run {0}
    follows the last run (so last-run elements always gain 1)."""
    rs = [list(r) for r in runs(sigma)] + [[0]]
    where = {}
    for j, r in enumerate(rs[:-1]):
        for v in r:
            where[v] = j
    out = []
    for v in sigma:
        j = where[v]
        out.append(
            sum(1 for k in rs[j] if k > v) + sum(1 for k in rs[j + 1] if k < v)
        )
    return tuple(out)


def cars(sigma: Sequence[int]) -> list[ParkingFunction]:
    """All parking functions whose rows of area i carry exactly the labels
    of the (l - i)-th run of sigma, l = number of runs.

    The count always equals the product of the schedule entries.
    """
    sigma = tuple(sigma)
    n = len(sigma)
    rs = runs(sigma)
    l = len(rs)
    # Run r_{l-i} supplies the labels for rows of area i.
    labels_by_area = {i: rs[l - i - 1] for i in range(l)}
    multiset = sorted(i for i in range(l) for _ in labels_by_area[i])
    out = []
    for a in enumerate_paths(n):
        if sorted(a) != multiset:
            continue
        rows_by_area = {i: [r for r in range(n) if a[r] == i] for i in range(l)}
        # Distribute each run's labels over the rows of the matching area.
        choices = []
        for i in range(l):
            choices.append(list(permutations(labels_by_area[i])))
        for assignment in product(*choices):
            s = [0] * n
            for i in range(l):
                for row, label in zip(rows_by_area[i], assignment[i]):
                    s[row] = label
            if _labels_increase_in_columns(a, s):
                out.append(ParkingFunction(a, tuple(s)))
    out.sort(key=lambda p: (p.word, p.sigma))
    return out


def dinv_in_schedule_order(p: ParkingFunction, sigma: Sequence[int]) -> tuple[int, ...]:
    """dinv entries re-indexed so that position i reports the row labelled
    sigma_i.

    With this indexing, cars(sigma) realizes every tuple of the box
    0 <= k_i <= sch_i(sigma) - 1 exactly once; the row-indexed sequence
    does not have that property.
    """
    d = dinv_sequence_pf(p)
    inv = inverse(p.sigma)
    return tuple(d[inv[v - 1] - 1] for v in sigma)


# ------------------------------------------------------------------ monomials


def pf_basis_monomial(p: ParkingFunction) -> Monomial:
    """Product over rows of x_{sigma_i}^{d_i} y_{sigma_i}^{a_i}."""
    d = dinv_sequence_pf(p)
    xe = [0] * p.n
    ye = [0] * p.n
    for i in range(p.n):
        xe[p.sigma[i] - 1] = d[i]
        ye[p.sigma[i] - 1] = p.area_sequence[i]
    return Monomial(p.n, tuple(xe), tuple(ye))


def co_basis(n: int, cap: int = 200000) -> list[Monomial]:
    """Schedule monomial basis: for each sigma, y^{maj(sigma)} times
    x_{sigma_1}^{k_1}...x_{sigma_n}^{k_n} over 0 <= k_i < sch_i(sigma).

    Contains (n+1)^(n-1) distinct monomials.
    """
    require((n + 1) ** (n - 1) <= cap, f"(n+1)^(n-1) exceeds cap {cap}")
    seen = set()
    out = []
    for sigma in permutations(range(1, n + 1)):
        maj = maj_table(sigma)
        sch = schedule(sigma)
        for ks in product(*(range(s) for s in sch)):
            xe = [0] * n
            for i in range(n):
                xe[sigma[i] - 1] = ks[i]
            mono = Monomial(n, tuple(xe), maj)
            if mono.key in seen:
                raise AssertionError(f"duplicate monomial {mono} in schedule basis")
            seen.add(mono.key)
            out.append(mono)
    out.sort(key=lambda m: (sum(m.xexp) + sum(m.yexp), m.xexp + m.yexp))
    return out
