"""Lattice paths weakly above the m-sloped diagonal and their statistics.

A path is stored as its area sequence a = (a_1, ..., a_n): a_i is the
number of full cells in row i (rows numbered bottom to top) between the
path and the diagonal of slope 1/m.  Valid sequences satisfy a_1 = 0 and
a_{i+1} <= a_i + m.  For m = 1 these are classical Dyck paths.

Word form uses characters 'N' and 'E'.  A word of n north steps and mn
east steps stays weakly above the diagonal iff every prefix satisfies
m * (#N) >= (#E).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .util import fuss_catalan, require


@dataclass(frozen=True)
class PathStats:
    """All statistics of one path, as reported by the CLI.

    dinv fields are None for slope m > 1, where the row-comparison
    statistic is not defined here.
    """

    m: int
    area_sequence: tuple[int, ...]
    word: str
    area: int
    dinv: int | None
    dinv_sequence: tuple[int, ...] | None
    bounce: int
    partition_above: tuple[int, ...]


def is_valid_area_sequence(a: Sequence[int], m: int = 1) -> bool:
    if m < 1 or len(a) == 0:
        return False
    if a[0] != 0:
        return False
    for i in range(len(a)):
        if a[i] < 0:
            return False
        if i > 0 and a[i] > a[i - 1] + m:
            return False
    return True


def word_to_area_sequence(word: str, m: int = 1) -> tuple[int, ...]:
    """Convert an N/E word staying weakly above the m-diagonal.

    The i-th entry is m*(i-1) - x_i, where x_i is the x-coordinate of
    the i-th north step: the number of whole cells in that row between
    the path and the diagonal.
    """
    n = word.count("N")
    e = word.count("E")
    if n == 0 or e != m * n or set(word) - {"N", "E"}:
        raise ValueError(f"need n 'N's and m*n 'E's, got {word!r}")
    a = []
    x = 0
    norths = 0
    for ch in word:
        if ch == "N":
            a.append(m * norths - x)
            norths += 1
        else:
            x += 1
        if m * norths < x:
            raise ValueError(f"word dips below the diagonal: {word!r}")
    return tuple(a)


def area_sequence_to_word(a: Sequence[int], m: int = 1) -> str:
    if not is_valid_area_sequence(a, m):
        raise ValueError(f"invalid area sequence {tuple(a)} for m={m}")
    n = len(a)
    out = []
    x = 0
    for i in range(n):
        xi = m * i - a[i]
        out.append("E" * (xi - x))
        out.append("N")
        x = xi
    out.append("E" * (m * n - x))
    return "".join(out)


def enumerate_paths(n: int, m: int = 1, cap: int = 250000) -> Iterator[tuple[int, ...]]:
    """All valid area sequences for given n, m in lexicographic word order
    with N ordered before E.

    Depth-first over words, trying 'N' before 'E' at every point; the
    count is the Fuss-Catalan number binom((m+1)n, n) / (mn + 1).
    """
    require(n >= 1, "n must be positive")
    require(m >= 1, "m must be positive")
    require(
        fuss_catalan(n, m) <= cap,
        f"enumeration of {fuss_catalan(n, m)} paths exceeds cap {cap}",
    )

    def walk(norths: int, easts: int, a: list[int]) -> Iterator[tuple[int, ...]]:
        if norths == n and easts == m * n:
            yield tuple(a)
            return
        if norths < n:
            a.append(m * norths - easts)
            yield from walk(norths + 1, easts, a)
            a.pop()
        if easts < m * norths:
            yield from walk(norths, easts + 1, a)

    yield from walk(0, 0, [])


def area(a: Sequence[int]) -> int:
    return sum(a)


def dinv_sequence(a: Sequence[int]) -> tuple[int, ...]:
    """d_i = number of later rows j > i with a_j equal to a_i or a_i - 1.

    Defined for slope 1 only.
    """
    n = len(a)
    return tuple(
        sum(1 for j in range(i + 1, n) if a[j] in (a[i], a[i] - 1)) for i in range(n)
    )


def dinv(a: Sequence[int]) -> int:
    return sum(dinv_sequence(a))


def _heights(word: str) -> list[int]:
    """heights[c] = number of north steps strictly before the (c+1)-th east."""
    h = []
    norths = 0
    for ch in word:
        if ch == "N":
            norths += 1
        else:
            h.append(norths)
    return h


def bounce(a: Sequence[int]) -> int:
    """Haglund bounce for slope 1: drop the ball at the origin, let it run
    north to the path and east to the diagonal, and score n - j for every
    intermediate diagonal touch at column j."""
    n = len(a)
    heights = _heights(area_sequence_to_word(a, 1))
    total = 0
    j = 0
    while True:
        nj = heights[j] if j < n else n
        if nj <= j:
            raise AssertionError("bounce walk failed to advance")
        j = nj
        if j >= n:
            return total
        total += n - j


def loehr_bounce(a: Sequence[int], m: int = 1) -> int:
    """Generalized bounce for slope m.

    The walk alternates vertical runs v_k (north to the path) and
    horizontal runs of length v_k + v_{k-1} + ... + v_{k-m+1}; the score
    is sum of k * v_k.  Individual v_k may be zero, but a valid path
    never yields m consecutive zero runs, which guarantees progress.
    """
    n = len(a)
    heights = _heights(area_sequence_to_word(a, m))
    x = y = 0
    k = 0
    window = [0] * (m - 1)
    total = 0
    zero_streak = 0
    while y < n:
        v = heights[x] - y
        if v < 0 or (v == 0 and zero_streak >= m - 1):
            raise AssertionError("bounce walk failed to advance")
        zero_streak = zero_streak + 1 if v == 0 else 0
        total += k * v
        y += v
        window.append(v)
        x += sum(window[-m:])
        k += 1
    return total


def partition_above(a: Sequence[int], m: int = 1) -> tuple[int, ...]:
    """Partition of the cells above and left of the path inside the box,
    rows read from the top row down; zero rows stripped.

    For slope 1 its size is binomial(n,2) - area."""
    word = area_sequence_to_word(a, m)
    xs = []
    x = 0
    for ch in word:
        if ch == "N":
            xs.append(x)
        else:
            x += 1
    return tuple(xi for xi in reversed(xs) if xi > 0)


def stats(a: Sequence[int], m: int = 1) -> PathStats:
    a = tuple(a)
    if not is_valid_area_sequence(a, m):
        raise ValueError(f"invalid area sequence {a} for m={m}")
    ds = dinv_sequence(a) if m == 1 else None
    return PathStats(
        m=m,
        area_sequence=a,
        word=area_sequence_to_word(a, m),
        area=area(a),
        dinv=sum(ds) if ds is not None else None,
        dinv_sequence=ds,
        bounce=bounce(a) if m == 1 else loehr_bounce(a, m),
        partition_above=partition_above(a, m),
    )
