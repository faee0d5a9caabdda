"""Small shared helpers: size caps, classical counts, permutation utilities."""

from __future__ import annotations

import math
from functools import lru_cache
from itertools import permutations
from typing import Iterator, Sequence


class CapExceeded(Exception):
    """Raised when a request exceeds a hard size cap instead of hanging."""


def require(condition: bool, message: str) -> None:
    if not condition:
        raise CapExceeded(message)


def catalan(n: int) -> int:
    """Catalan number C_n = binom(2n, n) / (n + 1)."""
    return math.comb(2 * n, n) // (n + 1)


def fuss_catalan(n: int, m: int) -> int:
    """Fuss-Catalan number binom((m+1)n, n) / (mn + 1)."""
    return math.comb((m + 1) * n, n) // (m * n + 1)


def compose(tau: Sequence[int], sigma: Sequence[int]) -> tuple[int, ...]:
    """Composition tau after sigma in one-line notation (1-based)."""
    return tuple(tau[sigma[i] - 1] for i in range(len(sigma)))


def inverse(sigma: Sequence[int]) -> tuple[int, ...]:
    inv = [0] * len(sigma)
    for i, v in enumerate(sigma, start=1):
        inv[v - 1] = i
    return tuple(inv)


@lru_cache(maxsize=None)
def signed_permutations(n: int) -> tuple[tuple[tuple[int, ...], int], ...]:
    """All of S_n with signs, cached; used by determinant expansions."""
    require(n <= 10, f"permutation table capped at n=10, got {n}")
    out = []
    for sigma in permutations(range(1, n + 1)):
        sign = 1
        for i in range(n):
            for j in range(i + 1, n):
                if sigma[i] > sigma[j]:
                    sign = -sign
        out.append((sigma, sign))
    return tuple(out)


def partitions_of(total: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """Partitions of total as non-increasing tuples, parts bounded by max_part."""
    if max_part is None:
        max_part = total
    if total == 0:
        yield ()
        return
    for first in range(min(total, max_part), 0, -1):
        for rest in partitions_of(total - first, first):
            yield (first,) + rest
