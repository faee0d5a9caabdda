"""Bivariate q,t-polynomials with integer coefficients, plus univariate
q-polynomial helpers (q-binomials, exact division).

Used for Hilbert series and path-statistic generating functions, so
coefficients are expected to be nonnegative in normal operation.
"""

from __future__ import annotations

from typing import Iterable, Mapping

QKey = tuple[int, int]


class QtPoly:
    """Finite map (q-exponent, t-exponent) -> integer coefficient."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[QKey, int] | None = None):
        self.coeffs = {k: int(v) for k, v in (coeffs or {}).items() if v != 0}

    @staticmethod
    def zero() -> "QtPoly":
        return QtPoly()

    @staticmethod
    def one() -> "QtPoly":
        return QtPoly({(0, 0): 1})

    @staticmethod
    def from_stats(pairs: Iterable[QKey]) -> "QtPoly":
        out: dict[QKey, int] = {}
        for k in pairs:
            out[k] = out.get(k, 0) + 1
        return QtPoly(out)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, QtPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other: "QtPoly") -> "QtPoly":
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0) + v
        return QtPoly(out)

    def __sub__(self, other: "QtPoly") -> "QtPoly":
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0) - v
        return QtPoly(out)

    def is_zero(self) -> bool:
        return not self.coeffs

    def at_one(self) -> int:
        """Value at q = t = 1."""
        return sum(self.coeffs.values())

    def at_t1(self) -> dict[int, int]:
        """Substitute t = 1; returns a univariate coefficient map."""
        out: dict[int, int] = {}
        for (i, j), v in self.coeffs.items():
            out[i] = out.get(i, 0) + v
        return {k: v for k, v in out.items() if v}

    def at_t_qinv(self, shift: int) -> dict[int, int]:
        """q^shift * value(q, q^-1) as a polynomial in q.

        Raises if a negative q-exponent survives, which would mean the
        shift was too small.
        """
        out: dict[int, int] = {}
        for (i, j), v in self.coeffs.items():
            e = i - j + shift
            if e < 0:
                raise ValueError(f"negative exponent {e} after shift {shift}")
            out[e] = out.get(e, 0) + v
        return {k: v for k, v in out.items() if v}

    def is_qt_symmetric(self) -> bool:
        return all(self.coeffs.get((j, i), 0) == v for (i, j), v in self.coeffs.items())

    def swap_qt(self) -> "QtPoly":
        return QtPoly({(j, i): v for (i, j), v in self.coeffs.items()})

    def to_text(self) -> str:
        """Descending lexicographic order on (q-exponent, t-exponent)."""
        if not self.coeffs:
            return "0"
        pieces = []
        for (i, j) in sorted(self.coeffs, reverse=True):
            c = self.coeffs[(i, j)]
            body = "*".join(
                ([f"q^{i}" if i > 1 else "q"] if i else [])
                + ([f"t^{j}" if j > 1 else "t"] if j else [])
            )
            if not body:
                body = str(abs(c))
            elif abs(c) != 1:
                body = f"{abs(c)}*{body}"
            if not pieces:
                pieces.append(f"-{body}" if c < 0 else body)
            else:
                pieces.append(f"- {body}" if c < 0 else f"+ {body}")
        return " ".join(pieces)

    def __repr__(self) -> str:
        return f"QtPoly({self.to_text()!r})"

    def to_json_dict(self) -> list[list[int]]:
        return [[i, j, v] for (i, j), v in sorted(self.coeffs.items(), reverse=True)]


# ------------------------------------------------------- univariate helpers


def q_text(coeffs: Mapping[int, int]) -> str:
    """Ascending-exponent rendering of a q-polynomial, e.g. 1 + 2*q + q^3."""
    items = sorted((k, v) for k, v in coeffs.items() if v)
    if not items:
        return "0"
    pieces = []
    for e, c in items:
        body = "1" if e == 0 else ("q" if e == 1 else f"q^{e}")
        if e > 0 and abs(c) != 1:
            body = f"{abs(c)}*{body}"
        elif e == 0:
            body = str(abs(c))
        if not pieces:
            pieces.append(f"-{body}" if c < 0 else body)
        else:
            pieces.append(f"- {body}" if c < 0 else f"+ {body}")
    return " ".join(pieces)


def q_mul(a: Mapping[int, int], b: Mapping[int, int]) -> dict[int, int]:
    out: dict[int, int] = {}
    for i, u in a.items():
        for j, v in b.items():
            out[i + j] = out.get(i + j, 0) + u * v
    return {k: v for k, v in out.items() if v}


def q_add(a: Mapping[int, int], b: Mapping[int, int]) -> dict[int, int]:
    out = dict(a)
    for k, v in b.items():
        out[k] = out.get(k, 0) + v
    return {k: v for k, v in out.items() if v}


def q_shift(a: Mapping[int, int], s: int) -> dict[int, int]:
    return {k + s: v for k, v in a.items()}


def q_int(k: int) -> dict[int, int]:
    """[k]_q = 1 + q + ... + q^(k-1)."""
    return {i: 1 for i in range(k)}


def q_binomial(n: int, k: int) -> dict[int, int]:
    """Gaussian binomial coefficient via the Pascal recurrence."""
    if k < 0 or k > n:
        return {}
    row: list[dict[int, int]] = [{0: 1}] + [{} for _ in range(k)]
    for i in range(1, n + 1):
        hi = min(i, k)
        for j in range(hi, 0, -1):
            row[j] = q_add(row[j], q_shift(row[j - 1], i - j))
    return row[k]


def q_divide_exact(num: Mapping[int, int], den: Mapping[int, int]) -> dict[int, int]:
    """Exact univariate division; raises when the remainder is nonzero."""
    num = {k: v for k, v in num.items() if v}
    den = {k: v for k, v in den.items() if v}
    if not den:
        raise ZeroDivisionError("division by zero polynomial")
    dlead = max(den)
    dcoef = den[dlead]
    quo: dict[int, int] = {}
    rem = dict(num)
    while rem:
        rlead = max(rem)
        if rlead < dlead:
            raise ValueError("inexact polynomial division")
        c, r = divmod(rem[rlead], dcoef)
        if r:
            raise ValueError("inexact polynomial division")
        e = rlead - dlead
        quo[e] = c
        for k, v in den.items():
            w = rem.get(k + e, 0) - c * v
            if w:
                rem[k + e] = w
            elif k + e in rem:
                del rem[k + e]
    return quo
