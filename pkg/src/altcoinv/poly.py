"""Exact sparse polynomials in the 2n diagonal variables x_1..x_n, y_1..y_n.

A polynomial is a dict mapping exponent keys to nonzero Fraction
coefficients.  A key is a pair of length-n integer tuples (xexp, yexp),
so the monomial x_1^2*y_3 at n=3 has key ((2,0,0),(0,0,1)).  All
arithmetic is exact over the rationals.

The canonical term order is graded lexicographic with the x-block
before the y-block and lower variable index first; printing, JSON
serialization and all golden outputs sort terms by this order, largest
term first.
"""

from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from typing import Iterable, Iterator, Mapping, Sequence

from .util import require

Key = tuple[tuple[int, ...], tuple[int, ...]]
BiDegree = tuple[int, int]


def term_sort_key(key: Key) -> tuple[int, tuple[int, ...]]:
    """Sort key realizing the canonical order (sort descending)."""
    xe, ye = key
    return (sum(xe) + sum(ye), xe + ye)


@dataclass(frozen=True)
class Monomial:
    """A single monomial x^xexp * y^yexp in n diagonal variable pairs."""

    n: int
    xexp: tuple[int, ...]
    yexp: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.xexp) != self.n or len(self.yexp) != self.n:
            raise ValueError("exponent tuples must have length n")
        if any(e < 0 for e in self.xexp + self.yexp):
            raise ValueError("exponents must be nonnegative")

    @property
    def key(self) -> Key:
        return (self.xexp, self.yexp)

    def bidegree(self) -> BiDegree:
        return (sum(self.xexp), sum(self.yexp))

    def mul(self, other: "Monomial") -> "Monomial":
        if other.n != self.n:
            raise ValueError("mismatched n")
        return Monomial(
            self.n,
            tuple(a + b for a, b in zip(self.xexp, other.xexp)),
            tuple(a + b for a, b in zip(self.yexp, other.yexp)),
        )

    def to_poly(self, coeff: Fraction | int = 1) -> "Poly":
        return Poly(self.n, {self.key: Fraction(coeff)})

    def __str__(self) -> str:
        parts = []
        for name, exps in (("x", self.xexp), ("y", self.yexp)):
            for i, e in enumerate(exps, start=1):
                if e == 1:
                    parts.append(f"{name}{i}")
                elif e > 1:
                    parts.append(f"{name}{i}^{e}")
        return "*".join(parts) if parts else "1"


class Poly:
    """Sparse polynomial over Q.  Treat instances as immutable."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[Key, Fraction | int] | None = None):
        if n < 1:
            raise ValueError("need at least one variable pair")
        self.n = n
        clean: dict[Key, Fraction] = {}
        if terms:
            for key, c in terms.items():
                c = Fraction(c)
                if c != 0:
                    xe, ye = key
                    if len(xe) != n or len(ye) != n:
                        raise ValueError("exponent tuple of wrong length")
                    clean[(tuple(xe), tuple(ye))] = c
        self.terms = clean

    # ---------------------------------------------------------------- basics

    @staticmethod
    def zero(n: int) -> "Poly":
        return Poly(n)

    @staticmethod
    def constant(n: int, c: Fraction | int) -> "Poly":
        zero = (0,) * n
        return Poly(n, {(zero, zero): Fraction(c)})

    @staticmethod
    def variable(n: int, kind: str, i: int) -> "Poly":
        """The variable x_i or y_i (kind is "x" or "y", i is 1-based)."""
        if kind not in ("x", "y") or not 1 <= i <= n:
            raise ValueError(f"no variable {kind}{i} for n={n}")
        e = tuple(1 if j == i - 1 else 0 for j in range(n))
        zero = (0,) * n
        key = (e, zero) if kind == "x" else (zero, e)
        return Poly(n, {key: Fraction(1)})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Poly) and self.n == other.n and self.terms == other.terms

    def __hash__(self):  # pragma: no cover - polys are not meant to be dict keys
        raise TypeError("Poly is unhashable")

    def __repr__(self) -> str:
        return f"Poly({self.n}, {to_text(self)!r})"

    # ------------------------------------------------------------ arithmetic

    def __add__(self, other: "Poly") -> "Poly":
        return add(self, other)

    def __sub__(self, other: "Poly") -> "Poly":
        return sub(self, other)

    def __neg__(self) -> "Poly":
        return scalar_mul(self, -1)

    def __mul__(self, other):
        if isinstance(other, Poly):
            return mul(self, other)
        return scalar_mul(self, other)

    def __rmul__(self, other):
        return scalar_mul(self, other)


def _check_same_n(f: Poly, g: Poly) -> None:
    if f.n != g.n:
        raise ValueError("polynomials live in different variable counts")


def add(f: Poly, g: Poly) -> Poly:
    _check_same_n(f, g)
    out = dict(f.terms)
    for key, c in g.terms.items():
        s = out.get(key, Fraction(0)) + c
        if s:
            out[key] = s
        elif key in out:
            del out[key]
    return Poly(f.n, out)


def sub(f: Poly, g: Poly) -> Poly:
    return add(f, scalar_mul(g, -1))


def scalar_mul(f: Poly, c: Fraction | int) -> Poly:
    c = Fraction(c)
    if c == 0:
        return Poly.zero(f.n)
    return Poly(f.n, {key: v * c for key, v in f.terms.items()})


def mul(f: Poly, g: Poly) -> Poly:
    """Exact product, merging like terms."""
    _check_same_n(f, g)
    out: dict[Key, Fraction] = {}
    for (xa, ya), ca in f.terms.items():
        for (xb, yb), cb in g.terms.items():
            key = (
                tuple(a + b for a, b in zip(xa, xb)),
                tuple(a + b for a, b in zip(ya, yb)),
            )
            s = out.get(key, Fraction(0)) + ca * cb
            if s:
                out[key] = s
            elif key in out:
                del out[key]
    return Poly(f.n, out)


def partial(f: Poly, kind: str, i: int, order: int = 1) -> Poly:
    """order-th partial derivative with respect to x_i or y_i.

    Coefficients pick up exact falling factorials e(e-1)...(e-order+1).
    """
    if kind not in ("x", "y") or not 1 <= i <= f.n:
        raise ValueError(f"no variable {kind}{i} for n={f.n}")
    if order < 0:
        raise ValueError("order must be nonnegative")
    if order == 0:
        return f
    idx = i - 1
    out: dict[Key, Fraction] = {}
    for (xe, ye), c in f.terms.items():
        e = xe[idx] if kind == "x" else ye[idx]
        if e < order:
            continue
        coeff = c * math.perm(e, order)
        if kind == "x":
            key = (xe[:idx] + (e - order,) + xe[idx + 1 :], ye)
        else:
            key = (xe, ye[:idx] + (e - order,) + ye[idx + 1 :])
        s = out.get(key, Fraction(0)) + coeff
        if s:
            out[key] = s
        elif key in out:
            del out[key]
    return Poly(f.n, out)


def total_degree(f: Poly) -> int:
    """Total degree; zero polynomial reports -1."""
    if not f.terms:
        return -1
    return max(sum(xe) + sum(ye) for xe, ye in f.terms)


def bidegree(f: Poly) -> BiDegree | None:
    """The (x-degree, y-degree) pair if f is bihomogeneous, else None."""
    degs = {(sum(xe), sum(ye)) for xe, ye in f.terms}
    if len(degs) == 1:
        return degs.pop()
    return None


def bidegree_split(f: Poly) -> dict[BiDegree, Poly]:
    """Split f into its bihomogeneous components."""
    buckets: dict[BiDegree, dict[Key, Fraction]] = {}
    for key, c in f.terms.items():
        d = (sum(key[0]), sum(key[1]))
        buckets.setdefault(d, {})[key] = c
    return {d: Poly(f.n, t) for d, t in sorted(buckets.items())}


# --------------------------------------------------------------- group action


def permutation_sign(sigma: Sequence[int]) -> int:
    """Sign of a permutation given in one-line notation (1-based images)."""
    sign = 1
    for i in range(len(sigma)):
        for j in range(i + 1, len(sigma)):
            if sigma[i] > sigma[j]:
                sign = -sign
    return sign


def permute(f: Poly, sigma: Sequence[int]) -> Poly:
    """Diagonal action: substitute x_i -> x_{sigma(i)} and y_i -> y_{sigma(i)}.

    sigma is in one-line notation, 1-based: sigma[i-1] is the image of i.
    Satisfies permute(permute(f, s), t) == permute(f, compose(t, s)).
    """
    if sorted(sigma) != list(range(1, f.n + 1)):
        raise ValueError("sigma must be a permutation of 1..n")
    out: dict[Key, Fraction] = {}
    for (xe, ye), c in f.terms.items():
        nx = [0] * f.n
        ny = [0] * f.n
        for i in range(f.n):
            nx[sigma[i] - 1] = xe[i]
            ny[sigma[i] - 1] = ye[i]
        out[(tuple(nx), tuple(ny))] = c
    return Poly(f.n, out)


def antisymmetrize(f: Poly, cap: int = 9) -> Poly:
    """Unnormalized antisymmetrization: sum of sgn(sigma) * sigma(f) over S_n."""
    require(f.n <= cap, f"antisymmetrize capped at n={cap}")
    out = Poly.zero(f.n)
    for sigma in permutations(range(1, f.n + 1)):
        out = add(out, scalar_mul(permute(f, sigma), permutation_sign(sigma)))
    return out


def is_alternating(f: Poly) -> bool:
    """True when every adjacent transposition negates f."""
    for i in range(1, f.n):
        sigma = list(range(1, f.n + 1))
        sigma[i - 1], sigma[i] = sigma[i], sigma[i - 1]
        if permute(f, sigma) != scalar_mul(f, -1):
            return False
    return True


# ------------------------------------------------------------- inner product


def inner_product(f: Poly, g: Poly) -> Fraction:
    """Apolarity pairing <f,g> = f(dx,dy) g evaluated at 0.

    On monomials the pairing is diagonal: equal exponent keys pair to the
    product of factorials of the exponents, everything else to zero.
    """
    _check_same_n(f, g)
    small, large = (f.terms, g.terms) if len(f.terms) <= len(g.terms) else (g.terms, f.terms)
    total = Fraction(0)
    for key, c in small.items():
        d = large.get(key)
        if d is None:
            continue
        xe, ye = key
        scale = 1
        for e in xe:
            scale *= math.factorial(e)
        for e in ye:
            scale *= math.factorial(e)
        total += c * d * scale
    return total


# -------------------------------------------------------------- serialization


def canonical_terms(f: Poly) -> list[tuple[Key, Fraction]]:
    """Terms sorted in canonical order, largest first."""
    return sorted(f.terms.items(), key=lambda kv: term_sort_key(kv[0]), reverse=True)


def _format_term(key: Key, c: Fraction) -> str:
    mono = Monomial(len(key[0]), key[0], key[1])
    mstr = str(mono)
    mag = abs(c)
    if mstr == "1":
        return str(mag)
    if mag == 1:
        return mstr
    return f"{mag}*{mstr}"


def to_text(f: Poly) -> str:
    """Canonical text form, e.g. '3/2*x1^2*y3 - y2'."""
    items = canonical_terms(f)
    if not items:
        return "0"
    pieces = []
    for idx, (key, c) in enumerate(items):
        body = _format_term(key, c)
        if idx == 0:
            pieces.append(f"-{body}" if c < 0 else body)
        else:
            pieces.append(f"- {body}" if c < 0 else f"+ {body}")
    return " ".join(pieces)


_TERM_RE = re.compile(r"^(?:(\d+(?:/\d+)?)(?:\*|$))?((?:[xy]\d+(?:\^\d+)?)(?:\*[xy]\d+(?:\^\d+)?)*)?$")
_VAR_RE = re.compile(r"^([xy])(\d+)(?:\^(\d+))?$")


def parse_text(s: str, n: int) -> Poly:
    """Parse the canonical text form back into a Poly.

    Accepts any ordering of terms and redundant whitespace; round-trips
    with to_text.
    """
    s = s.strip()
    if s in ("", "0"):
        return Poly.zero(n)
    s = s.replace("-", "+-")
    if s.startswith("+"):
        s = s[1:]
    chunks = [c.strip() for c in s.split("+")]
    if any(not c for c in chunks):
        raise ValueError(f"empty term in {s!r}")
    out = Poly.zero(n)
    for chunk in chunks:
        sign = 1
        if chunk.startswith("-"):
            sign = -1
            chunk = chunk[1:].strip()
        m = _TERM_RE.match(chunk.replace(" ", ""))
        if not m:
            raise ValueError(f"cannot parse term {chunk!r}")
        coeff_s, body = m.groups()
        coeff = Fraction(coeff_s) if coeff_s else Fraction(1)
        xe = [0] * n
        ye = [0] * n
        if body:
            for var in body.split("*"):
                vm = _VAR_RE.match(var)
                if not vm:
                    raise ValueError(f"cannot parse variable {var!r}")
                kind, idx_s, exp_s = vm.groups()
                idx = int(idx_s)
                if not 1 <= idx <= n:
                    raise ValueError(f"variable index {idx} out of range for n={n}")
                e = int(exp_s) if exp_s else 1
                if kind == "x":
                    xe[idx - 1] += e
                else:
                    ye[idx - 1] += e
        out = add(out, Poly(n, {(tuple(xe), tuple(ye)): sign * coeff}))
    return out


def to_json_dict(f: Poly) -> dict:
    return {
        "n": f.n,
        "terms": [
            {"c": [c.numerator, c.denominator], "x": list(xe), "y": list(ye)}
            for (xe, ye), c in canonical_terms(f)
        ],
    }


def from_json_dict(d: Mapping) -> Poly:
    n = int(d["n"])
    terms: dict[Key, Fraction] = {}
    for t in d["terms"]:
        num, den = t["c"]
        terms[(tuple(t["x"]), tuple(t["y"]))] = Fraction(num, den)
    return Poly(n, terms)


def to_json(f: Poly) -> str:
    return json.dumps(to_json_dict(f), separators=(",", ":"))


def from_json(s: str) -> Poly:
    return from_json_dict(json.loads(s))
