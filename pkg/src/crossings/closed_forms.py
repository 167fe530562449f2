"""Closed-form frequency vectors, expectations and variances for the special
families, used to cross-validate the general machinery and to evaluate at
large n cheaply."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .product_types import PRODUCT_TYPES, TYPE_VERTEX_COUNT, FreqVector

CLOSED_FAMILIES = (
    "complete",
    "complete_bipartite",
    "cycle",
    "one_regular",
    "star",
    "quasi_star",
    "linear_tree",
    "star_plus_isolated",
)


def _binom(a: int, b: int) -> int:
    # binom(a, b) = 0 outside 0 <= b <= a, so each formula holds for all n
    if b < 0 or a < b:
        return 0
    return math.comb(a, b)


@dataclass(frozen=True)
class FamilySpec:
    """A special family plus its size parameters.

    `n` is the vertex count (for complete_bipartite, n = n1 + n2 with the
    partition sizes in n1/n2; for star_plus_isolated, `lam` is the star size).
    """

    family: str
    n: int = 0
    n1: int | None = None
    n2: int | None = None
    lam: int | None = None

    def __post_init__(self):
        f = self.family
        if f not in CLOSED_FAMILIES:
            raise ValueError(f"unknown family {f!r}")
        if f == "complete_bipartite":
            if self.n1 is None or self.n2 is None:
                raise ValueError("complete_bipartite requires n1 and n2")
            if self.n1 < 1 or self.n2 < 1:
                raise ValueError("complete_bipartite requires n1, n2 >= 1")
            object.__setattr__(self, "n", self.n1 + self.n2)
            return
        if self.n < 1:
            raise ValueError(f"{f} requires n >= 1")
        if f == "cycle" and self.n < 3:
            raise ValueError("cycle requires n >= 3")
        if f == "one_regular" and (self.n % 2 or self.n < 2):
            raise ValueError("one_regular requires even n >= 2")
        if f == "quasi_star" and self.n < 4:
            raise ValueError("quasi_star requires n >= 4")
        if f == "star_plus_isolated":
            if self.lam is None:
                raise ValueError("star_plus_isolated requires lam")
            if not 0 <= self.lam <= self.n:
                raise ValueError("star size must be within 0..n")


def closed_size_q(spec: FamilySpec) -> int:
    f, n = spec.family, spec.n
    if f == "complete":
        return 3 * _binom(n, 4)
    if f == "complete_bipartite":
        return 2 * _binom(spec.n1, 2) * _binom(spec.n2, 2)
    if f == "cycle":
        return n * (n - 3) // 2
    if f == "one_regular":
        return _binom(n // 2, 2)
    if f == "quasi_star":
        return n - 3
    if f == "linear_tree":
        return _binom(n - 2, 2)
    return 0  # star, star_plus_isolated


def closed_freq(spec: FamilySpec) -> FreqVector:
    """Exact frequency vector from the per-family closed formulas.

    Each formula is only meaningful for n >= |v_w| (the type's vertex
    count); below that threshold every count is zero, applied as a final
    mask (the cycle family needs it: its f01 expression is positive at
    n = 4).
    """
    f, n = spec.family, spec.n
    if f in ("star", "star_plus_isolated"):
        counts = dict.fromkeys(PRODUCT_TYPES, 0)
    elif f == "complete":
        counts = {
            "00": 630 * _binom(n, 8),
            "24": 3 * _binom(n, 4),
            "13": 60 * _binom(n, 5),
            "12": 90 * _binom(n, 6),
            "04": 6 * _binom(n, 4),
            "03": 120 * _binom(n, 5),
            "021": 360 * _binom(n, 6),
            "022": 360 * _binom(n, 6),
            "01": 1260 * _binom(n, 7),
        }
    elif f == "complete_bipartite":
        n1, n2 = spec.n1, spec.n2
        counts = {
            "00": 144 * _binom(n1, 4) * _binom(n2, 4),
            "24": 2 * _binom(n1, 2) * _binom(n2, 2),
            "13": 12 * _binom(n1, 3) * _binom(n2, 2)
            + 12 * _binom(n1, 2) * _binom(n2, 3),
            "12": 36 * _binom(n1, 3) * _binom(n2, 3),
            "04": 2 * _binom(n1, 2) * _binom(n2, 2),
            "03": 12 * _binom(n1, 3) * _binom(n2, 2)
            + 12 * _binom(n1, 2) * _binom(n2, 3),
            "021": 72 * _binom(n1, 3) * _binom(n2, 3),
            "022": 24 * _binom(n1, 2) * _binom(n2, 4)
            + 24 * _binom(n1, 4) * _binom(n2, 2)
            + 36 * _binom(n1, 3) * _binom(n2, 3),
            "01": 144 * _binom(n1, 4) * _binom(n2, 3)
            + 144 * _binom(n1, 3) * _binom(n2, 4),
        }
    elif f == "one_regular":
        hm = n // 2
        counts = {
            "00": 6 * _binom(hm, 4),
            "24": _binom(hm, 2),
            "13": 0,
            "12": 6 * _binom(hm, 3),
            "04": 0, "03": 0, "021": 0, "022": 0, "01": 0,
        }
    elif f == "quasi_star":
        counts = {
            "00": 0,
            "24": max(n - 3, 0),
            "13": max(n - 3, 0) * max(n - 4, 0),
            "12": 0, "04": 0, "03": 0, "021": 0, "022": 0, "01": 0,
        }
    elif f == "cycle":
        f00 = 3 * n * _binom(n - 5, 3)
        assert f00 % 2 == 0
        counts = {
            "00": f00 // 2,
            "24": n * (n - 3) // 2,
            "13": 2 * n * (n - 4),
            "12": n * (n - 4) * (n - 5),
            "04": 2 if n == 4 else 0,
            "03": 2 * n,
            "021": 2 * n * (n - 5),
            "022": 2 * n * (n - 5),
            "01": 2 * n * (n - 5) * (n - 6),
        }
    elif f == "linear_tree":
        counts = {
            "00": 6 * _binom(n - 4, 4),
            "24": _binom(n - 2, 2),
            "13": 4 * _binom(n - 3, 2),
            "12": 6 * _binom(n - 3, 3),
            "04": 0,
            "03": max(2 * n - 8, 0),
            "021": 4 * _binom(n - 4, 2),
            "022": 4 * _binom(n - 4, 2),
            "01": 12 * _binom(n - 4, 3),
        }
    else:  # pragma: no cover
        raise ValueError(f"unknown family {f!r}")
    for code in PRODUCT_TYPES:
        if n < TYPE_VERTEX_COUNT[code]:
            counts[code] = 0
    return FreqVector.from_dict(counts)


def closed_expectation(spec: FamilySpec) -> Fraction:
    """E[C] = |Q|/3 via the closed |Q| formulas."""
    return Fraction(closed_size_q(spec), 3)


def closed_variance(spec: FamilySpec) -> Fraction:
    """Var[C] per family.

    Zero for n <= 3 everywhere; cycle n = 4 is the 2/9 special case. The
    cycle and linear-tree polynomials are verified against exhaustive
    enumeration over all n! arrangements and against the type-frequency
    expansion across the whole supported range.
    """
    f, n = spec.family, spec.n
    if f in ("star", "star_plus_isolated", "complete"):
        return Fraction(0)
    if f == "complete_bipartite":
        n1, n2 = spec.n1, spec.n2
        s = n1 + n2
        return Fraction(_binom(n1, 2) * _binom(n2, 2) * (s * s + s), 90)
    if n <= 3:
        return Fraction(0)
    if f == "one_regular":
        return Fraction((n - 2) * n * (n + 6), 360)
    if f == "quasi_star":
        return Fraction(n * (n - 3), 18)
    if f == "cycle":
        if n == 4:
            return Fraction(2, 9)
        return Fraction(n * (2 * n * n + n - 30), 90)
    if f == "linear_tree":
        return Fraction(2 * n**3 - 5 * n**2 - 22 * n + 60, 90)
    raise ValueError(f"unknown family {f!r}")  # pragma: no cover
