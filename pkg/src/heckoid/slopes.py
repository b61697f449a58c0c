"""Extended rationals (slopes) and their continued fractions.

A slope is a point of the projective line over Q: either ``q/p`` in lowest
terms with ``p > 0``, or ``∞ = 1/0``.  Arithmetic is on Python ints, so
numerators of any size are fine.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from math import gcd

__all__ = [
    "Slope",
    "INFINITY",
    "ZERO",
    "ONE",
    "ContinuedFraction",
    "continued_fraction",
    "evaluate_cf",
    "in_fundamental_interval",
    "farey_slopes",
]

_SLOPE_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*([+-]?\d+)\s*)?$")


@total_ordering
@dataclass(frozen=True, init=False)
class Slope:
    """An element ``q/p`` of Q ∪ {∞}, always stored normalized."""

    numerator: int
    denominator: int

    def __init__(self, numerator: int, denominator: int = 1):
        numerator, denominator = int(numerator), int(denominator)
        if numerator == 0 and denominator == 0:
            raise ValueError("0/0 is not a slope")
        if denominator == 0:
            numerator = 1
        else:
            g = gcd(numerator, denominator)
            if denominator < 0:
                g = -g
            numerator //= g
            denominator //= g
        object.__setattr__(self, "numerator", numerator)
        object.__setattr__(self, "denominator", denominator)

    @classmethod
    def parse(cls, text: str) -> "Slope":
        """Parse ``"q/p"``, ``"k"``, ``"∞"`` or ``"inf"``."""
        t = text.strip()
        if t in ("∞", "inf", "+inf", "-inf", "infinity", "1/0", "-1/0"):
            return INFINITY
        m = _SLOPE_RE.match(t)
        if m is None:
            raise ValueError(f"not a slope: {text!r}")
        q = int(m.group(1))
        p = int(m.group(2)) if m.group(2) is not None else 1
        return cls(q, p)

    @classmethod
    def from_fraction(cls, x: Fraction | int) -> "Slope":
        x = Fraction(x)
        return cls(x.numerator, x.denominator)

    @property
    def is_infinite(self) -> bool:
        return self.denominator == 0

    def as_fraction(self) -> Fraction:
        if self.is_infinite:
            raise ValueError("∞ has no rational value")
        return Fraction(self.numerator, self.denominator)

    def __lt__(self, other):
        if not isinstance(other, Slope):
            return NotImplemented
        # ∞ sorts after every rational
        if self.is_infinite:
            return False
        if other.is_infinite:
            return True
        return self.numerator * other.denominator < other.numerator * self.denominator

    def __str__(self):
        if self.is_infinite:
            return "∞"
        if self.denominator == 1:
            return str(self.numerator)
        return f"{self.numerator}/{self.denominator}"

    def __repr__(self):
        return f"Slope({self})"

    def to_json(self) -> str:
        return "inf" if self.is_infinite else f"{self.numerator}/{self.denominator}"


INFINITY = Slope(1, 0)
ZERO = Slope(0, 1)
ONE = Slope(1, 1)


@dataclass(frozen=True)
class ContinuedFraction:
    """``[m1, ..., mk]`` standing for ``1/(m1 + 1/(m2 + ... + 1/mk))``."""

    entries: tuple[int, ...]

    def __post_init__(self):
        e = tuple(int(m) for m in self.entries)
        if not e:
            raise ValueError("continued fraction needs at least one entry")
        if any(m < 1 for m in e):
            raise ValueError(f"entries must be positive: {e}")
        if len(e) >= 2 and e[-1] < 2:
            raise ValueError(f"last entry must be >= 2 when k >= 2: {e}")
        object.__setattr__(self, "entries", e)

    def __len__(self):
        return len(self.entries)

    def __str__(self):
        return "[" + ",".join(map(str, self.entries)) + "]"


def continued_fraction(s: Slope) -> ContinuedFraction:
    """Expand ``0 < s <= 1`` as ``[m1, ..., mk]`` with ``mk >= 2`` unless k = 1.

    >>> continued_fraction(Slope(3, 8))
    ContinuedFraction(entries=(2, 1, 2))
    """
    if s.is_infinite or s.numerator <= 0 or s.numerator > s.denominator:
        raise ValueError(f"continued_fraction needs 0 < s <= 1, got {s}")
    # Euclid on p/q: s = q/p = 1/(p/q)
    q, p = s.numerator, s.denominator
    entries = []
    while q:
        m, r = divmod(p, q)
        entries.append(m)
        p, q = q, r
    # the Euclidean expansion already ends in an entry >= 2 unless it is [1]
    return ContinuedFraction(tuple(entries))


def evaluate_cf(cf: ContinuedFraction) -> Slope:
    value = Fraction(0)
    for m in reversed(cf.entries):
        value = 1 / (m + value)
    return Slope.from_fraction(value)


def in_fundamental_interval(s: Slope, n: int) -> bool:
    """True iff ``s`` is rational and ``1/n <= s <= 1``."""
    if s.is_infinite:
        return False
    q, p = s.numerator, s.denominator
    return n * q >= p and q <= p


def farey_slopes(max_denominator: int, lo: Fraction = Fraction(0), hi: Fraction = Fraction(1)):
    """Yield every reduced ``q/p`` in ``[lo, hi]`` with ``1 <= p <= max_denominator``.

    Ordered by denominator, then numerator.
    """
    lo, hi = Fraction(lo), Fraction(hi)
    for p in range(1, max_denominator + 1):
        q_min = -((-lo.numerator * p) // lo.denominator)  # ceil(lo * p)
        q_max = (hi.numerator * p) // hi.denominator
        for q in range(q_min, q_max + 1):
            if gcd(q, p) == 1:
                yield Slope(q, p)
