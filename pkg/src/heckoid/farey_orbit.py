"""The reflection group Γ(0;n) acting on the boundary of the Farey tessellation.

Γ(0;n) is generated by three reflections, in the Farey edges <∞,0>, <∞,1>
and <0,1/n>:

    g1: x -> -x,    g2: x -> 2 - x,    g3: x -> x / (2n x - 1)

Every slope reduces to exactly one of ∞, 0 or a point of [1/n, 1].
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .slopes import INFINITY, ZERO, Slope

__all__ = [
    "BoundaryMap",
    "Step",
    "ReductionTrace",
    "generators",
    "apply",
    "apply_word",
    "step_map",
    "reduce_slope",
    "same_orbit",
]


@dataclass(frozen=True, init=False)
class BoundaryMap:
    """Integer matrix ``(a b; c d)`` with determinant ±1, acting by fractions."""

    a: int
    b: int
    c: int
    d: int
    label: str | None = field(default=None, compare=False)

    def __init__(self, a: int, b: int, c: int, d: int, label: str | None = None):
        if a * d - b * c not in (1, -1):
            raise ValueError(f"determinant of ({a},{b};{c},{d}) is not ±1")
        first = next(v for v in (a, b, c, d) if v)
        if first < 0:
            a, b, c, d = -a, -b, -c, -d
        for k, v in zip("abcd", (a, b, c, d)):
            object.__setattr__(self, k, v)
        object.__setattr__(self, "label", label)

    @property
    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    @property
    def trace(self) -> int:
        return self.a + self.d

    def __mul__(self, other: "BoundaryMap") -> "BoundaryMap":
        """Composition: ``(f * g)(s) == f(g(s))``."""
        return BoundaryMap(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def inverse(self) -> "BoundaryMap":
        return BoundaryMap(self.d, -self.b, -self.c, self.a)

    def __pow__(self, k: int) -> "BoundaryMap":
        base = self if k >= 0 else self.inverse()
        result = BoundaryMap(1, 0, 0, 1)
        k = abs(k)
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __call__(self, s: Slope) -> Slope:
        return apply(self, s)

    def __str__(self):
        m = f"({self.a},{self.b};{self.c},{self.d})"
        return f"{self.label}={m}" if self.label else m


def generators(n: int) -> tuple[BoundaryMap, BoundaryMap, BoundaryMap]:
    if n < 2:
        raise ValueError(f"index n must be >= 2, got {n}")
    return (
        BoundaryMap(-1, 0, 0, 1, "g1"),
        BoundaryMap(-1, 2, 0, 1, "g2"),
        BoundaryMap(1, 0, 2 * n, -1, "g3"),
    )


def apply(m: BoundaryMap, s: Slope) -> Slope:
    q, p = s.numerator, s.denominator
    return Slope(m.a * q + m.b * p, m.c * q + m.d * p)


def apply_word(labels: Sequence[str], s: Slope, n: int) -> Slope:
    """Apply generators named ``g1``/``g2``/``g3`` in the order listed."""
    gens = dict(zip(("g1", "g2", "g3"), generators(n)))
    for name in labels:
        s = apply(gens[name], s)
    return s


@dataclass(frozen=True)
class Step:
    """``label ** power`` applied to the previous slope gave ``result``.

    Labels: ``g1``, ``g2``, ``g3``; ``T`` = g2 g1 (x -> x + 2);
    ``g1g3`` = g1 g3 (x -> x / (1 - 2n x)).
    """

    label: str
    power: int
    result: Slope

    def to_json(self) -> dict:
        return {"map": self.label, "power": self.power, "result": self.result.to_json()}


def step_map(label: str, power: int, n: int) -> BoundaryMap:
    g1, g2, g3 = generators(n)
    base = {"g1": g1, "g2": g2, "g3": g3, "T": g2 * g1, "g1g3": g1 * g3}[label]
    return base ** power


def _expand(label: str, power: int) -> list[str]:
    if label in ("g1", "g2", "g3"):
        return [label] * (power % 2)
    if label == "T":
        unit = ["g1", "g2"] if power > 0 else ["g2", "g1"]
    else:
        unit = ["g3", "g1"] if power > 0 else ["g1", "g3"]
    return unit * abs(power)


@dataclass(frozen=True)
class ReductionTrace:
    start: Slope
    n: int
    steps: tuple[Step, ...]
    canonical: Slope
    pierces: int

    def replay(self) -> bool:
        """Re-apply every recorded map and compare with the recorded results."""
        s = self.start
        for st in self.steps:
            s = apply(step_map(st.label, st.power, self.n), s)
            if s != st.result:
                return False
        return s == self.canonical

    def generator_word(self) -> list[str]:
        """The reduction as g1/g2/g3 letters, first-applied first."""
        out = []
        for st in self.steps:
            out.extend(_expand(st.label, st.power))
        return out

    def to_json(self) -> dict:
        return {
            "start": self.start.to_json(),
            "index": self.n,
            "canonical": self.canonical.to_json(),
            "steps": [st.to_json() for st in self.steps],
        }


def _fold(q: int, p: int, steps: list) -> tuple[int, int]:
    """Move ``q/p`` (p > 0) into [0, 1] with x -> x + 2k and x -> 2 - x."""
    k, t = divmod(q, 2 * p)
    if k:
        steps.append(Step("T", -k, Slope(t, p)))
    if t > p:
        t = 2 * p - t
        steps.append(Step("g2", 1, Slope(t, p)))
    return t, p


def reduce_slope(s: Slope, n: int) -> ReductionTrace:
    """Reduce ``s`` to its representative in [1/n, 1] ∪ {∞, 0}."""
    if n < 2:
        raise ValueError(f"index n must be >= 2, got {n}")
    if not isinstance(s, Slope):
        s = Slope.parse(s) if isinstance(s, str) else Slope.from_fraction(s)
    steps: list[Step] = []
    pierces = 0
    if s.is_infinite:
        return ReductionTrace(s, n, (), INFINITY, 0)
    q, p = _fold(s.numerator, s.denominator, steps)
    two_n = 2 * n
    while q and n * q < p:
        # 0 < q/p < 1/n: pierce through <0, 1/n>
        if p > 2 * two_n * q:
            # long parabolic run around 0: (g1 g3)^m sends q/p to q/(p - 2nmq)
            m = (p - two_n * q) // (two_n * q)
            p -= m * two_n * q
            pierces += m
            steps.append(Step("g1g3", m, Slope(q, p)))
        pierces += 1
        new_p = two_n * q - p
        assert abs(new_p) < p
        if new_p == 0:
            steps.append(Step("g3", 1, INFINITY))
            return ReductionTrace(s, n, tuple(steps), INFINITY, pierces)
        r = Slope(q, new_p)
        steps.append(Step("g3", 1, r))
        q, p = r.numerator, r.denominator
        if q < 0:
            q = -q
            steps.append(Step("g1", 1, Slope(q, p)))
        q, p = _fold(q, p, steps)
    return ReductionTrace(s, n, tuple(steps), Slope(q, p) if q else ZERO, pierces)


def same_orbit(s: Slope, t: Slope, n: int) -> bool:
    return reduce_slope(s, n).canonical == reduce_slope(t, n).canonical
