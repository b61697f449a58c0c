"""Exact decisions in H(0;n) = <a, b | (ab)^n>.

The group is the free product Z * Z/n with ``a`` generating Z and
``x = ab`` generating Z/n (so ``b = a^-1 x``).  Everything here is decided
from free-product normal forms, except :func:`dehn_reduce`, which works on
the presentation directly and serves as an independent check.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import gcd
from typing import Iterable

from . import kernels
from .words import Word, _rotate

__all__ = [
    "NormalForm",
    "CyclicNormalForm",
    "ElementClass",
    "to_normal_form",
    "to_cyclic_normal_form",
    "is_trivial",
    "conjugacy_key",
    "are_conjugate",
    "classify",
    "dehn_reduce",
    "symmetrized_closure",
    "pieces",
]

A, X = 0, 1
_FACTOR_NAME = {A: "a", X: "x"}


def _as_word(w) -> Word:
    return w if isinstance(w, Word) else Word(w)


def _check_index(n: int) -> None:
    if n < 2:
        raise ValueError(f"index n must be >= 2, got {n}")


def _mul_syllables(left: Iterable, right: Iterable, n: int) -> tuple:
    out = list(left)
    for f, e in right:
        if f == X:
            e %= n
        if e == 0:
            continue
        if out and out[-1][0] == f:
            e += out[-1][1]
            if f == X:
                e %= n
            out.pop()
            if e:
                out.append((f, e))
        else:
            out.append((f, e))
    return tuple(out)


@dataclass(frozen=True)
class NormalForm:
    """Alternating syllables ``(factor, exponent)``; factor 0 is ``a``, 1 is ``x``.

    ``x`` exponents live in ``1..n-1``; ``a`` exponents are nonzero ints.
    """

    syllables: tuple[tuple[int, int], ...]
    n: int

    def __post_init__(self):
        syl = tuple((int(f), int(e)) for f, e in self.syllables)
        for i, (f, e) in enumerate(syl):
            if f == A and e == 0 or f == X and not 1 <= e <= self.n - 1 or f not in (A, X):
                raise ValueError(f"bad syllable {(f, e)} for n={self.n}")
            if i and syl[i - 1][0] == f:
                raise ValueError("syllables must alternate between factors")
        object.__setattr__(self, "syllables", syl)

    def __len__(self):
        return len(self.syllables)

    def __bool__(self):
        return bool(self.syllables)

    @classmethod
    def _trusted(cls, syllables: tuple, n: int) -> "NormalForm":
        # skips validation; for syllables produced by the kernels or _mul_syllables
        obj = object.__new__(cls)
        object.__setattr__(obj, "syllables", syllables)
        object.__setattr__(obj, "n", n)
        return obj

    def __mul__(self, other: "NormalForm") -> "NormalForm":
        if self.n != other.n:
            raise ValueError("index mismatch")
        return NormalForm._trusted(_mul_syllables(self.syllables, other.syllables, self.n), self.n)

    def __invert__(self) -> "NormalForm":
        inv = _mul_syllables((), [(f, -e) for f, e in reversed(self.syllables)], self.n)
        return NormalForm._trusted(inv, self.n)

    def to_word(self) -> Word:
        """A word in a, b representing this element (``x`` written as ``ab``)."""
        parts = []
        for f, e in self.syllables:
            if f == A:
                parts.append("a" * e if e > 0 else "A" * -e)
            else:
                parts.append("ab" * e)
        return Word("".join(parts))

    def __str__(self):
        if not self.syllables:
            return "1"
        return " ".join(f"{_FACTOR_NAME[f]}^{e}" for f, e in self.syllables)

    def to_json(self) -> list:
        return [[_FACTOR_NAME[f], e] for f, e in self.syllables]


@dataclass(frozen=True, eq=False)
class CyclicNormalForm:
    """A cyclically reduced normal form, compared up to rotation."""

    syllables: tuple[tuple[int, int], ...]
    n: int

    def __post_init__(self):
        syl = NormalForm(self.syllables, self.n).syllables
        if len(syl) >= 2 and syl[0][0] == syl[-1][0]:
            raise ValueError("first and last syllables must lie in different factors")
        object.__setattr__(self, "syllables", syl)

    @classmethod
    def _trusted(cls, syllables: tuple, n: int) -> "CyclicNormalForm":
        obj = object.__new__(cls)
        object.__setattr__(obj, "syllables", syllables)
        object.__setattr__(obj, "n", n)
        return obj

    @cached_property
    def key(self) -> tuple:
        # injective on syllables: a^e -> 2e (e != 0), x^m -> 2m + 1
        codes = [2 * e + f for f, e in self.syllables]
        return tuple(_rotate(codes, kernels.least_rotation(codes)))

    def __eq__(self, other):
        if not isinstance(other, CyclicNormalForm):
            return NotImplemented
        return self.n == other.n and self.key == other.key

    def __hash__(self):
        return hash((self.n, self.key))

    def __len__(self):
        return len(self.syllables)

    def __str__(self):
        return "(" + str(NormalForm(self.syllables, self.n)) + ")"

    def to_json(self) -> list:
        return [[_FACTOR_NAME[f], e] for f, e in self.syllables]


@dataclass(frozen=True)
class ElementClass:
    """One of ``trivial``, ``torsion``, ``peripheral`` or ``generic``.

    ``order`` is set for torsion; ``base`` ('a' or 'b') and ``power`` for
    peripheral elements, meaning conjugate to ``base ** power``.
    """

    kind: str
    order: int | None = None
    base: str | None = None
    power: int | None = None

    def to_json(self) -> dict:
        detail = {}
        if self.kind == "torsion":
            detail = {"order": self.order}
        elif self.kind == "peripheral":
            detail = {"base": self.base, "power": self.power}
        return {"class": self.kind, "detail": detail}

    def __str__(self):
        if self.kind == "torsion":
            return f"torsion({self.order})"
        if self.kind == "peripheral":
            return f"peripheral({self.base}, {self.power})"
        return self.kind


def to_normal_form(w, n: int) -> NormalForm:
    _check_index(n)
    return NormalForm._trusted(tuple(kernels.normal_form(_as_word(w).letters, n)), n)


def _cyclic_split(syl, n):
    """Peel same-factor ends: returns (cyclic syllables, conjugator syllables)."""
    syl = list(syl)
    conj = []
    lo = 0
    while len(syl) - lo >= 2 and syl[lo][0] == syl[-1][0]:
        f, c = syl[lo]
        lo += 1
        e = syl[-1][1] + c
        if f == X:
            e %= n
        syl.pop()
        if e:
            syl.append((f, e))
        # w = c * rest = c * (rest * c) * c^-1
        conj.append((f, c))
    core = syl[lo:]
    return core, _mul_syllables((), conj, n)


def to_cyclic_normal_form(w, n: int) -> tuple[CyclicNormalForm, NormalForm]:
    """Write ``w = g * c * g^-1`` with ``c`` cyclically reduced; returns (c, g)."""
    nf = to_normal_form(w, n)
    core, conj = _cyclic_split(nf.syllables, n)
    return CyclicNormalForm._trusted(tuple(core), n), NormalForm._trusted(conj, n)


def is_trivial(w, n: int) -> bool:
    return not to_normal_form(w, n)


def conjugacy_key(w, n: int) -> tuple:
    """A hashable invariant with ``key(u) == key(v)`` iff u, v are conjugate."""
    return to_cyclic_normal_form(w, n)[0].key


def are_conjugate(w1, w2, n: int) -> bool:
    """Oriented conjugacy in H(0;n).

    Cyclically reduced forms of length >= 2 are conjugate iff they are
    cyclic permutations of one another; shorter ones iff they are equal.
    """
    c1 = to_cyclic_normal_form(w1, n)[0]
    c2 = to_cyclic_normal_form(w2, n)[0]
    if len(c1) != len(c2):
        return False
    if len(c1) <= 1:
        return c1.syllables == c2.syllables
    # both sides rotated to their least rotation
    return c1.key == c2.key


def classify(w, n: int) -> ElementClass:
    cyc, _ = to_cyclic_normal_form(w, n)
    syl = cyc.syllables
    if not syl:
        return ElementClass("trivial")
    if len(syl) == 1:
        f, e = syl[0]
        if f == X:
            return ElementClass("torsion", order=n // gcd(n, e))
        return ElementClass("peripheral", base="a", power=e)
    # b = a^-1 x, b^-1 = x^-1 a
    t = len(syl) // 2
    if all((f == A and e == -1) or (f == X and e == 1) for f, e in syl):
        return ElementClass("peripheral", base="b", power=t)
    if all((f == A and e == 1) or (f == X and e == n - 1) for f, e in syl):
        return ElementClass("peripheral", base="b", power=-t)
    return ElementClass("generic")


def dehn_reduce(w, n: int) -> Word:
    """Dehn's algorithm for the relator (ab)^n on the cyclic word of ``w``.

    The result is empty iff ``w`` is trivial in H(0;n).  It is the
    cyclically reduced fixed point, so it is only defined up to conjugacy.
    """
    _check_index(n)
    return Word(kernels.dehn_reduce(_as_word(w).letters, n))


def symmetrized_closure(r) -> frozenset[str]:
    """All cyclic permutations of ``r`` and ``r^-1`` (``r`` cyclically reduced)."""
    s = _as_word(r).letters
    if kernels.cyclic_core(s):
        raise ValueError(f"{s} is not cyclically reduced")
    inv = s[::-1].swapcase()
    return frozenset(v[i:] + v[:i] for v in (s, inv) for i in range(len(v)))


def pieces(r) -> frozenset[str]:
    """Every nonempty common prefix of two distinct words of the closure of ``r``."""
    rel = sorted(symmetrized_closure(r))
    found = set()
    for i, u in enumerate(rel):
        for v in rel[i + 1:]:
            k = 0
            while k < min(len(u), len(v)) and u[k] == v[k]:
                k += 1
            found.update(u[:j] for j in range(1, k + 1))
    return frozenset(found)
