"""Words in the free group F(a, b), cyclic words and cyclic S-sequences.

Letters are written compactly: ``a``, ``b`` for the generators and ``A``,
``B`` for their inverses.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from . import kernels

__all__ = [
    "Word",
    "CyclicWord",
    "SSequence",
    "free_reduce",
    "cyclic_reduce",
    "s_sequence",
    "is_alternating",
    "least_rotation",
]

_WORD_RE = re.compile(r"[abAB]*")


def least_rotation(seq: Sequence) -> int:
    """Start index of the lexicographically least rotation of ``seq``.

    ``seq`` is a string or a sequence of ints.
    """
    if isinstance(seq, str):
        seq = seq.encode("ascii")
    return kernels.least_rotation(list(seq))


def _rotate(seq, k):
    return seq[k:] + seq[:k]


@dataclass(frozen=True)
class Word:
    """A freely reduced word. The constructor reduces its input."""

    letters: str = ""

    def __post_init__(self):
        if not isinstance(self.letters, str) or not _WORD_RE.fullmatch(self.letters):
            raise ValueError(f"not a word over abAB: {self.letters!r}")
        object.__setattr__(self, "letters", kernels.free_reduce(self.letters))

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        return self.letters

    def __repr__(self):
        return f"Word({self.letters!r})"

    def __mul__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    def __invert__(self) -> "Word":
        return Word(self.letters[::-1].swapcase())

    inverse = __invert__

    def __pow__(self, k: int) -> "Word":
        if k < 0:
            return (~self) ** (-k)
        return Word(self.letters * k)

    def conjugate_by(self, g: "Word") -> "Word":
        """``g * self * g^-1``."""
        return g * self * ~g

    def exponent_sum(self, gen: str) -> int:
        return self.letters.count(gen) - self.letters.count(gen.upper())


@dataclass(frozen=True, eq=False)
class CyclicWord:
    """The class of a cyclically reduced word under cyclic shifts."""

    representative: Word

    def __post_init__(self):
        w = self.representative
        if not isinstance(w, Word):
            w = Word(w)
            object.__setattr__(self, "representative", w)
        if kernels.cyclic_core(w.letters):
            raise ValueError(f"{w} is not cyclically reduced")

    @cached_property
    def _canonical(self) -> str:
        s = self.representative.letters
        return _rotate(s, least_rotation(s))

    def __eq__(self, other):
        if not isinstance(other, CyclicWord):
            return NotImplemented
        return self._canonical == other._canonical

    def __hash__(self):
        return hash(("CyclicWord", self._canonical))

    def __len__(self):
        return len(self.representative)

    def __str__(self):
        return f"({self.representative})"

    def __repr__(self):
        return f"CyclicWord({self.representative.letters!r})"

    def rotations(self):
        s = self.representative.letters
        return [s[i:] + s[:i] for i in range(len(s))]


@dataclass(frozen=True, eq=False)
class SSequence:
    """Cyclic sequence of sign-run lengths.

    ``runs`` keeps the reading order it was built with; equality and hashing
    use :attr:`canonical`, the least rotation.
    """

    runs: tuple[int, ...]

    def __post_init__(self):
        runs = tuple(int(r) for r in self.runs)
        if not runs or any(r < 1 for r in runs):
            raise ValueError(f"runs must be positive and nonempty: {runs}")
        object.__setattr__(self, "runs", runs)

    @cached_property
    def canonical(self) -> tuple[int, ...]:
        return _rotate(self.runs, least_rotation(self.runs))

    def __eq__(self, other):
        if not isinstance(other, SSequence):
            return NotImplemented
        return self.canonical == other.canonical

    def __hash__(self):
        return hash(("SSequence", self.canonical))

    def __len__(self):
        return len(self.runs)

    def __iter__(self):
        return iter(self.runs)

    def __str__(self):
        return "((" + ",".join(map(str, self.canonical)) + "))"


def free_reduce(raw: str) -> Word:
    return Word(raw)


def cyclic_reduce(w: Word | str) -> tuple[CyclicWord, Word]:
    """Split ``w`` as ``conjugator * core * conjugator^-1`` with core cyclically reduced."""
    if not isinstance(w, Word):
        w = Word(w)
    s = w.letters
    k = kernels.cyclic_core(s)
    return CyclicWord(Word(s[k:len(s) - k])), Word(s[:k])


def s_sequence(cw: CyclicWord) -> SSequence:
    if not isinstance(cw, CyclicWord):
        cw = CyclicWord(cw)
    if len(cw) == 0:
        raise ValueError("the S-sequence of the empty cyclic word is undefined")
    return SSequence(tuple(kernels.sign_runs(cw.representative.letters)))


def is_alternating(cw: CyclicWord) -> bool:
    """True iff no ``a^{+-2}`` or ``b^{+-2}`` occurs, reading cyclically."""
    if not isinstance(cw, CyclicWord):
        cw = CyclicWord(cw)
    s = cw.representative.letters.lower()
    if not s:
        return False
    return all(s[i] != s[i - 1] for i in range(len(s)))
