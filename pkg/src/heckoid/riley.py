"""Slope words u_{q/p} of the upper presentation and their S-sequences."""

from __future__ import annotations

from dataclasses import dataclass

from . import kernels
from .slopes import Slope
from .words import CyclicWord, SSequence, Word, s_sequence

__all__ = ["SlopeWord", "epsilon", "riley_word", "cs_of_slope"]


@dataclass(frozen=True)
class SlopeWord:
    slope: Slope
    word: Word
    hat_word: Word

    @property
    def cyclic(self) -> CyclicWord:
        return CyclicWord(self.word)


def epsilon(i: int, p: int, q: int) -> int:
    """``(-1) ** floor(i*q/p)`` for ``1 <= i <= p-1``."""
    if p < 1:
        raise ValueError("p must be >= 1")
    if not 1 <= i <= p - 1:
        raise ValueError(f"i={i} outside 1..{p - 1}")
    return -1 if (i * q // p) & 1 else 1


def riley_word(s: Slope) -> SlopeWord:
    """Return ``u_s`` for a rational slope ``s = q/p``.

    Odd p:  ``u = a û b^((-1)^q) û^-1``;  even p: ``u = a û a^-1 û^-1``,
    where ``û`` has letters ``b^eps_1 a^eps_2 ...`` of length ``p - 1``.
    """
    if not isinstance(s, Slope):
        s = Slope.parse(s) if isinstance(s, str) else Slope.from_fraction(s)
    if s.is_infinite:
        raise ValueError("u_s is not defined for s = ∞")
    q, p = s.numerator, s.denominator
    letters = kernels.riley_word(q, p)
    # the generated letters are already reduced; Word() re-checks cheaply
    return SlopeWord(s, Word(letters), Word(letters[1:p]))


def cs_of_slope(s: Slope) -> SSequence:
    """``CS(s)``: the S-sequence of the cyclic word of ``u_s``, for ``0 < s <= 1``."""
    if not isinstance(s, Slope):
        s = Slope.parse(s) if isinstance(s, str) else Slope.from_fraction(s)
    if s.is_infinite or s.numerator <= 0 or s.numerator > s.denominator:
        raise ValueError(f"CS(s) needs 0 < s <= 1, got {s}")
    return s_sequence(CyclicWord(riley_word(s).word))
