"""H(0;n) as the subgroup <P, S P S^-1> of the Hecke group, in floating point.

This is a corroborating oracle only: traces separate elliptic (torsion),
parabolic (peripheral) and hyperbolic elements.  Slope words of a few dozen
letters already have entries near 1e30, far past what doubles can multiply
without destroying the determinant, so :func:`rho` escalates to mpmath
arithmetic until the product is unimodular to within ``IDENTITY_TOL``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from mpmath import MPContext

from .words import Word

__all__ = [
    "Mat2",
    "TraceClass",
    "CLASSIFY_TOL",
    "IDENTITY_TOL",
    "hecke_generators",
    "rho",
    "classify_matrix",
    "is_plus_minus_identity",
]

CLASSIFY_TOL = 1e-6
IDENTITY_TOL = 1e-9


@dataclass(frozen=True)
class Mat2:
    """2x2 real matrix; entries are floats or mpmath numbers of one context."""

    a: float
    b: float
    c: float
    d: float

    def __matmul__(self, o: "Mat2") -> "Mat2":
        return Mat2(
            self.a * o.a + self.b * o.c,
            self.a * o.b + self.b * o.d,
            self.c * o.a + self.d * o.c,
            self.c * o.b + self.d * o.d,
        )

    def inverse(self) -> "Mat2":
        det = self.det
        return Mat2(self.d / det, -self.b / det, -self.c / det, self.a / det)

    @property
    def det(self) -> float:
        return self.a * self.d - self.b * self.c

    @property
    def trace(self) -> float:
        return self.a + self.d

    def __neg__(self) -> "Mat2":
        return Mat2(-self.a, -self.b, -self.c, -self.d)

    def distance(self, o: "Mat2") -> float:
        """Max-norm distance."""
        return max(abs(self.a - o.a), abs(self.b - o.b), abs(self.c - o.c), abs(self.d - o.d))

    def to_list(self) -> list[list[float]]:
        return [[float(self.a), float(self.b)], [float(self.c), float(self.d)]]


I2 = Mat2(1.0, 0.0, 0.0, 1.0)


@dataclass(frozen=True)
class TraceClass:
    kind: str  # identity_like | elliptic | parabolic | hyperbolic
    trace: float


@lru_cache(maxsize=None)
def _context(dps: int) -> MPContext:
    ctx = MPContext()
    ctx.dps = dps
    return ctx


def hecke_generators(n: int, dps: int | None = None) -> tuple[Mat2, Mat2, Mat2, Mat2]:
    """``(P, S, A, B)`` with ``A = P`` the image of a and ``B = S P S^-1`` that of b.

    With ``dps`` the entries are mpmath numbers carrying that many digits.
    """
    if n < 2:
        raise ValueError(f"index n must be >= 2, got {n}")
    if dps is None:
        one, zero = 1.0, 0.0
        lam = 2.0 * math.cos(math.pi / (2 * n))
    else:
        ctx = _context(dps)
        one, zero = ctx.mpf(1), ctx.mpf(0)
        lam = 2 * ctx.cos(ctx.pi / (2 * n))
    P = Mat2(one, lam, zero, one)
    S = Mat2(zero, one, -one, zero)
    B = S @ P @ S.inverse()
    return P, S, P, B


def _evaluate(letters: str, n: int, dps: int | None) -> Mat2:
    # A = (1 l; 0 1) and B = (1 0; -l 1) are elementary, so right
    # multiplication by a letter is a column operation
    _, _, A, B = hecke_generators(n, dps)
    lam = A.b
    a, b, c, d = A.d, A.c, A.c, A.d  # identity in the same number type
    for ch in letters:
        if ch == "a":
            b, d = b + a * lam, d + c * lam
        elif ch == "A":
            b, d = b - a * lam, d - c * lam
        elif ch == "b":
            a, c = a - b * lam, c - d * lam
        else:
            a, c = a + b * lam, c + d * lam
    return Mat2(a, b, c, d)


def rho(w, n: int, dps: int | None = None) -> Mat2:
    """Image of ``w`` under a -> P, b -> S P S^-1.

    Without ``dps``, precision is raised until ``|det - 1| < IDENTITY_TOL``.
    """
    w = w if isinstance(w, Word) else Word(w)
    if dps is not None:
        return _evaluate(w.letters, n, dps)
    return _rho_adaptive(w.letters, n)


@lru_cache(maxsize=8192)
def _rho_adaptive(letters: str, n: int) -> Mat2:
    # sweeps revisit the same words often (q and q + 2p give the same u_s)
    m = _evaluate(letters, n, None)
    digits = 30
    while not abs(m.det - 1) < IDENTITY_TOL:
        m = _evaluate(letters, n, digits)
        digits *= 2
    return m


def is_plus_minus_identity(m: Mat2, tol: float = IDENTITY_TOL) -> bool:
    return min(m.distance(I2), m.distance(-I2)) < tol


def classify_matrix(m: Mat2, tol: float = CLASSIFY_TOL) -> TraceClass:
    if not abs(m.det - 1) < 1e-6:
        raise ValueError(f"matrix is not unimodular (det={float(m.det)})")
    tr = float(m.trace)
    if min(m.distance(I2), m.distance(-I2)) <= tol:
        return TraceClass("identity_like", tr)
    if abs(tr) < 2.0 - tol:
        return TraceClass("elliptic", tr)
    if abs(abs(tr) - 2.0) <= tol:
        return TraceClass("parabolic", tr)
    return TraceClass("hyperbolic", tr)
