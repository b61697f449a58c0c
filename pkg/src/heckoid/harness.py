"""Enumeration sweeps that check the slope theorems for H(0;n).

Each sweep returns a :class:`SweepReport`; a theorem instance that fails is
written to ``counterexamples`` rather than raised, so one run reports every
failure.  Reports are deterministic given the config (timing is kept out of
the serialized form unless asked for).
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Iterator, TextIO

from . import __version__
from .algebra import (
    classify,
    conjugacy_key,
    dehn_reduce,
    is_trivial,
    to_cyclic_normal_form,
)
from .farey_orbit import apply_word, generators, reduce_slope
from .hecke_rep import CLASSIFY_TOL, classify_matrix, is_plus_minus_identity, rho
from .riley import cs_of_slope, riley_word
from .slopes import INFINITY, ZERO, Slope, farey_slopes, in_fundamental_interval
from .words import Word

__all__ = [
    "RunConfig",
    "SweepReport",
    "verify_main_theorem",
    "verify_fundamental_domain",
    "cross_oracle",
    "random_word",
    "random_trivial_word",
    "write_report",
]

ORACLES = ("exact", "dehn", "matrix", "all")


@dataclass(frozen=True)
class RunConfig:
    index: int
    max_denominator: int = 50
    pair_denominator: int = 20
    samples: int = 10_000
    seed: int = 42
    oracle: str = "all"
    # domain sweep: enumerate q/p with |q| <= numerator_span * p
    numerator_span: int = 3
    random_entry_bound: int = 10**6
    orbit_word_length: int = 20
    consequence_samples: int = 20
    # cross-oracle sweep
    max_word_length: int = 200
    matrix_word_length: int = 12
    out: str | None = None

    def __post_init__(self):
        if self.index < 2:
            raise ValueError(f"index must be >= 2, got {self.index}")
        if self.max_denominator < 1 or self.pair_denominator < 0 or self.samples < 0:
            raise ValueError("bounds must be positive")
        if self.oracle not in ORACLES:
            raise ValueError(f"oracle must be one of {ORACLES}")

    def uses(self, oracle: str) -> bool:
        return self.oracle in (oracle, "all")

    def to_json(self) -> dict:
        d = {k: getattr(self, k) for k in self.__dataclass_fields__ if k != "out"}
        return d


@dataclass
class SweepReport:
    kind: str
    index: int
    config: RunConfig
    records: list[dict] = field(default_factory=list)
    summary: dict = field(default_factory=dict)
    counterexamples: list[dict] = field(default_factory=list)
    warnings: list[dict] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def fail(self, check: str, **detail) -> None:
        self.counterexamples.append({"check": check, **detail})

    def warn(self, check: str, **detail) -> None:
        self.warnings.append({"check": check, **detail})

    def summary_json(self, timing: bool = False) -> dict:
        out = {
            "type": "summary",
            "sweep": self.kind,
            "version": __version__,
            "index": self.index,
            "config": self.config.to_json(),
            **self.summary,
            "records": len(self.records),
            "counterexamples": len(self.counterexamples),
            "warnings": len(self.warnings),
            "ok": self.ok,
        }
        if timing:
            out["elapsed_seconds"] = round(self.elapsed, 3)
        return out

    def lines(self, timing: bool = False) -> Iterator[dict]:
        for r in self.records:
            yield {"type": "record", **r}
        for c in self.counterexamples:
            yield {"type": "counterexample", **c}
        for w in self.warnings:
            yield {"type": "warning", **w}
        yield self.summary_json(timing)


def write_report(reports: list[SweepReport], fh: TextIO, fmt: str = "json", timing: bool = False) -> None:
    """JSON Lines (one object per record, a summary last) or plain text."""
    for rep in reports:
        if fmt == "json":
            for obj in rep.lines(timing):
                fh.write(json.dumps(obj, ensure_ascii=False, sort_keys=False) + "\n")
            continue
        s = rep.summary_json(timing)
        status = "OK" if rep.ok else "FAILED"
        fh.write(f"[{status}] verify {rep.kind} n={rep.index}: {s['records']} records, "
                 f"{s['counterexamples']} counterexamples, {s['warnings']} warnings\n")
        for k, v in rep.summary.items():
            fh.write(f"  {k}: {v}\n")
        for c in rep.counterexamples:
            fh.write("  counterexample: " + json.dumps(c, ensure_ascii=False) + "\n")
        if timing:
            fh.write(f"  elapsed: {rep.elapsed:.3f}s\n")


def _in_canonical_set(s: Slope, n: int) -> bool:
    return s == INFINITY or s == ZERO or in_fundamental_interval(s, n)


# ---------------------------------------------------------------- main theorem

def verify_main_theorem(cfg: RunConfig) -> SweepReport:
    """Non-triviality, non-peripherality, non-torsion and pairwise distinctness
    of the loops with slopes in [1/n, 1] (and non-triviality at 0)."""
    t0 = time.perf_counter()
    n = cfg.index
    rep = SweepReport("main", n, cfg)
    slopes = [ZERO] + list(farey_slopes(cfg.max_denominator, Fraction(1, n), Fraction(1)))
    matrix_classes: dict[str, int] = {}
    for s in slopes:
        u = riley_word(s).word
        in_i = s != ZERO
        cls = classify(u, n)
        rec = {
            "slope": s.to_json(),
            "word_length": len(u),
            "cs": list(cs_of_slope(s).canonical) if in_i else None,
            "class": str(cls),
            "canonical": reduce_slope(s, n).canonical.to_json(),
        }
        if cfg.uses("exact"):
            if cls.kind == "trivial":
                rep.fail("nontrivial", slope=s.to_json(), oracle="exact")
            if in_i and cls.kind != "generic":
                rep.fail("generic", slope=s.to_json(), oracle="exact", found=str(cls))
        if cfg.uses("dehn"):
            if not dehn_reduce(u, n):
                rep.fail("nontrivial", slope=s.to_json(), oracle="dehn")
            # torsion elements of Z * Z/n have order dividing n
            if in_i and not dehn_reduce(u ** n, n):
                rep.fail("not_torsion", slope=s.to_json(), oracle="dehn")
        if cfg.uses("matrix"):
            tc = classify_matrix(rho(u, n))
            rec["trace"] = tc.trace
            matrix_classes[tc.kind] = matrix_classes.get(tc.kind, 0) + 1
            expected = "hyperbolic" if in_i else "elliptic"
            if tc.kind != expected:
                if abs(abs(tc.trace) - 2) <= 10 * CLASSIFY_TOL:
                    rep.warn("trace_zone", slope=s.to_json(), trace=tc.trace)
                else:
                    rep.fail(expected, slope=s.to_json(), oracle="matrix", found=tc.kind, trace=tc.trace)
        rep.records.append(rec)

    pair_slopes = [s for s in slopes if s != ZERO and s.denominator <= cfg.pair_denominator]
    keys = []
    for s in pair_slopes:
        u = riley_word(s).word
        keys.append((conjugacy_key(u, n), conjugacy_key(~u, n)))
    conj_pairs = 0
    for i in range(len(pair_slopes)):
        ki, ki_inv = keys[i]
        for j in range(i + 1, len(pair_slopes)):
            kj, kj_inv = keys[j]
            if ki == kj or ki == kj_inv:
                conj_pairs += 1
                rep.fail("distinct_classes", slopes=[pair_slopes[i].to_json(), pair_slopes[j].to_json()],
                         orientation="same" if ki == kj else "inverse")
    m = len(pair_slopes)
    rep.summary = {
        "slopes": len(slopes),
        "pair_denominator": min(cfg.pair_denominator, cfg.max_denominator),
        "pair_slopes": m,
        "pairs_checked": m * (m - 1) // 2,
        "conjugate_pairs": conj_pairs,
    }
    if matrix_classes:
        rep.summary["matrix_classes"] = dict(sorted(matrix_classes.items()))
    rep.elapsed = time.perf_counter() - t0
    return rep


# ---------------------------------------------------------- fundamental domain

def _consequence(s: Slope, s0: Slope, n: int, cfg: RunConfig) -> tuple[bool, str]:
    """Check that u_s lies in the class of u_{s0} (up to inversion)."""
    u = riley_word(s).word
    if s0 == INFINITY:
        ok = True
        if cfg.uses("exact"):
            ok &= is_trivial(u, n)
        if cfg.uses("dehn"):
            ok &= not dehn_reduce(u, n)
        return ok, "trivial"
    if s0 == ZERO:
        ok = True
        if cfg.uses("exact"):
            ok &= classify(u, n).kind == "torsion"
        if cfg.uses("dehn"):
            ok &= bool(dehn_reduce(u, n)) and not dehn_reduce(u ** n, n)
        return ok, "torsion"
    u0 = riley_word(s0).word
    # conjugacy keys are complete invariants, so compute u's only once
    key = conjugacy_key(u, n)
    same = key == conjugacy_key(u0, n)
    inverse = not same and key == conjugacy_key(~u0, n)
    ok = True
    if cfg.uses("exact"):
        ok &= same or inverse
    if cfg.uses("matrix") and len(u) <= 400:
        t, t0 = rho(u, n).trace, rho(u0, n).trace
        ok &= abs(abs(t) - abs(t0)) <= 1e-6 * max(1.0, abs(t0))
    how = "same" if same else "inverse" if inverse else "none"
    return ok, how


def _random_gen_word(rng: random.Random, length: int) -> list[str]:
    # adjacent equal involutions cancel, so avoid them
    word: list[str] = []
    for _ in range(length):
        choices = [g for g in ("g1", "g2", "g3") if not word or g != word[-1]]
        word.append(rng.choice(choices))
    return word


def _check_reduction(rep: SweepReport, s: Slope, n: int, rng: random.Random, cfg: RunConfig):
    tr = reduce_slope(s, n)
    c = tr.canonical
    if not _in_canonical_set(c, n):
        rep.fail("lands_in_domain", slope=s.to_json(), canonical=c.to_json())
    if not tr.replay():
        rep.fail("trace_replay", slope=s.to_json())
    gw = _random_gen_word(rng, cfg.orbit_word_length)
    moved = apply_word(gw, s, n)
    c2 = reduce_slope(moved, n).canonical
    if c2 != c:
        rep.fail("orbit_invariance", slope=s.to_json(), word=gw, moved=moved.to_json(),
                 canonical=c.to_json(), moved_canonical=c2.to_json())
    return tr


def verify_fundamental_domain(cfg: RunConfig) -> SweepReport:
    t0 = time.perf_counter()
    n = cfg.index
    rep = SweepReport("domain", n, cfg)
    rng = random.Random(cfg.seed)

    g1, _, g3 = generators(n)
    parabolic = g3 * g1
    # g3 g1 is the parabolic fixing 0; its translation length is 2n
    if abs(parabolic.trace) != 2 or parabolic(ZERO) != ZERO or abs(parabolic.c) != 2 * n:
        rep.fail("parabolic_at_zero", matrix=str(parabolic))

    enumerated = [INFINITY]
    for p in range(1, cfg.max_denominator + 1):
        for q in range(-cfg.numerator_span * p, cfg.numerator_span * p + 1):
            if gcd(q, p) == 1:
                enumerated.append(Slope(q, p))
    outcomes: dict[str, int] = {}
    for s in enumerated:
        tr = _check_reduction(rep, s, n, rng, cfg)
        rec = {"slope": s.to_json(), "canonical": tr.canonical.to_json(), "steps": len(tr.steps)}
        if not s.is_infinite:
            ok, how = _consequence(s, tr.canonical, n, cfg)
            rec["consequence"] = how
            outcomes[how] = outcomes.get(how, 0) + 1
            if not ok:
                rep.fail("same_class", slope=s.to_json(), canonical=tr.canonical.to_json())
        rep.records.append(rec)

    B = cfg.random_entry_bound
    checked = 0
    for i in range(cfg.samples):
        s = Slope(rng.randint(-B, B), rng.randint(1, B))
        tr = _check_reduction(rep, s, n, rng, cfg)
        if i < cfg.consequence_samples:
            ok, how = _consequence(s, tr.canonical, n, cfg)
            checked += 1
            if not ok:
                rep.fail("same_class", slope=s.to_json(), canonical=tr.canonical.to_json())
    rep.summary = {
        "enumerated": len(enumerated),
        "random_slopes": cfg.samples,
        "random_consequence_checks": checked,
        "consequences": dict(sorted(outcomes.items())),
    }
    rep.elapsed = time.perf_counter() - t0
    return rep


# ---------------------------------------------------------------- cross oracle

def random_word(rng: random.Random, max_len: int) -> Word:
    """A uniformly random reduced word of length in [0, max_len]."""
    length = rng.randint(0, max_len)
    letters: list[str] = []
    inv = {"a": "A", "A": "a", "b": "B", "B": "b"}
    while len(letters) < length:
        c = rng.choice("abAB")
        if letters and inv[c] == letters[-1]:
            continue
        letters.append(c)
    return Word("".join(letters))


def random_trivial_word(rng: random.Random, n: int, max_len: int) -> Word:
    """A product of random conjugates of rotations of (ab)^{+-n}, reduced length <= max_len."""
    rel = "ab" * n
    while True:
        w = Word("")
        for _ in range(rng.randint(1, 6)):
            k = rng.randrange(2 * n)
            r = Word(rel[k:] + rel[:k]) ** rng.choice((1, -1))
            g = random_word(rng, max(0, (max_len - 2 * n) // 6))
            w = w * r.conjugate_by(g)
        if len(w) <= max_len:
            return w


def _sample_words(rng: random.Random, n: int, count: int, max_len: int) -> Iterator[Word]:
    for i in range(count):
        kind = i % 3
        if kind == 0:
            yield random_word(rng, max_len)
        else:
            w = random_trivial_word(rng, n, max_len)
            if kind == 2 and len(w) < max_len:
                # perturb by one letter: usually nontrivial, occasionally not
                pos = rng.randint(0, len(w))
                w = Word(w.letters[:pos] + rng.choice("abAB") + w.letters[pos:])
            yield w


def _matrix_agrees(kind: str, m) -> tuple[bool, str]:
    tc = classify_matrix(m)
    expected = {"trivial": "identity_like", "torsion": "elliptic",
                "peripheral": "parabolic", "generic": "hyperbolic"}[kind]
    return tc.kind == expected, tc.kind


def cross_oracle(cfg: RunConfig) -> SweepReport:
    """Agreement of normal forms, Dehn's algorithm and the matrix representation."""
    t0 = time.perf_counter()
    n = cfg.index
    rep = SweepReport("cross", n, cfg)
    rng = random.Random(cfg.seed)
    trivial_count = 0
    disagreements = 0
    for w in _sample_words(rng, n, cfg.samples, cfg.max_word_length):
        exact = is_trivial(w, n)
        trivial_count += exact
        if cfg.uses("dehn") and exact != (len(dehn_reduce(w, n)) == 0):
            disagreements += 1
            rep.fail("trivial_agreement", word=w.letters, exact=exact, dehn=not exact)
    # short words: exact class against the trace classification
    matrix_checked = 0
    if cfg.uses("matrix"):
        for _ in range(min(cfg.samples, 2000)):
            w = random_word(rng, cfg.matrix_word_length)
            kind = classify(w, n).kind
            ok, found = _matrix_agrees(kind, rho(w, n))
            matrix_checked += 1
            if not ok:
                rep.fail("matrix_agreement", word=w.letters, exact=kind, matrix=found)
        for _ in range(200):
            g = random_word(rng, 8)
            t = rng.choice([k for k in range(-4, 5) if k])
            for base in ("a", "b"):
                w = (Word(base) ** t).conjugate_by(g)
                ok, found = _matrix_agrees("peripheral", rho(w, n))
                if not ok or classify(w, n).kind != "peripheral":
                    rep.fail("peripheral_parabolic", word=w.letters, matrix=found)
            m = rng.randint(1, 3 * n)
            w = (Word("ab") ** m).conjugate_by(g)
            kind = "trivial" if m % n == 0 else "torsion"
            ok, found = _matrix_agrees(kind, rho(w, n))
            if not ok or classify(w, n).kind != kind:
                rep.fail("torsion_elliptic", word=w.letters, matrix=found)
    # relator powers are trivial for every oracle
    for k in range(1, 4):
        for rot in range(2 * n):
            rel = ("ab" * (k * n))
            w = Word(rel[rot:] + rel[:rot])
            if not is_trivial(w, n) or dehn_reduce(w, n) or not is_plus_minus_identity(rho(w, n)):
                rep.fail("relator_power", word=w.letters)
    # u_{1/2}: nontrivial, generic, hyperbolic
    u = riley_word(Slope(1, 2)).word
    if is_trivial(u, n) or not dehn_reduce(u, n) or classify(u, n).kind != "generic" \
            or classify_matrix(rho(u, n)).kind != "hyperbolic":
        rep.fail("u_half", word=u.letters)
    cyc, _ = to_cyclic_normal_form(u, n)
    rep.records.append({"word": u.letters, "class": "generic", "cyclic_normal_form": cyc.to_json()})
    rep.summary = {
        "random_words": cfg.samples,
        "trivial_words": trivial_count,
        "disagreements": disagreements,
        "matrix_checked": matrix_checked,
    }
    rep.elapsed = time.perf_counter() - t0
    return rep


SWEEPS = {
    "main": verify_main_theorem,
    "domain": verify_fundamental_domain,
    "cross": cross_oracle,
}
