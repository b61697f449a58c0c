import random

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from heckoid.algebra import (
    A,
    X,
    CyclicNormalForm,
    NormalForm,
    are_conjugate,
    classify,
    conjugacy_key,
    dehn_reduce,
    is_trivial,
    pieces,
    symmetrized_closure,
    to_cyclic_normal_form,
    to_normal_form,
)
from heckoid.harness import random_trivial_word
from heckoid.riley import riley_word
from heckoid.slopes import Slope
from heckoid.words import Word

raw_words = st.text(alphabet="abAB", max_size=50)
index = st.integers(2, 7)


def u(s: str) -> Word:
    return riley_word(Slope.parse(s)).word


@pytest.mark.parametrize("w, n, syl", [
    ("ab", 3, [(X, 1)]),
    ("ababABAB", 2, []),
    ("abAB", 3, [(X, 1), (A, -1), (X, 2), (A, 1)]),
    ("", 4, []),
    ("aaa", 2, [(A, 3)]),
])
def test_normal_form(w, n, syl):
    assert list(to_normal_form(w, n).syllables) == syl


def test_normal_form_invariants():
    with pytest.raises(ValueError):
        NormalForm(((A, 1), (A, 2)), 3)
    with pytest.raises(ValueError):
        NormalForm(((X, 3),), 3)
    with pytest.raises(ValueError):
        NormalForm(((A, 0),), 3)
    with pytest.raises(ValueError):
        CyclicNormalForm(((A, 1), (X, 1), (A, 1)), 3)
    with pytest.raises(ValueError):
        to_normal_form("ab", 1)


@given(raw_words, index)
def test_normal_form_matches_reference(w, n):
    got = [("a" if f == A else "x", e) for f, e in to_normal_form(w, n).syllables]
    assert got == oracles.syllables(w, n)


@given(raw_words, raw_words, index)
def test_normal_form_is_a_homomorphism(u_, v, n):
    assert to_normal_form(Word(u_) * Word(v), n) == to_normal_form(u_, n) * to_normal_form(v, n)
    assert to_normal_form(~Word(u_), n) == ~to_normal_form(u_, n)
    assert to_normal_form(to_normal_form(u_, n).to_word(), n) == to_normal_form(u_, n)


@pytest.mark.parametrize("w, n, cyc, conj", [
    ("ba", 5, [(X, 1)], [(A, -1)]),
    ("ab", 3, [(X, 1)], []),
    ("Bab", 2, [(A, 1)], [(X, 1)]),
])
def test_cyclic_normal_form(w, n, cyc, conj):
    c, g = to_cyclic_normal_form(w, n)
    assert list(c.syllables) == cyc
    assert list(g.syllables) == conj


@given(raw_words, index)
def test_cyclic_normal_form_post(w, n):
    c, g = to_cyclic_normal_form(w, n)
    assert g * NormalForm(c.syllables, n) * ~g == to_normal_form(w, n)
    assert len(c) <= 1 or c.syllables[0][0] != c.syllables[-1][0]


@pytest.mark.parametrize("w, n, expected", [
    (u("1/4"), 2, True), (u("1/2"), 2, False), ("ab", 4, False), ("abababab", 4, True), ("", 3, True),
])
def test_is_trivial(w, n, expected):
    assert is_trivial(w, n) is expected


@pytest.mark.parametrize("w1, w2, n, expected", [
    ("ab", "ba", 3, True),
    (u("1/2"), u("1/3"), 4, False),
    ("a", "b", 3, False),
    ("a", "a", 3, True),
    ("ab", "abab", 5, False),
])
def test_are_conjugate(w1, w2, n, expected):
    assert are_conjugate(w1, w2, n) is expected


def test_conjugate_up_to_inversion_across_orbit():
    # 1/5 and 1 share a reduction class for n = 2
    assert are_conjugate(u("1/5"), u("1"), 2) or are_conjugate(u("1/5"), ~u("1"), 2)


@settings(max_examples=200)
@given(raw_words, raw_words, raw_words, index)
def test_conjugacy_matches_reference(w, v, g, n):
    w, v, g = Word(w), Word(v), Word(g)
    assert are_conjugate(w, w.conjugate_by(g), n)
    assert conjugacy_key(w, n) == conjugacy_key(w.conjugate_by(g), n)
    assert are_conjugate(w, v, n) == oracles.conjugate(w.letters, v.letters, n)
    assert are_conjugate(w, v, n) == (conjugacy_key(w, n) == conjugacy_key(v, n))


@pytest.mark.parametrize("w, n, kind, detail", [
    ("a", 3, "peripheral", ("a", 1)),
    ("ab", 4, "torsion", 4),
    ("abab", 4, "torsion", 2),
    (u("2/5"), 4, "generic", None),
    ("", 4, "trivial", None),
    ("b", 3, "peripheral", ("b", 1)),
    ("BBB", 3, "peripheral", ("b", -3)),
    ("AbaaBa", 5, "peripheral", ("a", 2)),
])
def test_classify(w, n, kind, detail):
    c = classify(w, n)
    assert c.kind == kind
    if kind == "torsion":
        assert c.order == detail
    if kind == "peripheral":
        assert (c.base, c.power) == detail


@given(st.text(alphabet="abAB", min_size=0, max_size=8), st.integers(-6, 6).filter(bool), index)
def test_classify_peripheral_conjugates(g, k, n):
    g = Word(g)
    for base in "ab":
        c = classify((Word(base) ** k).conjugate_by(g), n)
        assert (c.kind, c.base, c.power) == ("peripheral", base, k)


@given(raw_words, index)
def test_classify_torsion_order_divides_n(w, n):
    c = classify(w, n)
    if c.kind == "torsion":
        assert n % c.order == 0 and c.order >= 2


@pytest.mark.parametrize("w, n, out", [("ababab", 3, ""), ("ababa", 3, "B"), ("abAB", 3, "abAB")])
def test_dehn_reduce(w, n, out):
    assert dehn_reduce(w, n).letters == out


@settings(max_examples=300)
@given(raw_words, index)
def test_dehn_agrees_with_normal_form(w, n):
    assert (not dehn_reduce(w, n)) == is_trivial(w, n)


def test_dehn_detects_hidden_trivial_words():
    rng = random.Random(7)
    for n in range(2, 6):
        for _ in range(300):
            w = random_trivial_word(rng, n, 120)
            assert is_trivial(w, n)
            assert not dehn_reduce(w, n)


@pytest.mark.parametrize("r, expected", [
    ("abab", set()),
    ("ababab", set()),
    ("aabb", {"a", "b", "A", "B"}),
])
def test_pieces(r, expected):
    assert pieces(r) == expected


def test_aabb_piece_witness():
    closure = symmetrized_closure("aabb")
    assert "aabb" in closure and "abba" in closure


def test_symmetrized_closure_requires_cyclic_reduction():
    with pytest.raises(ValueError):
        symmetrized_closure("abA")


@given(raw_words, raw_words, index)
def test_classify_is_conjugation_invariant(w, g, n):
    w, g = Word(w), Word(g)
    assert classify(w, n) == classify(w.conjugate_by(g), n)


@given(raw_words, index)
def test_torsion_order_is_exact(w, n):
    w = Word(w)
    c = classify(w, n)
    if c.kind != "torsion":
        return
    assert is_trivial(w ** c.order, n)
    assert not any(is_trivial(w ** e, n) for e in range(1, c.order))


@given(raw_words, index)
def test_cyclic_form_is_no_longer(w, n):
    assert len(to_cyclic_normal_form(w, n)[0]) <= len(to_normal_form(w, n))
