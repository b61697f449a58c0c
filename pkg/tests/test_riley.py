from math import gcd

import pytest
from hypothesis import given, strategies as st

import oracles
from heckoid.riley import cs_of_slope, epsilon, riley_word
from heckoid.slopes import INFINITY, Slope, continued_fraction
from heckoid.words import SSequence, is_alternating


@pytest.mark.parametrize("i, p, q, e", [(3, 5, 2, -1), (1, 5, 2, 1), (2, 3, 1, 1), (1, 3, -1, -1)])
def test_epsilon(i, p, q, e):
    assert epsilon(i, p, q) == e


@pytest.mark.parametrize("i", [0, 5, -1])
def test_epsilon_range(i):
    with pytest.raises(ValueError):
        epsilon(i, 5, 2)


@pytest.mark.parametrize("s, word", [
    ("0", "ab"), ("1/2", "abAB"), ("1/3", "abaBAB"), ("2/5", "abaBAbabAB"), ("1", "aB"), ("4", "ab"),
])
def test_riley_word(s, word):
    assert riley_word(Slope.parse(s)).word.letters == word


def test_riley_word_rejects_infinity():
    with pytest.raises(ValueError):
        riley_word(INFINITY)


slopes = st.tuples(st.integers(-400, 400), st.integers(1, 200)).filter(lambda t: gcd(*t) == 1)


@given(slopes)
def test_riley_word_matches_formula(qp):
    q, p = qp
    sw = riley_word(Slope(q, p))
    assert sw.word.letters == oracles.slope_word(q, p)
    assert len(sw.word) == 2 * p
    assert len(sw.hat_word) == p - 1
    assert is_alternating(sw.cyclic)


@given(slopes)
def test_riley_word_periodic_in_numerator(qp):
    q, p = qp
    assert riley_word(Slope(q, p)).word == riley_word(Slope(q + 2 * p, p)).word


@pytest.mark.parametrize("s, runs", [("1/3", (3, 3)), ("2/5", (3, 2, 3, 2)), ("1/4", (4, 4)), ("1", (1, 1))])
def test_cs(s, runs):
    assert cs_of_slope(Slope.parse(s)) == SSequence(runs)


@pytest.mark.parametrize("s", ["0", "-1/2", "3/2", "∞"])
def test_cs_domain(s):
    with pytest.raises(ValueError):
        cs_of_slope(Slope.parse(s))


@given(st.tuples(st.integers(1, 300), st.integers(1, 300)).filter(lambda t: gcd(*t) == 1))
def test_cs_shape(qp):
    q, p = sorted(qp)
    s = Slope(q, p)
    runs = list(cs_of_slope(s).runs)
    m = continued_fraction(s).entries
    assert sum(runs) == 2 * p
    if len(m) == 1:
        assert runs == [m[0], m[0]]
    else:
        assert set(runs) <= {m[0], m[0] + 1}
    assert oracles.same_cyclic(runs, oracles.cyclic_runs(oracles.slope_word(q, p)))


@given(slopes)
def test_letter_counts(qp):
    q, p = qp
    w = riley_word(Slope(q, p)).word.letters
    assert sum(c in "aA" for c in w) == p
    assert sum(c in "bB" for c in w) == p
