from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from heckoid.slopes import (
    INFINITY,
    ContinuedFraction,
    Slope,
    continued_fraction,
    evaluate_cf,
    farey_slopes,
    in_fundamental_interval,
)


def test_normalization():
    assert Slope(-3, 6) == Slope(-1, 2)
    assert Slope(3, -6) == Slope(-1, 2)
    assert Slope(0, 5) == Slope(0, 1)
    assert Slope(7, 0) == Slope(-2, 0) == INFINITY
    with pytest.raises(ValueError):
        Slope(0, 0)


@pytest.mark.parametrize("text, expected", [
    ("2/5", Slope(2, 5)), ("-4/6", Slope(-2, 3)), ("3", Slope(3)), ("∞", INFINITY), ("inf", INFINITY),
])
def test_parse(text, expected):
    assert Slope.parse(text) == expected


@pytest.mark.parametrize("text", ["", "1/0/2", "x", "1.5"])
def test_parse_rejects(text):
    with pytest.raises(ValueError):
        Slope.parse(text)


def test_ordering_puts_infinity_last():
    assert sorted([INFINITY, Slope(1, 2), Slope(-3), Slope(0)]) == [Slope(-3), Slope(0), Slope(1, 2), INFINITY]


@pytest.mark.parametrize("s, entries", [((1, 3), [3]), ((2, 5), [2, 2]), ((3, 8), [2, 1, 2]), ((1, 1), [1])])
def test_continued_fraction(s, entries):
    assert list(continued_fraction(Slope(*s)).entries) == entries


@pytest.mark.parametrize("entries, s", [([3], (1, 3)), ([2, 2], (2, 5)), ([1], (1, 1))])
def test_evaluate_cf(entries, s):
    assert evaluate_cf(ContinuedFraction(entries)) == Slope(*s)


@pytest.mark.parametrize("s", [Slope(0), Slope(-1, 2), Slope(3, 2), INFINITY])
def test_continued_fraction_rejects(s):
    with pytest.raises(ValueError):
        continued_fraction(s)


@pytest.mark.parametrize("entries", [[], [0], [2, 1], [-1]])
def test_cf_invariants(entries):
    with pytest.raises(ValueError):
        ContinuedFraction(entries)


@given(st.integers(1, 10**9), st.integers(1, 10**9))
def test_cf_roundtrip(a, b):
    q, p = min(a, b), max(a, b)
    s = Slope(q, p)
    cf = continued_fraction(s)
    assert all(m >= 1 for m in cf.entries)
    assert len(cf) == 1 or cf.entries[-1] >= 2
    assert evaluate_cf(cf) == s


@pytest.mark.parametrize("s, n, expected", [((1, 4), 4, True), ((2, 5), 4, True), ((1, 5), 4, False), ((1, 1), 2, True)])
def test_fundamental_interval(s, n, expected):
    assert in_fundamental_interval(Slope(*s), n) is expected


def test_farey_slopes_counts():
    got = list(farey_slopes(5, Fraction(0), Fraction(1)))
    expected = sorted({Fraction(q, p) for p in range(1, 6) for q in range(0, p + 1)})
    assert sorted(s.as_fraction() for s in got) == expected
    assert len(got) == len(set(got))
