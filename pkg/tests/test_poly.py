from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tfrac_lab.poly import (IndexedSymbol, Poly, Series, format_poly, parse_poly, series_inverse,
                            specialize, sym)

NAMES = [sym("x"), sym("y"), sym("a", 0, 1), sym("b", 1, 0)]


@st.composite
def polys(draw):
    terms = {}
    for _ in range(draw(st.integers(0, 4))):
        exps = draw(st.lists(st.integers(0, 2), min_size=len(NAMES), max_size=len(NAMES)))
        mono = tuple((s, e) for s, e in zip(NAMES, exps) if e)
        terms[tuple(sorted(mono))] = draw(st.integers(-5, 5))
    return Poly(terms)


points = st.lists(st.integers(-3, 3), min_size=len(NAMES), max_size=len(NAMES))


def ev(p: Poly, pt) -> Fraction:
    return Fraction(p.evaluate(dict(zip(NAMES, pt))))


@settings(max_examples=60, deadline=None)
@given(polys(), polys(), polys(), points)
def test_ring_operations_agree_with_evaluation(p, q, r, pt):
    assert ev(p + q, pt) == ev(p, pt) + ev(q, pt)
    assert ev(p * q, pt) == ev(p, pt) * ev(q, pt)
    assert ev(p - q, pt) == ev(p, pt) - ev(q, pt)
    assert (p * (q + r)) == p * q + p * r
    assert ev(p ** 2, pt) == ev(p, pt) ** 2


@settings(max_examples=60, deadline=None)
@given(polys())
def test_canonical_text_roundtrip(p):
    assert parse_poly(format_poly(p)) == p
    assert format_poly(parse_poly(format_poly(p))) == format_poly(p)


def test_zero_terms_are_dropped():
    x = Poly.var("x")
    assert not (x - x)
    assert (x - x) == Poly()
    assert len(Poly({(): 0})) == 0


def test_indexed_symbols_are_distinct():
    assert Poly.var("a", 0, 1) != Poly.var("a", 1, 0)
    assert sym("a", 0, 1) == IndexedSymbol("a", (0, 1))


def test_specialize_partial_and_by_name():
    x, y = Poly.var("x"), Poly.var("y")
    p = x * x * y + 3 * y
    assert specialize(p, {"y": 2}) == 2 * x * x + 6
    assert specialize(p, {sym("x"): y}) == y ** 3 + 3 * y


def test_derivative_and_exact_div():
    x, y = Poly.var("x"), Poly.var("y")
    p = x ** 3 * y + 2 * x * y
    assert p.derivative(sym("x")) == 3 * x ** 2 * y + 2 * y
    assert p.exact_div(x * y) == x ** 2 + 2
    with pytest.raises(ValueError):
        p.exact_div(x + y)


def test_series_inverse_of_geometric():
    s = Series([1, -1], 6)
    inv = series_inverse(s)
    assert inv.to_ints() == [1] * 7
    assert (s * inv).to_ints() == [1, 0, 0, 0, 0, 0, 0]


def test_series_geometric_symbolic():
    z = Poly.var("z")
    g = Series.geometric(z, 4)
    assert [str(c) for c in g.coeffs] == ["1", "z", "z^2", "z^3", "z^4"]
