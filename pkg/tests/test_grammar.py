from __future__ import annotations

from hypothesis import given, settings
from hypothesis import strategies as st

from tfrac_lab.grammar import DerivativeOperator, apply, dumont_check, iterate, tree_polynomial
from tfrac_lab.poly import Poly, parse_poly, specialize
from tfrac_lab.treepolys import p_bt, p_rt

x, y = Poly.var("x"), Poly.var("y")


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3), st.integers(0, 3))
def test_leibniz_rule(a, b, c, d):
    D = DerivativeOperator.from_mapping({"x": x * y + 1, "y": x})
    f, g = x ** a * y ** b, x ** c * y ** d + x
    assert apply(D, f * g) == apply(D, f) * g + f * apply(D, g)


def test_derivation_agrees_with_chain_rule():
    # D = (xy) d/dx + x d/dy
    D = DerivativeOperator.from_mapping({"x": x * y, "y": x})
    p = x ** 3 * y ** 2 + 5 * x * y
    from tfrac_lab.poly import sym
    assert apply(D, p) == x * y * p.derivative(sym("x")) + x * p.derivative(sym("y"))


def test_tree_polynomials_from_grammar():
    for n in range(7):
        assert tree_polynomial("bt", n) == p_bt(n)
        assert tree_polynomial("rt", n) == p_rt(n)


def test_all_ones_counts():
    vals = []
    for n in range(10):
        p = tree_polynomial("rt", n)
        vals.append(specialize(p, {s: 1 for s in p.symbols()}).constant_term())
    assert vals == [1, 1, 3, 11, 51, 295, 2055, 16715, 155355, 1624255]


def test_dumont():
    r = dumont_check(5)
    assert r["pass"] and r["monomials"] == 126
    D = DerivativeOperator.from_mapping({"x": 2 * x * y, "y": x})
    assert iterate(D, y, 3) == parse_poly("2*x^2 + 4*x*y^2")
