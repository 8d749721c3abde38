from __future__ import annotations

from itertools import permutations
from math import factorial

from tfrac_lab.poly import IndexedSymbol, Poly, parse_poly, specialize, sym
from tfrac_lab.treepolys import (X1, X2, Y1, Y2, hat_to_simple, irt_master_weight, master_to_simple_bt,
                                 p_bt, p_irt, p_perm_star, p_rt, q_bt, q_irt, q_rt, q_star_rt)
from tfrac_lab.trees import APRIME, INORDER, POSTORDER, PREORDER, enumerate_irt

ONES = {"x1": 1, "x2": 1, "y1": 1, "y2": 1, "w": 1, "z": 1}


def eulerian_brute(n: int) -> Poly:
    """sum over S_n of x^(descents) y^(n - descents), with a final descent
    counted (the binary-tree convention P_n(x,x,y,y))."""
    x, y = Poly.var("x"), Poly.var("y")
    total = Poly()
    for s in permutations(range(1, n + 1)):
        d = sum(1 for i in range(n - 1) if s[i] > s[i + 1])
        total = total + x ** d * y ** (n - d)
    return total


def test_small_polynomials():
    assert p_bt(0) == 1
    assert p_bt(1) == parse_poly("y1")
    assert p_bt(2) == parse_poly("x2*y1 + y1*y2")
    assert p_rt(2) == parse_poly("x2*y1 + y1*y2 + w*y1")
    # IRTs on [0,2]
    assert p_irt(2) == parse_poly("z^2 + 2*y1*z + x2*y1 + w*y1 + y1*y2")


def test_all_ones_counts():
    assert [p_bt(n, ONES) for n in range(7)] == [factorial(n) for n in range(7)]
    assert [p_rt(n, ONES) for n in range(7)] == [1, 1, 3, 11, 51, 295, 2055]
    assert [p_irt(n, ONES) for n in range(6)] == [1, 2, 6, 23, 109, 632]


def test_homogenized_eulerian():
    sub = {"x1": Poly.var("x"), "x2": Poly.var("x"), "y1": Poly.var("y"), "y2": Poly.var("y")}
    for n in range(1, 7):
        assert specialize(p_bt(n), sub) == eulerian_brute(n)


def test_master_specializes_to_simple():
    for n in range(6):
        assert specialize(q_bt(n), master_to_simple_bt(n)) == p_bt(n)
        assert specialize(q_rt(n), master_to_simple_bt(n)) == p_rt(n)


def test_irt_master_specializes_to_simple():
    sub = hat_to_simple(8)
    merge = {"x1": Poly.var("x"), "x2": Poly.var("x"), "y1": Poly.var("y"), "y2": Poly.var("y")}
    for n in range(6):
        assert specialize(q_irt(n), sub) == specialize(p_irt(n), merge)


def test_traversal_independence():
    for n in range(6):
        ref = q_rt(n, PREORDER)
        assert q_rt(n, POSTORDER) == ref
        assert q_rt(n, APRIME) == ref
        assert q_bt(n, INORDER) == q_bt(n, PREORDER)


def test_irt_master_without_e_is_star():
    for n in range(6):
        zero_e = {IndexedSymbol("e", (i,)): 0 for i in range(n + 1)}
        assert specialize(q_irt(n), zero_e) == q_star_rt(n)


def test_prime_callable_path_matches_symbolic():
    def value(s):
        return 3 + 7 * len(s.base) + sum((i + 1) * 11 ** k for k, i in enumerate(s.indices))

    for n in range(5):
        full = q_rt(n)
        assert q_rt(n, PREORDER, value) == specialize(full, {s: value(s) for s in full.symbols()})


def test_perm_master_equals_binary_inorder():
    for n in range(7):
        assert p_perm_star(n) == q_bt(n, INORDER)


def test_irt_master_weight_is_monomial():
    for t in enumerate_irt(4):
        w = irt_master_weight(t)
        assert len(w) == 1
        assert next(iter(w.terms.values())) == 1
