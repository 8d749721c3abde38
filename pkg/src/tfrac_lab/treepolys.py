"""Generating polynomials of the tree families, obtained by summing vertex
weights over exhaustive enumerations.

Every sum is accumulated as a multiset of monomials and converted to a Poly
once.  Passing ``specialization`` as a callable ``IndexedSymbol -> int``
switches to a purely numeric accumulation (used for prime-specialized
checks at larger n); a mapping is applied symbolically at the end.
"""

from __future__ import annotations

from collections import Counter
from typing import Callable, Dict, Iterable, List, Mapping, Optional, Union

from .poly import IndexedSymbol, Poly, specialize, sym
from .trees import (INORDER, PREORDER, all_vertex_stats, children, enumerate_binary,
                    enumerate_irt, enumerate_rt, node_type)

X1, X2, Y1, Y2, W, Z = (sym(s) for s in ("x1", "x2", "y1", "y2", "w", "z"))

BT_SIMPLE = {"11": X1, "00": Y1, "10": X2, "01": Y2}
RT_SIMPLE = {"101": X1, "000": Y1, "100": X2, "001": Y2, "010": W}
BT_MASTER = {"11": "a", "00": "b", "10": "c", "01": "d"}
RT_MASTER = {"101": "a", "000": "b", "100": "c", "001": "d", "010": "f"}

Specialization = Union[None, Mapping, Callable[[IndexedSymbol], int]]


def _accumulate(trees: Iterable, weight_fn, specialization: Specialization = None) -> Poly:
    """Sum over ``trees`` of the monomial given by ``weight_fn(tree)`` (a
    list of symbols with repetition)."""
    if callable(specialization) and not isinstance(specialization, Mapping):
        value = specialization
        cache: Dict[IndexedSymbol, int] = {}
        total = 0
        for t in trees:
            prod = 1
            for s in weight_fn(t):
                v = cache.get(s)
                if v is None:
                    v = cache[s] = value(s)
                prod *= v
            total += prod
        return Poly.const(total)
    counts: Counter = Counter()
    for t in trees:
        counts[tuple(sorted(Counter(weight_fn(t)).items()))] += 1
    p = Poly(dict(counts))
    if specialization:
        p = specialize(p, specialization)
    return p


def _simple_letters(table):
    def fn(tree) -> List[IndexedSymbol]:
        return [table[node_type(tree, v)] for v in range(len(tree.parent))]
    return fn


def _master_letters(table, traversal: str):
    def fn(tree) -> List[IndexedSymbol]:
        return [IndexedSymbol(table[st.node_type], (st.croix, st.nid))
                for st in all_vertex_stats(tree, traversal)]
    return fn


def p_bt(n: int, specialization: Specialization = None) -> Poly:
    """Sum over increasing binary trees on [n] of
    x1^I(11) y1^I(00) x2^I(10) y2^I(01)."""
    return _accumulate(enumerate_binary(n), _simple_letters(BT_SIMPLE), specialization)


def p_rt(n: int, specialization: Specialization = None) -> Poly:
    """As p_bt for RTs, with w marking node type 010."""
    return _accumulate(enumerate_rt(n), _simple_letters(RT_SIMPLE), specialization)


def q_bt(n: int, traversal: str = PREORDER, specialization: Specialization = None) -> Poly:
    """Binary master polynomial: letters a, b, c, d for node types
    11, 00, 10, 01, indexed by (croix, nid)."""
    return _accumulate(enumerate_binary(n), _master_letters(BT_MASTER, traversal), specialization)


def q_rt(n: int, traversal: str = PREORDER, specialization: Specialization = None) -> Poly:
    """RT master polynomial: letters a, b, c, d, f for node types
    101, 000, 100, 001, 010, indexed by (croix, nid)."""
    return _accumulate(enumerate_rt(n), _master_letters(RT_MASTER, traversal), specialization)


def _hat_weight(st, letters: List[IndexedSymbol]) -> None:
    """Append the mu/nu-refined letters of a vertex with statistics ``st``."""
    idx = (st.croix, st.nid)
    t = st.node_type
    if t == "101":
        letters += [IndexedSymbol("ah", idx), IndexedSymbol("mu", (st.lev + 1,))]
    elif t == "000":
        letters += [IndexedSymbol("bh", idx), IndexedSymbol("nu", (st.lev - 1,))]
    elif t == "100":
        letters += [IndexedSymbol("ah", idx), IndexedSymbol("nu", (st.lev,))]
    elif t == "001":
        letters += [IndexedSymbol("bh", idx), IndexedSymbol("mu", (st.lev,))]
    else:
        letters.append(IndexedSymbol("f", idx))


MU0 = sym("mu", 0)
BH00 = sym("bh", 0, 0)
E = "e"


def q_star_letters(tree, traversal: str = PREORDER) -> List[IndexedSymbol]:
    n = len(tree.parent)
    if n == 0:
        return []
    letters = [MU0, BH00]
    stats = all_vertex_stats(tree, traversal)
    for v in range(n - 1):
        _hat_weight(stats[v], letters)
    return letters


def q_star_rt(n: int, traversal: str = PREORDER, specialization: Specialization = None) -> Poly:
    """mu_0 bh_00 times the sum over RTs on [n] of the refined weights of
    vertices 1..n-1 (vertex n is unweighted); 1 when n = 0."""
    return _accumulate(enumerate_rt(n), lambda t: q_star_letters(t, traversal), specialization)


def irt_simple_letters(tree) -> List[IndexedSymbol]:
    letters = [RT_SIMPLE[node_type(tree, v)] for v in range(1, len(tree.parent))]
    letters += [Z] * tree.label_surplus()
    return letters


def p_irt(n: int, specialization: Specialization = None) -> Poly:
    """Sum over IRTs on [0,n]: node-type letters on non-root vertices and
    z to the label surplus."""
    return _accumulate(enumerate_irt(n), irt_simple_letters, specialization)


def irt_master_letters(tree, traversal: str = PREORDER) -> List[IndexedSymbol]:
    """Letters of the IRT master weight: trivial tree e_0^n; otherwise the
    root gives mu_0 e_0^j, the final vertex bh_00 e_0^j, and every other
    vertex its refined letter times e_(level)^j."""
    m = len(tree.parent)
    sizes = tree.sizes
    e0 = IndexedSymbol(E, (0,))
    if m == 1:
        return [e0] * (sizes[0] - 1)
    letters = [MU0] + [e0] * (sizes[0] - 1) + [BH00] + [e0] * (sizes[-1] - 1)
    stats = all_vertex_stats(tree, traversal)
    for v in range(1, m - 1):
        st = stats[v]
        _hat_weight(st, letters)
        j = sizes[v] - 1
        if j:
            lvl = st.lev + 1 if st.node_type in ("101", "100") else st.lev
            letters += [IndexedSymbol(E, (lvl,))] * j
    return letters


def irt_master_weight(tree, traversal: str = PREORDER) -> Poly:
    return Poly({tuple(sorted(Counter(irt_master_letters(tree, traversal)).items())): 1})


def q_irt(n: int, traversal: str = PREORDER, specialization: Specialization = None) -> Poly:
    return _accumulate(enumerate_irt(n), lambda t: irt_master_letters(t, traversal), specialization)


def p_perm_star(n: int, specialization: Specialization = None) -> Poly:
    """Sum over permutations of [n]: each letter l contributes a, b, c or d
    (valley, peak, double descent, double ascent) indexed by
    ((2-13)(l), (31-2)(l))."""
    from .permstats import linear_classes, pattern_vectors
    from itertools import permutations

    letter = {"valley": "a", "peak": "b", "ddes": "c", "dasc": "d"}

    def fn(sigma):
        classes = linear_classes(sigma)
        v213, v312 = pattern_vectors(sigma)
        return [IndexedSymbol(letter[classes[l]], (v213[l], v312[l])) for l in range(1, len(sigma) + 1)]

    return _accumulate(permutations(range(1, n + 1)), fn, specialization)


# ----------------------------------------------------------------------
# the substitutions relating master and simple polynomials

def master_to_simple_bt(max_index: int) -> Dict[IndexedSymbol, Poly]:
    """a -> x1, b -> y1, c -> x2, d -> y2 for all indices below max_index."""
    out = {}
    for l in range(max_index + 1):
        for lp in range(max_index + 1 - l):
            for base, target in (("a", X1), ("b", Y1), ("c", X2), ("d", Y2), ("f", W)):
                out[IndexedSymbol(base, (l, lp))] = Poly.var(target)
    return out


def hat_to_simple(max_index: int) -> Dict[IndexedSymbol, Poly]:
    """ah -> x, bh -> y, f -> w, mu = nu = 1, e -> z."""
    out = {}
    x, y, w, z = (Poly.var(s) for s in ("x", "y", "w", "z"))
    for l in range(max_index + 1):
        out[IndexedSymbol("mu", (l,))] = Poly.const(1)
        out[IndexedSymbol("nu", (l,))] = Poly.const(1)
        out[IndexedSymbol("e", (l,))] = z
        for lp in range(max_index + 1 - l):
            out[IndexedSymbol("ah", (l, lp))] = x
            out[IndexedSymbol("bh", (l, lp))] = y
            out[IndexedSymbol("f", (l, lp))] = w
    return out
