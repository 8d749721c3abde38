from __future__ import annotations

from itertools import product
from math import factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tfrac_lab.errors import ArityMismatch, InvalidTree
from tfrac_lab.trees import (APRIME, INORDER, PREORDER, BinaryTree, RestrictedTernaryTree, all_vertex_stats,
                             count_binary, count_irt, count_rt, enumerate_binary, enumerate_irt,
                             enumerate_multilabeled, enumerate_rt, format_tree, multilabeled_to_rt,
                             node_type, parse_tree, rt_to_multilabeled, traversal_order, validate,
                             worked_binary_tree, worked_irt)

RT_COUNTS = [1, 1, 3, 11, 51, 295, 2055, 16715]
IRT_COUNTS = [1, 2, 6, 23, 109, 632, 4390]


def brute_trees(n: int, slots, allowed_types):
    """Every assignment of (parent < v, slot) to v = 2..n, filtered."""
    out = set()
    choices = [[(p, s) for p in range(v) for s in slots] for v in range(1, n)]
    for combo in product(*choices):
        if len(set(combo)) != len(combo):
            continue
        kids = {}
        for p, s in combo:
            kids.setdefault(p, set()).add(s)
        if all(frozenset(k) in allowed_types for k in kids.values()):
            out.add(combo)
    return out


def test_binary_counts_match_factorial_and_brute_force():
    for n in range(7):
        assert count_binary(n) == factorial(n)
    for n in range(1, 6):
        brute = brute_trees(n, (0, 2), {frozenset(x) for x in ({0}, {2}, {0, 2})})
        listed = {tuple(zip(t.parent[1:], t.slot[1:])) for t in enumerate_binary(n)}
        assert listed == brute


def test_rt_enumeration_matches_brute_force():
    allowed = {frozenset(x) for x in ({0}, {1}, {2}, {0, 2})}
    for n in range(1, 7):
        listed = [tuple(zip(t.parent[1:], t.slot[1:])) for t in enumerate_rt(n)]
        assert len(listed) == len(set(listed))
        assert set(listed) == brute_trees(n, (0, 1, 2), allowed)


def test_family_counts():
    assert [count_rt(n) for n in range(8)] == RT_COUNTS
    assert [count_irt(n) for n in range(7)] == IRT_COUNTS


def test_every_enumerated_tree_validates():
    for n in range(6):
        for t in enumerate_rt(n):
            validate(t)
        for t in enumerate_irt(n):
            validate(t)
            assert t.size == n


def test_invalid_trees_are_rejected():
    with pytest.raises(InvalidTree):
        validate(RestrictedTernaryTree((-1, 0, 0), (0, 1, 2)))  # middle and right child together
    with pytest.raises(InvalidTree):
        validate(BinaryTree((-1, 1), (0, 0)))  # parent label larger than child


def test_worked_binary_statistics_inorder():
    expected = [("11", 0, 0, 0), ("11", 1, 1, 0), ("10", 2, 0, 2), ("10", 2, 2, 0),
                ("01", 2, 0, 2), ("00", 2, 1, 1), ("00", 1, 0, 1), ("00", 0, 0, 0)]
    got = [(s.node_type, s.lev, s.nid, s.croix) for s in all_vertex_stats(worked_binary_tree(), INORDER)]
    assert got == expected
    assert [v + 1 for v in traversal_order(worked_binary_tree(), INORDER)] == [5, 7, 3, 1, 6, 2, 8, 4]


def test_worked_irt_statistics_preorder_and_aprime():
    # node type, lev, nid/croix for preorder, then for A'
    expected = [("100", 0, 0, 0, 0, 0), ("101", 0, 0, 0, 0, 0), ("100", 1, 0, 1, 0, 1), ("101", 1, 1, 0, 1, 0),
                ("010", 2, 2, 0, 2, 0), ("010", 2, 1, 1, 1, 1), ("001", 2, 0, 2, 0, 2), ("010", 2, 0, 2, 0, 2),
                ("000", 2, 1, 1, 1, 1), ("010", 1, 1, 0, 1, 0), ("001", 1, 1, 0, 1, 0), ("000", 1, 0, 1, 0, 1),
                ("000", 0, 0, 0, 0, 0)]
    t = worked_irt()
    pre = all_vertex_stats(t, PREORDER)
    ap = all_vertex_stats(t, APRIME)
    got = [(a.node_type, a.lev, a.nid, a.croix, b.nid, b.croix) for a, b in zip(pre, ap)]
    assert got == expected
    assert t.size == 16 and len(t.parent) == 13


def test_inorder_is_binary_only():
    t = next(iter(enumerate_rt(3)))
    with pytest.raises(ArityMismatch):
        traversal_order(t, INORDER)


def test_multilabeled_correspondence():
    for n in range(1, 7):
        rts = list(enumerate_rt(n))
        images = {rt_to_multilabeled(t) for t in rts}
        assert len(images) == len(rts)
        assert images == set(enumerate_multilabeled(n))
        for t in rts:
            assert multilabeled_to_rt(rt_to_multilabeled(t)) == t


@settings(max_examples=50, deadline=None)
@given(st.sampled_from(["bt", "rt", "irt"]), st.integers(0, 4), st.integers(0, 10 ** 6))
def test_text_roundtrip(family, n, k):
    from tfrac_lab.trees import enumerate_family
    trees = list(enumerate_family(family, n))
    t = trees[k % len(trees)]
    assert parse_tree(format_tree(t), family) == t


def test_node_types_cover_children():
    t = worked_binary_tree()
    assert [node_type(t, v) for v in range(8)] == ["11", "11", "10", "10", "01", "00", "00", "00"]
