from __future__ import annotations

from collections import Counter

from hypothesis import given, settings
from hypothesis import strategies as st

from tfrac_lab.permstats import (check_mixed_relation, check_pair_equidistribution, check_trivariate_conjecture,
                                 check_z2z2_symmetry, claesson_equidistribution_check, linear_class, p4,
                                 pattern_count, pattern_distribution, pq_sfraction_check)
from tfrac_lab.poly import Poly, specialize

from oracles import count_2_13, count_31_2, perms

VINCULAR_TABLE = [(1, 0, 0), (2, 1, 0), (3, 0, 2), (4, 2, 0), (5, 0, 2), (6, 1, 1), (7, 0, 1), (8, 0, 0)]


def brute_totals(sigma):
    """(13-2, 31-2, 2-13, 2-31) totals straight from the definitions."""
    n = len(sigma)
    c = [0, 0, 0, 0]
    for j in range(n - 1):
        a, b = sigma[j], sigma[j + 1]
        for i in range(n):
            x = sigma[i]
            if i > j + 1 and min(a, b) < x < max(a, b):
                c[1 if a > b else 0] += 1
            if i < j and min(a, b) < x < max(a, b):
                c[3 if a > b else 2] += 1
    return tuple(c)


def test_vincular_table():
    sigma = (5, 7, 3, 1, 6, 2, 8, 4)
    got = [(l, pattern_count(sigma, l, "31-2"), pattern_count(sigma, l, "2-13")) for l in range(1, 9)]
    assert got == VINCULAR_TABLE


@settings(max_examples=80, deadline=None)
@given(st.permutations(list(range(1, 9))))
def test_pattern_counts_match_definitions(sigma):
    sigma = tuple(sigma)
    for l in range(1, 9):
        assert pattern_count(sigma, l, "31-2") == count_31_2(sigma, l)
        assert pattern_count(sigma, l, "2-13") == count_2_13(sigma, l)
    tot = tuple(sum(pattern_count(sigma, l, tag) for l in range(1, 9)) for tag in ("13-2", "31-2", "2-13", "2-31"))
    assert tot == brute_totals(sigma)


def test_vectorized_distribution_matches_brute_force():
    for n in range(7):
        brute = Counter(brute_totals(s) for s in perms(n))
        assert Counter(dict(pattern_distribution(n))) == brute


def test_parallel_sweep_is_deterministic():
    assert pattern_distribution(7, 1) == pattern_distribution(7, 2)


def test_linear_classes():
    sigma = (2, 3, 1)
    assert [linear_class(sigma, i) for i in (1, 2, 3)] == ["dasc", "peak", "ddes"]


def test_z2z2_symmetry_and_only_these():
    for n in range(1, 9):
        assert check_z2z2_symmetry(n)["pass"]
    for n in (5, 6):
        r = check_z2z2_symmetry(n)
        assert r["only_these"] and len(r["stabilizer"]) == 4


def test_complement_reverse_invariance_of_p4():
    p, q, r, s = (Poly.var(c) for c in "pqrs")
    for n in range(7):
        P = p4(n)
        assert specialize(P, {"p": q, "q": p, "r": s, "s": r}) == P


def test_conjecture_and_mixed_relation():
    assert check_trivariate_conjecture(8)["pass"]
    assert all(check_mixed_relation(n) for n in range(1, 9))


def test_equidistribution_checks():
    for n in range(9):
        assert check_pair_equidistribution(n)["pass"]
        assert claesson_equidistribution_check(n)["pass"]


def test_pq_sfraction():
    assert pq_sfraction_check(7)["pass"]
