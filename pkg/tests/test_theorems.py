from __future__ import annotations

import pytest

from tfrac_lab import theorems
from tfrac_lab.contfrac import CoeffSeq, TFractionSpec
from tfrac_lab.poly import IndexedSymbol, Poly
from tfrac_lab.theorems import THEOREM_IDS, PrimeSpecialization, VerifySpec, verify, verify_all
from tfrac_lab.treepolys import q_rt


@pytest.mark.parametrize("theorem", THEOREM_IDS)
def test_default_order_passes(theorem):
    r = verify(theorem)
    assert r["pass"], r.get("mismatch")


def test_ids_are_unique_and_complete():
    assert len(set(THEOREM_IDS)) == len(THEOREM_IDS) == 30


def test_prime_map_is_injective_and_stable():
    ps = PrimeSpecialization()
    syms = [IndexedSymbol(b, (i, j)) for b in ("a", "b", "c", "d", "f", "ah", "bh") for i in range(8) for j in range(8)]
    syms += [IndexedSymbol(b, (i,)) for b in ("mu", "nu", "e") for i in range(10)]
    syms += [IndexedSymbol(b, ()) for b in ("x1", "x2", "y1", "y2", "w", "z")]
    vals = [ps(s) for s in syms]
    assert len(set(vals)) == len(vals)
    assert PrimeSpecialization()(syms[17]) == vals[17]
    odd = [IndexedSymbol("a", (20, 3)), IndexedSymbol("zeta", (1,)), IndexedSymbol("a", (1, 2, 3))]
    big = [ps(s) for s in odd]
    assert len(set(big + vals)) == len(big) + len(vals)


def test_prime_specialized_master_check():
    r = verify("thm-rt-master-t", order=6, specialization="primes")
    assert r["pass"]


def test_perturbed_fraction_is_caught():
    good = theorems.master_t("cdf")
    bad = TFractionSpec(CoeffSeq.from_rule(lambda n: good.alpha(n) + (Poly.var("a", 0, 0) if n == 4 else 0)),
                        good.delta)
    spec = VerifySpec("thm-rt-master-t", specialization="primes")
    res = theorems._tree_vs_fraction(spec, 5, lambda n, a: q_rt(n, "preorder", a), bad, "T")
    assert not res["pass"] and res["mismatch"]["n"] == 4


def test_mapping_specialization_and_counts():
    r = verify("thm-rt-simple-t", specialization={"x1": 1, "x2": 1, "y1": 1, "y2": 1, "w": 1}, order=8)
    assert r["pass"]
    r = verify("cor-irt-counts", order=6)
    assert r["pass"] and r["order"] == 6


def test_traversals():
    for trav in ("preorder", "postorder", "aprime"):
        assert verify("thm-irt-master-t", traversal=trav)["pass"]
    assert verify("thm-bt-master-j", traversal="inorder")["pass"]


def test_random_identity_trials():
    r = verify(VerifySpec("prop-odd-contraction", trials=25, seed=3))
    assert r["pass"] and r["trials"] == 25


def test_rt_to_irt_ogf_series():
    s = theorems.rt_to_irt_ogf(3)
    from tfrac_lab.treepolys import p_irt
    assert [s[n] for n in range(4)] == [p_irt(n) for n in range(4)]


def test_unknown_id():
    with pytest.raises(KeyError):
        verify("thm-nope")


def test_verify_all_subset():
    rep = verify_all(ids=["thm-bt-simple-t", "cor-rt-counts"])
    assert rep["pass"] and len(rep["results"]) == 2
