from __future__ import annotations

import random
from math import factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tfrac_lab.contfrac import (CoeffSeq, JFractionSpec, QuasiAffineSpec, SFractionSpec, TFractionSpec,
                                contraction_sides, expand_j, expand_s, expand_t, odd_contract, quasi_affine,
                                series_to_jfraction, spec_from_json, transformation_sides)
from tfrac_lab.errors import OddDeltaNonzero, TerminatingFraction
from tfrac_lab.poly import Poly

from oracles import catalan, jfraction_numeric, large_schroder, motzkin, tfraction_numeric

coef = st.integers(-4, 4)


def qa(*vals):
    return quasi_affine(QuasiAffineSpec.from_tuple(vals))


def test_quasi_affine_known_sequences():
    assert expand_t(qa(1, 1, 1, 1, 1, 1, 1, 1), 7).to_ints() == [1, 2, 6, 24, 124, 800, 6208, 56240]
    assert expand_t(qa(1, 1, 1, 1, 1, 1, 0, 1), 7).to_ints() == [1, 2, 6, 23, 109, 632, 4390, 35621]
    assert expand_t(qa(1, 1, 1, 1, 0, 1, 0, 1), 7).to_ints() == [1, 1, 3, 11, 51, 295, 2055, 16715]


def test_classical_fractions():
    # 1/(1 - t/(1 - t/...)) is the Catalan series; 1/(1 - t - t^2/(...)) Motzkin
    assert expand_s(SFractionSpec(CoeffSeq.constant(1)), 8).to_ints() == [catalan(n) for n in range(9)]
    j = JFractionSpec(CoeffSeq.constant(1), CoeffSeq.constant(1))
    assert expand_j(j, 8).to_ints() == [motzkin(n) for n in range(9)]
    t = TFractionSpec(CoeffSeq.constant(1), CoeffSeq.constant(1))
    assert expand_t(t, 7).to_ints() == [large_schroder(n) for n in range(8)]
    s = SFractionSpec(CoeffSeq.from_rule(lambda n: (n + 1) // 2))
    assert expand_s(s, 7).to_ints() == [factorial(n) for n in range(8)]


@settings(max_examples=40, deadline=None)
@given(st.lists(coef, min_size=14, max_size=14), st.lists(coef, min_size=14, max_size=14))
def test_expand_t_matches_top_down_oracle(al, de):
    N = 6
    spec = TFractionSpec(CoeffSeq.from_table(al), CoeffSeq.from_table(de))
    assert expand_t(spec, N).to_ints() == [int(c) for c in tfraction_numeric(lambda k: al[k - 1] if k <= 14 else 0,
                                                                           lambda k: de[k - 1] if k <= 14 else 0, N)]


@settings(max_examples=40, deadline=None)
@given(st.lists(coef, min_size=10, max_size=10), st.lists(coef, min_size=10, max_size=10))
def test_expand_j_matches_oracle(ga, be):
    N = 7
    spec = JFractionSpec(CoeffSeq.from_table(ga, start=0), CoeffSeq.from_table(be))
    oracle = jfraction_numeric(lambda k: ga[k] if k < 10 else 0, lambda k: be[k - 1] if 1 <= k <= 10 else 0, N)
    assert expand_j(spec, N).to_ints() == [int(c) for c in oracle]


def test_truncation_contract():
    spec = qa(1, 2, 1, 1, 1, 1, 1, 1)
    a = expand_t(spec, 6)
    assert expand_t(spec, 6, depth=20, trim=False) == a
    assert expand_t(spec, 9).truncate(6) == a


def test_symbolic_expansion_first_terms():
    spec = quasi_affine(QuasiAffineSpec.symbolic())
    s = expand_t(spec, 2)
    x, y, a, b = (Poly.var(c) for c in "xyab")
    assert s[1] == x + a
    assert s[2] == (x + a) ** 2 + x * (y + b)


@settings(max_examples=30, deadline=None)
@given(st.lists(coef, min_size=20, max_size=20), st.lists(coef, min_size=20, max_size=20))
def test_odd_contraction(al, de):
    delta = CoeffSeq.from_rule(lambda n: 0 if n % 2 else (de[n - 1] if n <= 20 else 0))
    lhs, rhs = contraction_sides(TFractionSpec(CoeffSeq.from_table(al), delta), 8)
    assert lhs == rhs


def test_odd_contraction_rejects_odd_delta():
    with pytest.raises(OddDeltaNonzero):
        odd_contract(qa(1, 1, 1, 1, 1, 1, 1, 1))


def test_odd_contraction_symbolic_quasi_affine():
    spec = quasi_affine(QuasiAffineSpec.symbolic())
    sym0 = dict(zip("ac", (0, 0)))
    spec = TFractionSpec(spec.alpha, spec.delta.specialize(sym0))
    lhs, rhs = contraction_sides(spec, 5)
    assert lhs == rhs


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_transformation(seed):
    rng = random.Random(seed)
    tab = lambda: CoeffSeq.from_table([rng.randint(-4, 4) for _ in range(20)])
    lhs, rhs = transformation_sides(tab(), tab(), tab(), 8)
    assert lhs == rhs


def test_series_to_jfraction_recovers_coefficients():
    j = series_to_jfraction([motzkin(n) for n in range(12)], 5)
    assert [int(j.gamma(k).constant_value()) for k in range(5)] == [1] * 5
    assert [int(j.beta(k).constant_value()) for k in range(1, 5)] == [1] * 4


def test_series_to_jfraction_terminating():
    # 1/(1 - t) is a J-fraction of depth 1
    with pytest.raises(TerminatingFraction) as exc:
        series_to_jfraction([1] * 12, 4)
    assert exc.value.depth == 1


def test_spec_from_json_rules_and_tables():
    s = spec_from_json({"kind": "S", "alpha": "n"})
    assert expand_s(s, 5).to_ints() == [1, 1, 3, 15, 105, 945]
    t = spec_from_json({"quasi_affine": [1, 1, 1, 1, 1, 1, 1, 1]})
    assert expand_t(t, 3).to_ints() == [1, 2, 6, 24]
    j = spec_from_json({"kind": "J", "gamma": [1, 1, 1, 1, 1], "beta": {"table": [1], "default": 1}})
    assert expand_j(j, 5).to_ints() == [motzkin(n) for n in range(6)]
    odd_even = spec_from_json({"alpha": {"odd": "k", "even": "k"}})
    assert expand_t(odd_even, 5).to_ints() == [factorial(n) for n in range(6)]
