from __future__ import annotations

from itertools import product

from hypothesis import given, settings
from hypothesis import strategies as st

from tfrac_lab.contfrac import CoeffSeq, TFractionSpec, expand_j, expand_s, expand_t
from tfrac_lab.paths import (DYCK, FALL, LEVEL, MOTZKIN, RISE, SCHRODER, Path, alternative_schroder_scheme,
                             dyck_sfraction, enumerate_paths, flajolet_sum, irt_master_schroder_scheme,
                             irt_schroder_label_sets, motzkin_jfraction, path_from_word, render,
                             rt_master_motzkin_scheme, rt_motzkin_label_sets, schroder_tfraction,
                             standard_schroder_scheme, symbolic_scheme)

from oracles import catalan, large_schroder, motzkin


def brute_paths(kind, length):
    """All step words of the given horizontal length that stay weakly
    above the axis and end on it."""
    steps = {MOTZKIN: (RISE, FALL, LEVEL), DYCK: (RISE, FALL), SCHRODER: (RISE, FALL, LEVEL)}[kind]
    out = set()
    width = {RISE: 1, FALL: 1, LEVEL: 2 if kind == SCHRODER else 1}
    for k in range(length + 1):
        for w in product(steps, repeat=k):
            if sum(width[s] for s in w) != length:
                continue
            h, ok = 0, True
            for s in w:
                h += 1 if s == RISE else -1 if s == FALL else 0
                ok &= h >= 0
            if ok and h == 0:
                out.add("".join(w))
    return out


def test_path_counts():
    for n in range(8):
        assert sum(1 for _ in enumerate_paths(MOTZKIN, n)) == motzkin(n)
        assert sum(1 for _ in enumerate_paths(DYCK, 2 * n)) == catalan(n)
        assert sum(1 for _ in enumerate_paths(SCHRODER, 2 * n)) == large_schroder(n)


def test_enumeration_matches_brute_force():
    for kind in (MOTZKIN, DYCK, SCHRODER):
        for length in range(7):
            assert {p.word() for p in enumerate_paths(kind, length)} == brute_paths(kind, length)


def test_heights_and_validity():
    p = path_from_word(SCHRODER, "LUULUUDUULLDULDDLDLUDLDD")
    assert p.is_valid()
    assert p.length == 32
    assert p.heights()[0] == 0 and p.heights()[-1] == 0
    assert not path_from_word(MOTZKIN, "DU").is_valid()


def test_flajolet_symbolic():
    sc = symbolic_scheme()
    for n in range(6):
        assert flajolet_sum(MOTZKIN, n, sc) == expand_j(motzkin_jfraction(sc), n)[n]
        assert flajolet_sum(DYCK, n, sc) == expand_s(dyck_sfraction(sc), n)[n]
    for n in range(5):
        assert flajolet_sum(SCHRODER, n, sc) == expand_t(schroder_tfraction(sc), n)[n]


def test_labeled_flajolet_for_tree_schemes():
    ls, sc = rt_motzkin_label_sets(), rt_master_motzkin_scheme()
    jf = motzkin_jfraction(sc, ls)
    for n in range(5):
        assert flajolet_sum(MOTZKIN, n, sc, ls) == expand_j(jf, n)[n]
    ls, sc = irt_schroder_label_sets(), irt_master_schroder_scheme()
    tf = schroder_tfraction(sc, ls)
    for n in range(5):
        assert flajolet_sum(SCHRODER, n, sc, ls) == expand_t(tf, n)[n]


@settings(max_examples=25, deadline=None)
@given(st.lists(st.integers(-3, 3), min_size=12, max_size=12), st.lists(st.integers(-3, 3), min_size=12, max_size=12))
def test_standard_and_alternative_schroder_schemes(al, de):
    spec = TFractionSpec(CoeffSeq.from_table(al), CoeffSeq.from_table(de))
    ref = expand_t(spec, 5)
    for n in range(6):
        assert flajolet_sum(SCHRODER, n, standard_schroder_scheme(spec)) == ref[n]
        assert flajolet_sum(SCHRODER, n, alternative_schroder_scheme(spec)) == ref[n]


def test_render_shape():
    pic = render(path_from_word(MOTZKIN, "ULD"))
    assert pic.splitlines() == [" _", "/ \\"]
    assert render(path_from_word(SCHRODER, "L")) == "__"
