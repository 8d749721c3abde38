"""Exhaustive roundtrip and height/label-law checks for the path
bijections, shared by the unit tests and the acceptance harness."""

from __future__ import annotations

from tfrac_lab.bijections import (irt_segments, irt_to_labeled_schroder, labeled_motzkin_to_rt,
                                  labeled_schroder_to_irt, rt_to_labeled_motzkin)
from tfrac_lab.paths import FALL, LEVEL, RISE, irt_schroder_label_sets, labels_admissible, rt_motzkin_label_sets
from tfrac_lab.trees import all_vertex_stats, enumerate_irt, enumerate_rt

_LEVEL_TYPE = {"100": 1, "010": 2, "001": 3}


def check_rt(n_vertices: int, algorithm: str) -> int:
    """Every RT on [n_vertices]; returns the number of trees checked."""
    seen = set()
    ls = rt_motzkin_label_sets()
    count = 0
    for t in enumerate_rt(n_vertices):
        lp = rt_to_labeled_motzkin(t, algorithm)
        p = lp.path
        assert p.is_valid()
        assert labels_admissible(p, lp.labels, ls)
        key = (p.steps, lp.labels)
        assert key not in seen
        seen.add(key)
        stats = all_vertex_stats(t, algorithm)
        hs = p.heights()
        for i, (step, lab) in enumerate(zip(p.steps, lp.labels)):
            st = stats[i]
            assert hs[i] == st.lev  # the path sits at the level of the vertex it encodes
            assert hs[i + 1] == stats[i + 1].lev
            if step == LEVEL:
                assert lab == (_LEVEL_TYPE[st.node_type], st.nid)
            else:
                assert step == (RISE if st.node_type == "101" else FALL)
                assert lab == st.nid
            assert st.croix + st.nid == st.lev
        assert labeled_motzkin_to_rt(p, lp.labels, algorithm) == t
        count += 1
    return count


def check_irt(n: int, algorithm: str) -> int:
    seen = set()
    ls = irt_schroder_label_sets()
    count = 0
    for t in enumerate_irt(n):
        lp = irt_to_labeled_schroder(t, algorithm)
        p = lp.path
        assert p.is_valid() and p.length == 2 * n
        assert labels_admissible(p, lp.labels, ls)
        key = (p.steps, lp.labels)
        assert key not in seen
        seen.add(key)
        m = len(t.parent) - 1
        if m:
            stats = all_vertex_stats(t, algorithm)
            hs = p.heights()
            pos = 0
            for v, seg in enumerate(irt_segments(t)):
                start, end = hs[pos], hs[pos + len(seg)]
                st = stats[v]
                if v == 0:
                    assert (start, end) == (0, 1)
                elif v == m:
                    assert (start, end) == (1, 0)
                else:
                    assert start == 2 * st.lev + 1
                    delta = {"101": 2, "000": -2}.get(st.node_type, 0)
                    assert end == start + delta
                    assert lp.labels[pos] == st.nid
                    assert st.croix + st.nid == st.lev
                assert all(x == 0 for x in lp.labels[pos + 1:pos + len(seg)])
                pos += len(seg)
            assert pos == len(p.steps)
        assert labeled_schroder_to_irt(p, lp.labels, algorithm) == t
        count += 1
    return count
