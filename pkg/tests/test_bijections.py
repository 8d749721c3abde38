from __future__ import annotations

from itertools import permutations

import pytest

from tfrac_lab.bijections import (bt_to_permutation, irt_to_labeled_schroder, labeled_motzkin_to_rt,
                                  labeled_schroder_to_irt, permutation_to_bt, schroder_weight_of_tree)
from tfrac_lab.errors import LabelOutOfRange
from tfrac_lab.paths import MOTZKIN, path_from_word
from tfrac_lab.treepolys import irt_master_weight
from tfrac_lab.trees import APRIME, POSTORDER, PREORDER, enumerate_binary, enumerate_irt, worked_binary_tree, worked_irt

from bijection_checks import check_irt, check_rt


@pytest.mark.parametrize("algorithm", [PREORDER, POSTORDER, APRIME])
def test_rt_bijection_small(algorithm):
    assert [check_rt(k, algorithm) for k in range(1, 6)] == [1, 3, 11, 51, 295]


@pytest.mark.parametrize("algorithm", [PREORDER, POSTORDER, APRIME])
def test_irt_bijection_small(algorithm):
    assert [check_irt(n, algorithm) for n in range(5)] == [1, 2, 6, 23, 109]


def test_worked_irt_path():
    lp = irt_to_labeled_schroder(worked_irt(), PREORDER)
    assert lp.path.word() == "LUULUUDUULLDULDDLDLUDLDD"
    assert lp.labels == (0, 0, 0, 0, 0, 0, 0, 1, 0, 2, 1, 0, 0, 0, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0)
    assert labeled_schroder_to_irt(lp.path, lp.labels, PREORDER) == worked_irt()


def test_path_weight_equals_tree_weight():
    for n in range(5):
        for t in enumerate_irt(n):
            assert schroder_weight_of_tree(t) == irt_master_weight(t)


def test_inadmissible_labels_rejected():
    with pytest.raises(LabelOutOfRange):
        labeled_motzkin_to_rt(path_from_word(MOTZKIN, "UD"), (0, 2))


def test_binary_trees_and_permutations():
    assert bt_to_permutation(worked_binary_tree()) == (5, 7, 3, 1, 6, 2, 8, 4)
    for n in range(7):
        images = set()
        for t in enumerate_binary(n):
            sigma = bt_to_permutation(t)
            images.add(sigma)
            assert permutation_to_bt(sigma) == t
        assert images == set(permutations(range(1, n + 1)))
