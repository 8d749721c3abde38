"""Bijections between tree families and labeled paths or permutations.

RTs on [n+1] correspond to labeled Motzkin paths of length n and IRTs on
[0,n] to labeled Schroeder paths of length 2n.  Both inverses replay the
growth of the tree through "slotted" partial trees whose placeholder leaves
(infinity) mark where later vertices will be attached.
"""

from __future__ import annotations

from typing import Dict, List, Sequence, Tuple

from .errors import InvalidTree, LabelOutOfRange, TfracError
from .paths import (FALL, LEVEL, MOTZKIN, RISE, SCHRODER, LabeledPath, Path,
                    irt_master_schroder_scheme, irt_schroder_label_sets, labeled_path_weight,
                    labels_admissible, rt_motzkin_label_sets)
from .poly import Poly
from .trees import (L, M, R, BinaryTree, IntervalLabeledRTT, RestrictedTernaryTree,
                    all_vertex_stats, children, node_type, order_from_children, traversal_order,
                    validate)

INF = None

_LEVEL_TYPE = {"100": 1, "010": 2, "001": 3}
_TYPE_SLOTS = {"101": (L, R), "000": (), "100": (L,), "010": (M,), "001": (R,)}


class _SlottedTree:
    """Partial tree: nodes carry a payload (None for a placeholder)."""

    def __init__(self):
        self.payload: List = []
        self.ch: List[List[int]] = []
        self.parent: List[Tuple[int, int]] = []

    def add(self, payload, parent: int = -1, slot: int = 0) -> int:
        i = len(self.payload)
        self.payload.append(payload)
        self.ch.append([-1, -1, -1])
        self.parent.append((parent, slot))
        if parent >= 0:
            self.ch[parent][slot] = i
        return i

    def slots_in_order(self, algorithm: str) -> List[int]:
        order = order_from_children(self.ch, 0, algorithm)
        return [v for v in order if self.payload[v] is INF]

    def fill(self, algorithm: str, xi: int, payload, slots: Sequence[int]) -> int:
        free = self.slots_in_order(algorithm)
        if not 0 <= xi < len(free):
            raise LabelOutOfRange("label %d but only %d open slots" % (xi, len(free)))
        v = free[xi]
        self.payload[v] = payload
        for s in slots:
            self.add(INF, v, s)
        return v


# ----------------------------------------------------------------------
# RT <-> labeled Motzkin paths

def rt_to_labeled_motzkin(tree: RestrictedTernaryTree, algorithm: str = "preorder") -> LabeledPath:
    """One step per vertex 1..n of an RT on [n+1]: 101 rise, 000 fall,
    100/010/001 level steps of type 1/2/3.  The label is nid, paired with
    the type for level steps."""
    n = len(tree.parent) - 1
    if n < 0:
        raise InvalidTree("the tree must have at least one vertex")
    stats = all_vertex_stats(tree, algorithm)
    steps, labels = [], []
    for v in range(n):
        st = stats[v]
        t = st.node_type
        if t == "101":
            steps.append(RISE)
            labels.append(st.nid)
        elif t == "000":
            steps.append(FALL)
            labels.append(st.nid)
        else:
            steps.append(LEVEL)
            labels.append((_LEVEL_TYPE[t], st.nid))
    return LabeledPath(Path(MOTZKIN, tuple(steps)), tuple(labels))


def labeled_motzkin_to_rt(path: Path, labels: Sequence, algorithm: str = "preorder") -> RestrictedTernaryTree:
    if not path.is_valid():
        raise TfracError("not a Motzkin path: %s" % path.word())
    if not labels_admissible(path, labels, rt_motzkin_label_sets()):
        raise LabelOutOfRange("labels %r are not admissible for %s" % (tuple(labels), path.word()))
    st = _SlottedTree()
    st.add(INF)
    inv = {1: "100", 2: "010", 3: "001"}
    for i, (s, lab) in enumerate(zip(path.steps, labels), start=1):
        if s == RISE:
            t, xi = "101", lab
        elif s == FALL:
            t, xi = "000", lab
        else:
            t, xi = inv[lab[0]], lab[1]
        st.fill(algorithm, xi, i, _TYPE_SLOTS[t])
    last = st.slots_in_order(algorithm)
    if len(last) != 1:
        raise TfracError("replay left %d open slots" % len(last))
    st.payload[last[0]] = len(path.steps) + 1
    return _rt_from_slotted(st)


def _rt_from_slotted(st: _SlottedTree) -> RestrictedTernaryTree:
    n = len(st.payload)
    parent = [-1] * n
    slot = [0] * n
    for node, lab in enumerate(st.payload):
        p, s = st.parent[node]
        if p >= 0:
            parent[lab - 1] = st.payload[p] - 1
            slot[lab - 1] = s
    t = RestrictedTernaryTree(tuple(parent), tuple(slot))
    validate(t)
    return t


# ----------------------------------------------------------------------
# IRT <-> labeled Schroeder paths

def irt_segments(tree: IntervalLabeledRTT) -> List[str]:
    """The segment word of each vertex, in vertex order."""
    m = len(tree.parent) - 1
    n = tree.size
    if m == 0:
        return [LEVEL * n]
    out = []
    for v in range(m + 1):
        j = tree.sizes[v] - 1
        if v == 0:
            out.append(LEVEL * j + RISE)
        elif v == m:
            out.append(FALL + LEVEL * j)
        else:
            t = node_type(tree, v)
            if t == "010":
                out.append(LEVEL)
            else:
                first = RISE if t[0] == "1" else FALL
                last = RISE if t[2] == "1" else FALL
                out.append(first + LEVEL * j + last)
    return out


def irt_to_labeled_schroder(tree: IntervalLabeledRTT, algorithm: str = "preorder") -> LabeledPath:
    segs = irt_segments(tree)
    stats = all_vertex_stats(tree, algorithm)
    steps: List[str] = []
    labels: List[int] = []
    for v, seg in enumerate(segs):
        for k, s in enumerate(seg):
            steps.append(s)
            labels.append(stats[v].nid if (k == 0 and v > 0) else 0)
    return LabeledPath(Path(SCHRODER, tuple(steps)), tuple(labels))


def split_segments(path: Path) -> List[Tuple[int, int]]:
    """Step-index ranges [start, end) of the segments of a Schroeder path
    with at least one rise."""
    steps = path.steps
    h = path.heights()
    first_rise = steps.index(RISE)
    last_fall = max(i for i, s in enumerate(steps) if s == FALL and h[i + 1] == 0)
    segs = [(0, first_rise + 1)]
    start = first_rise + 1
    for i in range(first_rise + 1, last_fall):
        if h[i + 1] % 2 == 1:
            segs.append((start, i + 1))
            start = i + 1
    if start != last_fall:
        raise TfracError("malformed segmentation")  # cannot happen on valid input
    segs.append((last_fall, len(steps)))
    return segs


def _leven(path: Path, lo: int, hi: int) -> int:
    h = path.heights()
    return sum(1 for i in range(lo, hi) if path.steps[i] == LEVEL and h[i] % 2 == 0)


def _segment_type(word: str) -> str:
    if word == LEVEL:
        return "010"
    return "%d0%d" % (word[0] == RISE, word[-1] == RISE)


def labeled_schroder_to_irt(path: Path, labels: Sequence, algorithm: str = "preorder") -> IntervalLabeledRTT:
    if not path.is_valid():
        raise TfracError("not a Schroeder path: %s" % path.word())
    if not labels_admissible(path, labels, irt_schroder_label_sets()):
        raise LabelOutOfRange("labels %r are not admissible for %s" % (tuple(labels), path.word()))
    if RISE not in path.steps:
        return IntervalLabeledRTT((-1,), (0,), (len(path.steps) + 1,))
    segs = split_segments(path)
    m = len(segs) - 1
    sizes = [path.steps[: segs[0][1]].count(LEVEL) + 1]
    sizes += [_leven(path, lo, hi) + 1 for lo, hi in segs[1:m]]
    sizes.append(path.steps[segs[m][0]:].count(LEVEL) + 1)
    st = _SlottedTree()
    root = st.add(0)
    st.add(INF, root, L)
    for i in range(1, m):
        lo, hi = segs[i]
        t = _segment_type("".join(path.steps[lo:hi]))
        st.fill(algorithm, labels[lo], i, _TYPE_SLOTS[t])
    last = st.slots_in_order(algorithm)
    if len(last) != 1:
        raise TfracError("replay left %d open slots" % len(last))
    st.payload[last[0]] = m
    parent = [-1] * (m + 1)
    slot = [0] * (m + 1)
    for node, v in enumerate(st.payload):
        p, s = st.parent[node]
        if p >= 0:
            parent[v] = st.payload[p]
            slot[v] = s
    t = IntervalLabeledRTT(tuple(parent), tuple(slot), tuple(sizes))
    validate(t)
    return t


def schroder_weight_of_tree(tree: IntervalLabeledRTT, algorithm: str = "preorder") -> Poly:
    """Product of the master step weights along the tree's labeled path."""
    lp = irt_to_labeled_schroder(tree, algorithm)
    return labeled_path_weight(lp.path, lp.labels, irt_master_schroder_scheme())


# ----------------------------------------------------------------------
# binary trees <-> permutations

def bt_to_permutation(tree: BinaryTree) -> Tuple[int, ...]:
    """Read the labels in inorder."""
    return tuple(v + 1 for v in traversal_order(tree, "inorder"))


def permutation_to_bt(sigma: Sequence[int]) -> BinaryTree:
    """Inverse: the minimum letter is the root, the letters to its left form
    the left subtree and those to its right the right subtree."""
    n = len(sigma)
    parent = [-1] * n
    slot = [0] * n
    stack: List[int] = []  # increasing letters on the right spine
    for x in sigma:
        last = -1
        while stack and stack[-1] > x:
            last = stack.pop()
        if last >= 0:
            parent[last - 1] = x - 1
            slot[last - 1] = L
        if stack:
            parent[x - 1] = stack[-1] - 1
            slot[x - 1] = R
        stack.append(x)
    t = BinaryTree(tuple(parent), tuple(slot))
    validate(t)
    return t
