"""Increasing binary trees, restricted ternary trees (RTs), interval-labeled
RTs (IRTs) and binary multilabeled trees: validation, enumeration,
traversals and per-vertex statistics.

Trees are stored as two tuples: ``parent[i]`` (``-1`` for the root) and
``slot[i]`` (``L``, ``M`` or ``R``) for vertices ``0..m-1`` in increasing
label order.  For binary trees and RTs vertex ``i`` carries label ``i+1``;
an IRT additionally stores the interval sizes, and vertex ``i`` carries the
next ``sizes[i]`` consecutive labels starting from 0.
"""

from __future__ import annotations

import re
from functools import lru_cache
from typing import Dict, Iterator, List, NamedTuple, Optional, Sequence, Tuple

from .errors import ArityMismatch, InvalidTree

L, M, R = 0, 1, 2
SLOT_NAMES = "LMR"

PREORDER = "preorder"
POSTORDER = "postorder"
INORDER = "inorder"
APRIME = "aprime"
TRAVERSALS = (PREORDER, POSTORDER, INORDER, APRIME)
_ALIASES = {"pre": PREORDER, "post": POSTORDER, "in": INORDER, "a'": APRIME,
            "a-prime": APRIME, "lrmr": APRIME, "left-root-middle-right": APRIME}


def traversal_name(name: str) -> str:
    key = name.strip().lower()
    key = _ALIASES.get(key, key)
    if key not in TRAVERSALS:
        raise ValueError("unknown traversal %r (choose from %s)" % (name, ", ".join(TRAVERSALS)))
    return key


class BinaryTree(NamedTuple):
    parent: Tuple[int, ...]
    slot: Tuple[int, ...]

    family = "bt"
    arity = 2

    @property
    def size(self) -> int:
        return len(self.parent)

    def label(self, v: int) -> int:
        return v + 1

    def labels(self, v: int) -> Tuple[int, ...]:
        return (v + 1,)


class RestrictedTernaryTree(NamedTuple):
    parent: Tuple[int, ...]
    slot: Tuple[int, ...]

    family = "rt"
    arity = 3

    @property
    def size(self) -> int:
        return len(self.parent)

    def label(self, v: int) -> int:
        return v + 1

    def labels(self, v: int) -> Tuple[int, ...]:
        return (v + 1,)


class IntervalLabeledRTT(NamedTuple):
    parent: Tuple[int, ...]
    slot: Tuple[int, ...]
    sizes: Tuple[int, ...]

    family = "irt"
    arity = 3

    @property
    def size(self) -> int:
        """n, where the label set is [0, n]."""
        return sum(self.sizes) - 1

    def intervals(self) -> List[Tuple[int, int]]:
        out, lo = [], 0
        for s in self.sizes:
            out.append((lo, lo + s - 1))
            lo += s
        return out

    def label(self, v: int) -> int:
        """Vertex identity: the interval minimum."""
        return sum(self.sizes[:v])

    def labels(self, v: int) -> Tuple[int, ...]:
        lo = sum(self.sizes[:v])
        return tuple(range(lo, lo + self.sizes[v]))

    def vertex_of(self, label: int) -> int:
        for v, (lo, hi) in enumerate(self.intervals()):
            if lo <= label <= hi:
                return v
        raise KeyError(label)

    def label_surplus(self) -> int:
        return sum(self.sizes) - len(self.sizes)


class MultiLabeledBinaryTree(NamedTuple):
    parent: Tuple[int, ...]
    slot: Tuple[int, ...]
    labelsets: Tuple[Tuple[int, ...], ...]

    family = "mlbt"
    arity = 2

    def labels(self, v: int) -> Tuple[int, ...]:
        return self.labelsets[v]


class VertexStats(NamedTuple):
    node_type: str
    lev: int
    croix: int
    nid: int
    label_surplus: int = 0


AnyTree = object


# ----------------------------------------------------------------------
# structure helpers

@lru_cache(maxsize=8192)
def children(tree) -> Tuple[Tuple[int, int, int], ...]:
    """Per vertex, the (L, M, R) children with -1 for an empty slot."""
    ch = [[-1, -1, -1] for _ in tree.parent]
    for v, (p, s) in enumerate(zip(tree.parent, tree.slot)):
        if p >= 0:
            ch[p][s] = v
    return tuple(tuple(c) for c in ch)


def node_type(tree, v: int) -> str:
    c = children(tree)[v]
    if tree.arity == 2:
        return "%d%d" % (c[L] >= 0, c[R] >= 0)
    return "%d%d%d" % (c[L] >= 0, c[M] >= 0, c[R] >= 0)


def validate(tree) -> None:
    """Raise InvalidTree unless ``tree`` satisfies its family's invariants."""
    n = len(tree.parent)
    if len(tree.slot) != n:
        raise InvalidTree("parent and slot arrays differ in length")
    if n == 0:
        if tree.family == "irt":
            raise InvalidTree("an IRT has at least its root")
        return
    if tree.parent[0] != -1:
        raise InvalidTree("vertex with smallest label must be the root")
    seen = set()
    for v in range(1, n):
        p, s = tree.parent[v], tree.slot[v]
        if not 0 <= p < v:
            raise InvalidTree("labels must increase from parent to child (vertex %d)" % v)
        if s not in (L, M, R) or (tree.arity == 2 and s == M):
            raise InvalidTree("bad slot %r" % (s,))
        if (p, s) in seen:
            raise InvalidTree("slot %s of vertex %d used twice" % (SLOT_NAMES[s], p))
        seen.add((p, s))
    if tree.arity == 3:
        for v, c in enumerate(children(tree)):
            if c[M] >= 0 and (c[L] >= 0 or c[R] >= 0):
                raise InvalidTree("middle child of vertex %d has a sibling" % v)
    if tree.family == "irt":
        sizes = tree.sizes
        if len(sizes) != n or any(s < 1 for s in sizes):
            raise InvalidTree("interval sizes must be positive, one per vertex")
        c0 = children(tree)[0]
        if c0[M] >= 0 or c0[R] >= 0:
            raise InvalidTree("the root can only have a left child")
        for v in range(1, n):
            if tree.slot[v] == M and sizes[tree.parent[v]] != 1:
                raise InvalidTree("a vertex with a middle child must carry a single label")
    if tree.family == "mlbt":
        flat = sorted(x for ls in tree.labelsets for x in ls)
        if flat != list(range(1, len(flat) + 1)):
            raise InvalidTree("label sets must partition [n]")
        for v in range(1, n):
            if min(tree.labelsets[v]) <= max(tree.labelsets[tree.parent[v]]):
                raise InvalidTree("child labels must exceed parent labels")
        mins = [min(ls) for ls in tree.labelsets]
        if mins != sorted(mins):
            raise InvalidTree("vertices must be listed by increasing minimum label")


def is_valid(tree) -> bool:
    try:
        validate(tree)
    except InvalidTree:
        return False
    return True


# ----------------------------------------------------------------------
# construction from labeled edge lists

def _from_edges(n_vertices: int, edges: Dict[int, Dict[str, int]]):
    parent = [-1] * n_vertices
    slot = [0] * n_vertices
    for p, kids in edges.items():
        for s, c in kids.items():
            parent[c] = p
            slot[c] = SLOT_NAMES.index(s.upper())
    return tuple(parent), tuple(slot)


def binary_from_edges(n: int, edges: Dict[int, Dict[str, int]]) -> BinaryTree:
    """``edges`` maps a label to {"L": label, "R": label}."""
    e = {p - 1: {s: c - 1 for s, c in k.items()} for p, k in edges.items()}
    t = BinaryTree(*_from_edges(n, e))
    validate(t)
    return t


def rt_from_edges(n: int, edges: Dict[int, Dict[str, int]]) -> RestrictedTernaryTree:
    e = {p - 1: {s: c - 1 for s, c in k.items()} for p, k in edges.items()}
    t = RestrictedTernaryTree(*_from_edges(n, e))
    validate(t)
    return t


def irt_from_edges(intervals: Sequence[Tuple[int, int]], edges: Dict[int, Dict[str, int]]) -> IntervalLabeledRTT:
    """``intervals`` lists (lo, hi) in increasing order; ``edges`` keys and
    values are interval minima."""
    index = {lo: i for i, (lo, _) in enumerate(intervals)}
    e = {index[p]: {s: index[c] for s, c in k.items()} for p, k in edges.items()}
    parent, slot = _from_edges(len(intervals), e)
    t = IntervalLabeledRTT(parent, slot, tuple(hi - lo + 1 for lo, hi in intervals))
    validate(t)
    return t


def worked_binary_tree() -> BinaryTree:
    """The increasing binary tree on [8] used in the statistics examples."""
    return binary_from_edges(8, {1: {"L": 3, "R": 2}, 3: {"L": 5}, 5: {"R": 7},
                                 2: {"L": 6, "R": 4}, 4: {"L": 8}})


def worked_rt() -> RestrictedTernaryTree:
    return rt_from_edges(6, {1: {"L": 2, "R": 3}, 2: {"M": 4}, 3: {"L": 5}, 5: {"R": 6}})


def worked_multilabeled() -> MultiLabeledBinaryTree:
    return MultiLabeledBinaryTree((-1, 0, 0, 2, 3), (0, L, R, L, R), ((1,), (2, 4), (3,), (5,), (6,)))


def worked_irt() -> IntervalLabeledRTT:
    """The IRT on [0,16] with 13 vertices used in the statistics examples."""
    intervals = [(0, 1), (2, 3), (4, 4), (5, 5), (6, 6), (7, 7), (8, 8), (9, 9),
                 (10, 10), (11, 11), (12, 13), (14, 15), (16, 16)]
    edges = {0: {"L": 2}, 2: {"L": 4, "R": 5}, 4: {"L": 8}, 8: {"R": 9}, 9: {"M": 14},
             5: {"L": 7, "R": 6}, 7: {"M": 10}, 6: {"M": 11}, 11: {"M": 12}, 12: {"R": 16}}
    return irt_from_edges(intervals, edges)


# ----------------------------------------------------------------------
# enumeration by inserting the new maximum at every legal slot

def _grow(n: int, slots_for: Tuple[int, ...], restricted: bool) -> Iterator[Tuple[Tuple[int, ...], Tuple[int, ...]]]:
    if n == 0:
        yield (), ()
        return
    parent = [-1] * n
    slot = [0] * n
    mask = [0] * n  # bit s set when slot s is occupied
    mbit = 1 << M

    def legal(m: int, s: int) -> bool:
        if restricted:
            if s == M:
                return m == 0
            return not (m & (1 << s)) and not (m & mbit)
        return not (m & (1 << s))

    def rec(k: int):
        # place vertex k
        if k == n - 1:
            for p in range(k):
                m = mask[p]
                for s in slots_for:
                    if legal(m, s):
                        parent[k] = p
                        slot[k] = s
                        yield tuple(parent), tuple(slot)
            return
        for p in range(k):
            m = mask[p]
            for s in slots_for:
                if legal(m, s):
                    parent[k] = p
                    slot[k] = s
                    mask[p] = m | (1 << s)
                    yield from rec(k + 1)
                    mask[p] = m

    if n == 1:
        yield (-1,), (0,)
        return
    yield from rec(1)


def enumerate_binary(n: int) -> Iterator[BinaryTree]:
    """All n! increasing binary trees on [n]."""
    for p, s in _grow(n, (L, R), False):
        yield BinaryTree(p, s)


def enumerate_rt(n: int) -> Iterator[RestrictedTernaryTree]:
    """All increasing restricted ternary trees on [n]."""
    for p, s in _grow(n, (L, M, R), True):
        yield RestrictedTernaryTree(p, s)


def _compositions(total: int, parts: int, free: Sequence[bool]) -> Iterator[Tuple[int, ...]]:
    """Positive compositions of ``total`` into ``parts`` where parts with
    ``free[i]`` False are fixed to 1."""
    sizes = [1] * parts
    idx = [i for i in range(parts) if free[i]]
    extra = total - parts
    if extra < 0 or (extra > 0 and not idx):
        return

    def rec(j: int, left: int):
        if j == len(idx) - 1:
            sizes[idx[j]] = 1 + left
            yield tuple(sizes)
            return
        for e in range(left + 1):
            sizes[idx[j]] = 1 + e
            yield from rec(j + 1, left - e)
        sizes[idx[j]] = 1

    if not idx:
        yield tuple(sizes)
        return
    yield from rec(0, extra)


def enumerate_irt(n: int) -> Iterator[IntervalLabeledRTT]:
    """All IRTs on [0, n].  An IRT is a root interval [0, j] plus, when
    j < n, an RT hung from its left slot whose vertices are inflated to
    intervals (vertices with a middle child stay single-labeled)."""
    if n < 0:
        return
    for root in range(n + 1, 0, -1):
        rest = n + 1 - root
        if rest == 0:
            yield IntervalLabeledRTT((-1,), (0,), (root,))
            continue
        for m in range(1, rest + 1):
            for p, s in _grow(m, (L, M, R), True):
                parent = (-1,) + tuple(q + 1 for q in p)
                slot = (0,) + s
                has_middle = {q for q, x in zip(p, s) if x == M}
                free = [v not in has_middle for v in range(m)]
                for comp in _compositions(rest, m, free):
                    yield IntervalLabeledRTT(parent, slot, (root,) + comp)


def count_binary(n: int) -> int:
    return sum(1 for _ in _grow(n, (L, R), False))


def count_rt(n: int) -> int:
    return sum(1 for _ in _grow(n, (L, M, R), True))


def count_irt(n: int) -> int:
    return sum(1 for _ in enumerate_irt(n))


def enumerate_family(family: str, n: int):
    return {"bt": enumerate_binary, "rt": enumerate_rt, "irt": enumerate_irt}[family](n)


# ----------------------------------------------------------------------
# traversals and statistics

def order_from_children(ch: Sequence[Sequence[int]], root: int, algorithm: str) -> List[int]:
    """Traverse a tree given as per-node (L, M, R) child lists (-1 = empty).
    Shared by complete trees and the partial trees of the path bijections."""
    algorithm = traversal_name(algorithm)
    out: List[int] = []
    stack = [(root, False)]
    while stack:
        v, expanded = stack.pop()
        if expanded:
            out.append(v)
            continue
        l, m, r = ch[v]
        if algorithm == PREORDER:
            seq = [(v, True), (l, False), (m, False), (r, False)]
        elif algorithm == POSTORDER:
            seq = [(l, False), (m, False), (r, False), (v, True)]
        else:  # inorder and A' agree on binary trees
            seq = [(l, False), (v, True), (m, False), (r, False)]
        for item in reversed(seq):
            if item[0] >= 0:
                stack.append(item)
    return out


def traversal_order(tree, algorithm: str) -> List[int]:
    """Vertices (indices) in the order visited by the traversal."""
    algorithm = traversal_name(algorithm)
    if algorithm == INORDER and tree.arity != 2:
        raise ArityMismatch("inorder traversal is defined for binary trees only")
    if len(tree.parent) == 0:
        return []
    return order_from_children(children(tree), 0, algorithm)


def traversal_labels(tree, algorithm: str) -> list:
    order = traversal_order(tree, algorithm)
    if tree.family in ("irt", "mlbt"):
        return [tree.labels(v) for v in order]
    return [v + 1 for v in order]


def all_vertex_stats(tree, algorithm: str) -> List[VertexStats]:
    """Statistics of every vertex, indexed by vertex."""
    n = len(tree.parent)
    order = traversal_order(tree, algorithm)
    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = i
    parent = tree.parent
    sizes = getattr(tree, "sizes", None)
    out = []
    for v in range(n):
        lev = nid = 0
        for w in range(v + 1, n):
            if parent[w] < v:
                lev += 1
                if pos[w] < pos[v]:
                    nid += 1
        surplus = sizes[v] - 1 if sizes is not None else 0
        out.append(VertexStats(node_type(tree, v), lev, lev - nid, nid, surplus))
    return out


def vertex_stats(tree, v: int, algorithm: str) -> VertexStats:
    """Statistics of vertex ``v`` (an index; see ``vertex_by_label``)."""
    return all_vertex_stats(tree, algorithm)[v]


def vertex_by_label(tree, label: int) -> int:
    if tree.family == "irt":
        return tree.vertex_of(label)
    if tree.family == "mlbt":
        for v, ls in enumerate(tree.labelsets):
            if label in ls:
                return v
        raise KeyError(label)
    if not 1 <= label <= len(tree.parent):
        raise KeyError(label)
    return label - 1


def node_type_counts(tree, exclude_root: bool = False) -> Dict[str, int]:
    types = ("00", "01", "10", "11") if tree.arity == 2 else ("000", "001", "010", "100", "101")
    counts = {t: 0 for t in types}
    for v in range(len(tree.parent)):
        if exclude_root and v == 0:
            continue
        t = node_type(tree, v)
        counts[t] = counts.get(t, 0) + 1
    return counts


def restrict(tree, j: int):
    """The subtree induced by the first ``j`` vertices (a prefix of labels)."""
    if tree.family == "irt":
        return IntervalLabeledRTT(tree.parent[:j], tree.slot[:j], tree.sizes[:j])
    return type(tree)(tree.parent[:j], tree.slot[:j])


# ----------------------------------------------------------------------
# RT <-> binary multilabeled tree

def rt_to_multilabeled(tree: RestrictedTernaryTree) -> MultiLabeledBinaryTree:
    """Contract each chain of middle edges to one vertex carrying all of
    the chain's labels."""
    n = len(tree.parent)
    if n == 0:
        return MultiLabeledBinaryTree((), (), ())
    head = list(range(n))
    for v in range(1, n):
        if tree.slot[v] == M:
            head[v] = head[tree.parent[v]]
    heads = sorted(set(head))
    new_index = {h: i for i, h in enumerate(heads)}
    groups: Dict[int, List[int]] = {h: [] for h in heads}
    for v in range(n):
        groups[head[v]].append(v + 1)
    parent, slot = [], []
    for h in heads:
        if h == 0:
            parent.append(-1)
            slot.append(0)
        else:
            parent.append(new_index[head[tree.parent[h]]])
            slot.append(tree.slot[h])
    return MultiLabeledBinaryTree(tuple(parent), tuple(slot), tuple(tuple(groups[h]) for h in heads))


def multilabeled_to_rt(tree: MultiLabeledBinaryTree) -> RestrictedTernaryTree:
    """Expand each label set {l1<...<lk} into the middle chain l1-l2-...-lk;
    the binary children hang from lk."""
    n = sum(len(ls) for ls in tree.labelsets)
    parent = [-1] * n
    slot = [0] * n
    for v, ls in enumerate(tree.labelsets):
        ls = sorted(ls)
        for a, b in zip(ls, ls[1:]):
            parent[b - 1] = a - 1
            slot[b - 1] = M
        if v > 0:
            p = tree.parent[v]
            parent[ls[0] - 1] = max(tree.labelsets[p]) - 1
            slot[ls[0] - 1] = tree.slot[v]
    t = RestrictedTernaryTree(tuple(parent), tuple(slot))
    validate(t)
    return t


def enumerate_multilabeled(n: int) -> Iterator[MultiLabeledBinaryTree]:
    """All binary free multilabeled increasing trees on [n], generated
    directly: label k either joins the set of a childless vertex or opens a
    new vertex in an empty binary slot."""
    def rec(k: int, parent, slot, sets):
        if k > n:
            yield MultiLabeledBinaryTree(tuple(parent), tuple(slot), tuple(tuple(x) for x in sets))
            return
        if not sets:
            yield from rec(k + 1, [-1], [0], [[k]])
            return
        used = {(parent[v], slot[v]) for v in range(1, len(sets))}
        for v in range(len(sets)):
            if not any(parent[w] == v for w in range(1, len(sets))):
                sets[v].append(k)
                yield from rec(k + 1, parent, slot, sets)
                sets[v].pop()
            for s in (L, R):
                if (v, s) not in used:
                    yield from rec(k + 1, parent + [v], slot + [s], sets + [[k]])

    if n == 0:
        yield MultiLabeledBinaryTree((), (), ())
        return
    yield from rec(1, [], [], [])


# ----------------------------------------------------------------------
# text form: 1(L:3(L:5),R:2) ; IRT vertices print as {lo..hi} sets

def _vertex_text(tree, v: int) -> str:
    if tree.family in ("irt", "mlbt"):
        return "{%s}" % ",".join(str(x) for x in tree.labels(v))
    return str(v + 1)


def format_tree(tree) -> str:
    if len(tree.parent) == 0:
        return "()"
    ch = children(tree)

    def rec(v: int) -> str:
        parts = ["%s:%s" % (SLOT_NAMES[s], rec(c)) for s, c in enumerate(ch[v]) if c >= 0]
        body = _vertex_text(tree, v)
        return body + ("(%s)" % ",".join(parts) if parts else "")

    return rec(0)


_TOKEN = re.compile(r"\s*(\{[0-9,\s]*\}|\d+|[():,]|[LMR](?=:))")


def parse_tree(text: str, family: str):
    """Inverse of ``format_tree`` for the families bt, rt, irt, mlbt."""
    text = text.strip()
    if text in ("()", ""):
        if family == "irt":
            raise InvalidTree("an IRT has at least its root")
        return {"bt": BinaryTree, "rt": RestrictedTernaryTree}[family]((), ())
    tokens = _tokenize(text)
    pos = 0
    nodes: List[Tuple[Tuple[int, ...], int, int]] = []  # labels, parent node, slot

    def parse_vertex(par: int, s: int):
        nonlocal pos
        tok = tokens[pos]
        pos += 1
        if tok.startswith("{"):
            labs = tuple(int(x) for x in tok[1:-1].split(",") if x.strip())
        else:
            labs = (int(tok),)
        me = len(nodes)
        nodes.append((labs, par, s))
        if pos < len(tokens) and tokens[pos] == "(":
            pos += 1
            while True:
                sl = SLOT_NAMES.index(tokens[pos])
                if tokens[pos + 1] != ":":
                    raise InvalidTree("expected ':' after slot name")
                pos += 2
                parse_vertex(me, sl)
                if tokens[pos] == ",":
                    pos += 1
                    continue
                if tokens[pos] == ")":
                    pos += 1
                    break
                raise InvalidTree("unexpected token %r" % tokens[pos])

    try:
        parse_vertex(-1, 0)
    except (IndexError, ValueError) as exc:
        raise InvalidTree("cannot parse tree text %r" % text) from exc
    if pos != len(tokens):
        raise InvalidTree("trailing text in %r" % text)
    order = sorted(range(len(nodes)), key=lambda i: min(nodes[i][0]))
    idx = {v: i for i, v in enumerate(order)}
    parent = tuple(-1 if nodes[v][1] < 0 else idx[nodes[v][1]] for v in order)
    slot = tuple(nodes[v][2] for v in order)
    if family == "bt":
        t = BinaryTree(parent, slot)
    elif family == "rt":
        t = RestrictedTernaryTree(parent, slot)
    elif family == "irt":
        sets = [nodes[v][0] for v in order]
        for a, b in zip(sets, sets[1:]):
            if b[0] != a[-1] + 1:
                raise InvalidTree("IRT label sets must be consecutive intervals starting at 0")
        if sets[0][0] != 0:
            raise InvalidTree("IRT root must contain 0")
        t = IntervalLabeledRTT(parent, slot, tuple(len(s) for s in sets))
    elif family == "mlbt":
        t = MultiLabeledBinaryTree(parent, slot, tuple(tuple(sorted(nodes[v][0])) for v in order))
    else:
        raise ValueError("unknown family %r" % family)
    if family in ("bt", "rt"):
        labs = [nodes[v][0][0] for v in order]
        if labs != list(range(1, len(labs) + 1)):
            raise InvalidTree("labels must be exactly 1..n")
    validate(t)
    return t


def _tokenize(text: str) -> List[str]:
    out, i = [], 0
    while i < len(text):
        m = _TOKEN.match(text, i)
        if not m:
            raise InvalidTree("cannot parse tree text near %r" % text[i:i + 10])
        out.append(m.group(1))
        i = m.end()
    return out
