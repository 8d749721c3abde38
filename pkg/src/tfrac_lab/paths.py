"""Motzkin, Dyck and Schroeder paths, height-dependent label sets, step
weights, brute-force Flajolet sums and their continued-fraction sides."""

from __future__ import annotations

import itertools
from typing import Callable, Iterator, List, NamedTuple, Optional, Sequence, Tuple

from .contfrac import CoeffSeq, JFractionSpec, SFractionSpec, TFractionSpec
from .poly import IndexedSymbol, Poly

RISE, FALL, LEVEL = "U", "D", "L"
MOTZKIN, DYCK, SCHRODER = "motzkin", "dyck", "schroder"
KINDS = (MOTZKIN, DYCK, SCHRODER)


class Path(NamedTuple):
    """Steps are 'U', 'D', 'L'; for Schroeder paths 'L' is a long level step
    of horizontal extent 2."""

    kind: str
    steps: Tuple[str, ...]

    def heights(self) -> List[int]:
        """Starting height of each step, followed by the final height."""
        h = [0]
        for s in self.steps:
            h.append(h[-1] + (1 if s == RISE else -1 if s == FALL else 0))
        return h

    def start_heights(self) -> List[int]:
        return self.heights()[:-1]

    @property
    def length(self) -> int:
        """Horizontal extent."""
        extra = len(self.steps) if self.kind != SCHRODER else len(self.steps) + self.steps.count(LEVEL)
        return extra

    def abscissae(self) -> List[int]:
        """Starting abscissa of each step."""
        x, out = 0, []
        for s in self.steps:
            out.append(x)
            x += 2 if (self.kind == SCHRODER and s == LEVEL) else 1
        return out

    def is_valid(self) -> bool:
        h = self.heights()
        if min(h) < 0 or h[-1] != 0:
            return False
        if self.kind == DYCK and LEVEL in self.steps:
            return False
        return all(s in (RISE, FALL, LEVEL) for s in self.steps)

    def word(self) -> str:
        return "".join(self.steps)


class LabeledPath(NamedTuple):
    path: Path
    labels: Tuple


def path_from_word(kind: str, word: str) -> Path:
    return Path(kind, tuple(word))


def enumerate_paths(kind: str, length: int) -> Iterator[Path]:
    """All paths of the given kind and horizontal length, in lexicographic
    order of step words over U < L < D."""
    if kind not in KINDS:
        raise ValueError("unknown path kind %r" % kind)
    if length < 0:
        return
    if kind in (DYCK, SCHRODER) and length % 2:
        return
    steps: List[str] = []

    def rec(x: int, h: int):
        if x == length:
            if h == 0:
                yield Path(kind, tuple(steps))
            return
        remaining = length - x
        if h + 1 <= remaining - 1:
            steps.append(RISE)
            yield from rec(x + 1, h + 1)
            steps.pop()
        if kind == MOTZKIN and h <= remaining - 1:
            steps.append(LEVEL)
            yield from rec(x + 1, h)
            steps.pop()
        if kind == SCHRODER and h <= remaining - 2:
            steps.append(LEVEL)
            yield from rec(x + 2, h)
            steps.pop()
        if h >= 1:
            steps.append(FALL)
            yield from rec(x + 1, h - 1)
            steps.pop()

    yield from rec(0, 0)


def path_length_for(kind: str, n: int) -> int:
    """Horizontal length of paths counted by t^n."""
    return n if kind == MOTZKIN else 2 * n


# ----------------------------------------------------------------------
# label sets and step weights

class LabelSets(NamedTuple):
    """Admissible labels for rises (A), falls (B) and level steps (C),
    as functions of the starting height.  Empty sets forbid a step."""

    A: Callable[[int], Sequence]
    B: Callable[[int], Sequence]
    C: Callable[[int], Sequence]

    def for_step(self, step: str, h: int) -> Sequence:
        return (self.A if step == RISE else self.B if step == FALL else self.C)(h)


def unit_label_sets() -> LabelSets:
    one = lambda h: (0,)
    return LabelSets(one, one, one)


def rt_motzkin_label_sets() -> LabelSets:
    """A_h = B_h = {0..h}; C_h = {1,2,3} x {0..h}."""
    rng = lambda h: tuple(range(h + 1))
    return LabelSets(rng, rng, lambda h: tuple((t, x) for t in (1, 2, 3) for x in range(h + 1)))


def irt_schroder_label_sets() -> LabelSets:
    """{0} at even heights and {0..floor(h/2)} at odd heights, for every
    kind of step."""
    s = lambda h: (0,) if h % 2 == 0 else tuple(range(h // 2 + 1))
    return LabelSets(s, s, s)


def enumerate_labelings(path: Path, ls: LabelSets) -> Iterator[Tuple]:
    choices = [ls.for_step(s, h) for s, h in zip(path.steps, path.start_heights())]
    return itertools.product(*choices)


def labels_admissible(path: Path, labels: Sequence, ls: LabelSets) -> bool:
    if len(labels) != len(path.steps):
        return False
    return all(x in ls.for_step(s, h) for s, h, x in zip(path.steps, path.start_heights(), labels))


class StepWeightScheme(NamedTuple):
    """Weights a(h, xi), b(h, xi), c(h, xi) of a rise, fall or level step
    starting at height h with label xi."""

    a: Callable[[int, object], Poly]
    b: Callable[[int, object], Poly]
    c: Callable[[int, object], Poly]

    def weight(self, step: str, h: int, label) -> Poly:
        fn = self.a if step == RISE else self.b if step == FALL else self.c
        return Poly.coerce(fn(h, label))


def symbolic_scheme() -> StepWeightScheme:
    """Independent indeterminates a(h,xi), b(h,xi), c(h,xi) (level labels
    that are pairs are flattened into the index)."""
    def mk(base):
        def fn(h, xi):
            idx = (h,) + (tuple(xi) if isinstance(xi, tuple) else (xi,))
            return Poly.var(IndexedSymbol(base, idx))
        return fn
    return StepWeightScheme(mk("a"), mk("b"), mk("c"))


def labeled_path_weight(path: Path, labels: Sequence, scheme: StepWeightScheme) -> Poly:
    w = Poly.const(1)
    for s, h, x in zip(path.steps, path.start_heights(), labels):
        w = w * scheme.weight(s, h, x)
        if not w:
            break
    return w


def flajolet_sum(kind: str, n: int, scheme: StepWeightScheme, ls: Optional[LabelSets] = None) -> Poly:
    """Sum of weights over all labeled paths counted by t^n."""
    ls = ls or unit_label_sets()
    total = Poly()
    for p in enumerate_paths(kind, path_length_for(kind, n)):
        for labels in enumerate_labelings(p, ls):
            total = total + labeled_path_weight(p, labels, scheme)
    return total


def _summed(fn, ls_fn) -> Callable[[int], Poly]:
    return lambda h: sum((Poly.coerce(fn(h, x)) for x in ls_fn(h)), Poly())


def motzkin_jfraction(scheme: StepWeightScheme, ls: Optional[LabelSets] = None) -> JFractionSpec:
    """gamma_h = c_h and beta_h = a_{h-1} b_h with label-summed weights."""
    ls = ls or unit_label_sets()
    a, b, c = _summed(scheme.a, ls.A), _summed(scheme.b, ls.B), _summed(scheme.c, ls.C)
    return JFractionSpec(CoeffSeq.from_rule(c), CoeffSeq.from_rule(lambda h: a(h - 1) * b(h)))


def dyck_sfraction(scheme: StepWeightScheme, ls: Optional[LabelSets] = None) -> SFractionSpec:
    ls = ls or unit_label_sets()
    a, b = _summed(scheme.a, ls.A), _summed(scheme.b, ls.B)
    return SFractionSpec(CoeffSeq.from_rule(lambda h: a(h - 1) * b(h)))


def schroder_tfraction(scheme: StepWeightScheme, ls: Optional[LabelSets] = None) -> TFractionSpec:
    """alpha_i = a_{i-1} b_i and delta_{i+1} = c_i."""
    ls = ls or unit_label_sets()
    a, b, c = _summed(scheme.a, ls.A), _summed(scheme.b, ls.B), _summed(scheme.c, ls.C)
    return TFractionSpec(CoeffSeq.from_rule(lambda i: a(i - 1) * b(i)), CoeffSeq.from_rule(lambda i: c(i - 1)))


def standard_schroder_scheme(spec: TFractionSpec) -> StepWeightScheme:
    """Rises weigh 1, a fall from height i weighs alpha_i, a long level
    step at height i weighs delta_{i+1}."""
    return StepWeightScheme(lambda h, x: 1, lambda h, x: spec.alpha(h), lambda h, x: spec.delta(h + 1))


def alternative_schroder_scheme(spec: TFractionSpec) -> StepWeightScheme:
    """Rises and falls from even heights weigh 1; from odd height 2k-1 a
    rise weighs alpha_{2k} and a fall alpha_{2k-1}."""
    return StepWeightScheme(lambda h, x: spec.alpha(h + 1) if h % 2 else 1,
                            lambda h, x: spec.alpha(h) if h % 2 else 1,
                            lambda h, x: spec.delta(h + 1))


# ----------------------------------------------------------------------
# master step weights for the tree bijections

def rt_master_motzkin_scheme() -> StepWeightScheme:
    """Rise: a(h-xi, xi); fall: b(h-xi, xi); level steps of type 1, 2, 3:
    c, f, d with the same indices."""
    def level(h, lab):
        typ, xi = lab
        return Poly.var(IndexedSymbol({1: "c", 2: "f", 3: "d"}[typ], (h - xi, xi)))
    return StepWeightScheme(lambda h, xi: Poly.var(IndexedSymbol("a", (h - xi, xi))),
                            lambda h, xi: Poly.var(IndexedSymbol("b", (h - xi, xi))),
                            level)


def irt_master_schroder_scheme() -> StepWeightScheme:
    """Step weights distributing the IRT master vertex weights:
    odd height 2k-1 gives ah/bh/f indexed (k-1-xi, xi); even height 2k
    gives mu_k (rise), nu_{k-1} (fall), e_k (long level)."""
    def a(h, xi):
        k = (h + 1) // 2
        return Poly.var(IndexedSymbol("ah", (k - 1 - xi, xi))) if h % 2 else Poly.var(IndexedSymbol("mu", (h // 2,)))

    def b(h, xi):
        k = (h + 1) // 2
        return Poly.var(IndexedSymbol("bh", (k - 1 - xi, xi))) if h % 2 else Poly.var(IndexedSymbol("nu", (h // 2 - 1,)))

    def c(h, xi):
        k = (h + 1) // 2
        return Poly.var(IndexedSymbol("f", (k - 1 - xi, xi))) if h % 2 else Poly.var(IndexedSymbol("e", (h // 2,)))

    return StepWeightScheme(a, b, c)


# ----------------------------------------------------------------------
# ASCII rendering

def render(path: Path) -> str:
    """Draw the path with '/', '\\' and '_' (long level steps use two
    columns)."""
    if not path.steps:
        return ""
    hs = path.heights()
    cols: List[Tuple[int, str]] = []
    for s, h in zip(path.steps, hs):
        if s == RISE:
            cols.append((h, "/"))
        elif s == FALL:
            cols.append((h - 1, "\\"))
        else:
            cols.extend([(h, "_")] * (2 if path.kind == SCHRODER else 1))
    top = max(row for row, _ in cols)
    rows = []
    for level in range(top, -1, -1):
        rows.append("".join(ch if row == level else " " for row, ch in cols).rstrip())
    return "\n".join(r for r in rows)
