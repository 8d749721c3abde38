"""Derivative operators (context-free grammars) acting on Poly."""

from __future__ import annotations

import itertools
from typing import Dict, Iterable, List, NamedTuple, Optional

from .poly import IndexedSymbol, Poly, specialize, sym
from .treepolys import W, X1, X2, Y1, Y2


class DerivationRule(NamedTuple):
    variable: IndexedSymbol
    image: Poly


class DerivativeOperator:
    """Derivation determined by the images of some variables; every other
    variable derives to 0."""

    def __init__(self, rules: Iterable[DerivationRule]):
        self.rules: Dict[IndexedSymbol, Poly] = {}
        for r in rules:
            self.rules[r.variable] = Poly.coerce(r.image)

    @classmethod
    def from_mapping(cls, mapping) -> "DerivativeOperator":
        return cls(DerivationRule(sym(k) if isinstance(k, str) else k, Poly.coerce(v))
                   for k, v in mapping.items())

    def __call__(self, p) -> Poly:
        return apply(self, p)

    def __repr__(self) -> str:
        return "DerivativeOperator({%s})" % ", ".join("%s -> %s" % (k, v) for k, v in self.rules.items())


def apply(D: DerivativeOperator, p) -> Poly:
    """Extend D to polynomials by linearity and the product rule: each
    occurrence of a variable in a monomial is derived in turn."""
    p = Poly.coerce(p)
    total = Poly()
    for mono, c in p.items():
        for i, (s, e) in enumerate(mono):
            image = D.rules.get(s)
            if image is None or not image:
                continue
            rest = list(mono)
            if e == 1:
                del rest[i]
            else:
                rest[i] = (s, e - 1)
            total = total + Poly({tuple(rest): c * e}) * image
    return total


def iterate(D: DerivativeOperator, seed, k: int) -> Poly:
    p = Poly.coerce(seed)
    for _ in range(k):
        p = apply(D, p)
    return p


def _tree_operator(leaf_image: Poly) -> DerivativeOperator:
    x1, y1 = Poly.var(X1), Poly.var(Y1)
    return DerivativeOperator([DerivationRule(Y1, y1 * leaf_image),
                               DerivationRule(X2, x1 * y1),
                               DerivationRule(Y2, x1 * y1)])


def d_bt() -> DerivativeOperator:
    """y1 -> y1 (x2 + y2), x2 -> x1 y1, y2 -> x1 y1."""
    return _tree_operator(Poly.var(X2) + Poly.var(Y2))


def d_rt() -> DerivativeOperator:
    """y1 -> y1 (x2 + y2 + w), x2 -> x1 y1, y2 -> x1 y1."""
    return _tree_operator(Poly.var(X2) + Poly.var(Y2) + Poly.var(W))


def operator_for(family: str) -> DerivativeOperator:
    if family == "bt":
        return d_bt()
    if family == "rt":
        return d_rt()
    raise ValueError("family must be 'bt' or 'rt', got %r" % family)


def tree_polynomial(family: str, n: int) -> Poly:
    """D^(n-1) y1 (1 for n = 0)."""
    if n == 0:
        return Poly.const(1)
    return iterate(operator_for(family), Poly.var(Y1), n - 1)


DUMONT_X, DUMONT_Y = sym("x"), sym("y")


def dumont_operator() -> DerivativeOperator:
    """x -> 2xy, y -> x."""
    x, y = Poly.var(DUMONT_X), Poly.var(DUMONT_Y)
    return DerivativeOperator([DerivationRule(DUMONT_X, 2 * x * y), DerivationRule(DUMONT_Y, x)])


def dumont_check(max_degree: int = 6) -> dict:
    """Under x1 = 1, y1 = x, x2 = y2 = y the binary-tree operator acts as
    x -> 2xy, y -> x: specializing after deriving equals deriving after
    specializing, on every monomial in x1, x2, y1, y2 up to max_degree."""
    sub = {X1: 1, Y1: Poly.var(DUMONT_X), X2: Poly.var(DUMONT_Y), Y2: Poly.var(DUMONT_Y)}
    D, Dd = d_bt(), dumont_operator()
    checked = 0
    failures: List[str] = []
    for deg in range(max_degree + 1):
        for exps in itertools.product(range(deg + 1), repeat=4):
            if sum(exps) != deg:
                continue
            mono = Poly({tuple((s, e) for s, e in sorted(zip((X1, X2, Y1, Y2), exps)) if e): 1})
            checked += 1
            if specialize(apply(D, mono), sub) != apply(Dd, specialize(mono, sub)):
                failures.append(str(mono))
    return {"max_degree": max_degree, "monomials": checked, "failures": failures, "pass": not failures}
