"""Exponential Riordan arrays, production matrices and output matrices.

Matrices are finite square arrays of Poly entries (exact rationals are the
constant case).  Coefficient lists in an EgfPair use the exponential
convention: entry n stands for a_n t^n / n!.
"""

from __future__ import annotations

import csv
import io
from fractions import Fraction
from math import factorial
from typing import Callable, List, Mapping, NamedTuple, Optional, Sequence

from .contfrac import CoeffSeq, JFractionSpec
from .errors import SingularDiagonal, TfracError
from .poly import Poly, Series, specialize, sym
from .treepolys import W, X1, X2, Y1, Y2


class TriMatrix:
    """Finite N x N matrix with Poly entries."""

    __slots__ = ("rows",)

    def __init__(self, rows: Sequence[Sequence]):
        self.rows: List[List[Poly]] = [[Poly.coerce(x) for x in r] for r in rows]

    @classmethod
    def zeros(cls, n: int) -> "TriMatrix":
        return cls([[0] * n for _ in range(n)])

    @classmethod
    def identity(cls, n: int) -> "TriMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def delta(cls, n: int) -> "TriMatrix":
        """1 on the superdiagonal, 0 elsewhere."""
        return cls([[1 if j == i + 1 else 0 for j in range(n)] for i in range(n)])

    @property
    def size(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij) -> Poly:
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other) -> bool:
        return isinstance(other, TriMatrix) and self.rows == other.rows

    def __mul__(self, other: "TriMatrix") -> "TriMatrix":
        n = self.size
        out = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = Poly()
                for k in range(n):
                    if self.rows[i][k] and other.rows[k][j]:
                        acc = acc + self.rows[i][k] * other.rows[k][j]
                row.append(acc)
            out.append(row)
        return TriMatrix(out)

    def truncate(self, n: int) -> "TriMatrix":
        return TriMatrix([r[:n] for r in self.rows[:n]])

    def column(self, k: int) -> List[Poly]:
        return [r[k] for r in self.rows]

    def map(self, fn: Callable[[Poly], Poly]) -> "TriMatrix":
        return TriMatrix([[fn(x) for x in r] for r in self.rows])

    def specialize(self, assignment: Mapping) -> "TriMatrix":
        return self.map(lambda p: specialize(p, assignment))

    def is_lower_triangular(self) -> bool:
        return all(not self.rows[i][j] for i in range(self.size) for j in range(i + 1, self.size))

    def is_lower_hessenberg(self) -> bool:
        return all(not self.rows[i][j] for i in range(self.size) for j in range(i + 2, self.size))

    def to_strings(self) -> List[List[str]]:
        return [[str(x) for x in r] for r in self.rows]

    def to_csv(self) -> str:
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerows(self.to_strings())
        return buf.getvalue()

    def __repr__(self) -> str:
        return "TriMatrix(%r)" % self.to_strings()


# ----------------------------------------------------------------------
# EGF conventions

class EgfPair(NamedTuple):
    """F and G as exponential coefficient lists; G[0] must be 0."""

    F: Sequence
    G: Sequence


def egf_to_series(coeffs: Sequence, order: Optional[int] = None) -> Series:
    """The ordinary series sum a_n t^n / n! of exponential coefficients."""
    order = len(coeffs) - 1 if order is None else order
    out = [Poly.coerce(c) * Fraction(1, factorial(n)) for n, c in enumerate(coeffs[: order + 1])]
    return Series(out, order)


def series_to_egf(s: Series) -> List[Poly]:
    """Inverse of egf_to_series: n! [t^n] s."""
    return [c * factorial(n) for n, c in enumerate(s.coeffs)]


def _compose(outer: Sequence, inner: Series) -> Series:
    """sum_k outer[k] inner^k for an ordinary coefficient list ``outer`` and
    a series ``inner`` without constant term."""
    if inner[0]:
        raise TfracError("inner series must have zero constant term")
    order = inner.order
    total = Series([], order)
    power = Series.one(order)
    for k in range(order + 1):
        if k < len(outer) and outer[k]:
            total = total + power * Poly.coerce(outer[k])
        power = power * inner
    return total


def _derivative(s: Series) -> Series:
    return Series([s[n] * n for n in range(1, s.order + 1)], s.order - 1)


# ----------------------------------------------------------------------
# matrices

def riordan_matrix(pair: EgfPair, N: int) -> TriMatrix:
    """R[F,G]_{nk} = n!/k! [t^n] F(t) G(t)^k for 0 <= n, k < N."""
    if pair.G and Poly.coerce(pair.G[0]):
        raise TfracError("G must have zero constant term")
    order = N - 1
    F = egf_to_series(list(pair.F) + [0] * N, order)
    G = egf_to_series(list(pair.G) + [0] * N, order)
    rows = [[Poly()] * N for _ in range(N)]
    col = F
    for k in range(N):
        for n in range(N):
            if col[n]:
                rows[n][k] = col[n] * Fraction(factorial(n), factorial(k))
        col = col * G
    return TriMatrix(rows)


def _divide(num: Poly, den: Poly) -> Poly:
    try:
        return num.exact_div(den)
    except ValueError as exc:
        raise TfracError("entry %s is not divisible by diagonal %s" % (num, den)) from exc


def production_matrix(L: TriMatrix) -> TriMatrix:
    """P = L^{-1} Delta L, of size L.size - 1 (the last row of L is needed
    to produce the last row of P)."""
    n = L.size
    if not L.is_lower_triangular():
        raise TfracError("matrix is not lower triangular")
    if L[0, 0] != 1:
        raise SingularDiagonal("L_00 must be 1, got %s" % L[0, 0])
    for i in range(n):
        if not L[i, i]:
            raise SingularDiagonal("zero diagonal entry at %d" % i)
    m = n - 1
    P = [[Poly()] * m for _ in range(m)]
    # row i of L P = row i+1 of L (restricted to columns < m)
    for i in range(m):
        for j in range(m):
            acc = L[i + 1, j]
            for k in range(i):
                if L[i, k] and P[k][j]:
                    acc = acc - L[i, k] * P[k][j]
            P[i][j] = _divide(acc, L[i, i]) if acc else Poly()
    return TriMatrix(P)


def output_matrix(P: TriMatrix, N: Optional[int] = None) -> TriMatrix:
    """a_{nk} = (P^n)_{0k} for 0 <= n < N.  Columns beyond P.size are
    dropped, so the result is exact whenever P is lower Hessenberg."""
    m = P.size
    N = m if N is None else N
    if N > m:
        raise TfracError("output of size %d needs a production matrix of size %d" % (N, N))
    row = [Poly.const(1)] + [Poly()] * (m - 1)
    rows = []
    for _ in range(N):
        rows.append(row[:N])
        new = []
        for j in range(m):
            acc = Poly()
            for k in range(m):
                if row[k] and P[k, j]:
                    acc = acc + row[k] * P[k, j]
            new.append(acc)
        row = new
    return TriMatrix(rows)


def lah_production(phi: CoeffSeq, N: int) -> TriMatrix:
    """p_{nk} = (n+1)!/k! phi_{n-k+1}: the production matrix of R[G', G]
    where G is the egf of increasing ordered trees with weight phi_i per
    vertex with i children."""
    rows = []
    for n in range(N):
        row = []
        for k in range(N):
            i = n - k + 1
            row.append(phi(i) * Fraction(factorial(n + 1), factorial(k)) if i >= 0 else Poly())
        rows.append(row)
    return TriMatrix(rows)


def check_exp_riordan_production(pair: EgfPair, N: int) -> dict:
    """Recover the A- and Z-sequences from the production matrix of R[F,G]
    and verify the Riordan form of every entry together with
    G' = A(G) and F'/F = Z(G), all to order N - 1."""
    f0 = Poly.coerce(pair.F[0]) if pair.F else Poly()
    if f0 != 1:
        raise SingularDiagonal("F must have constant term 1")
    L = riordan_matrix(pair, N + 1)
    P = production_matrix(L)
    z = [P[n, 0] * Fraction(1, factorial(n)) for n in range(N)]
    a = [P[0, 1] if N > 1 else Poly()]
    for n in range(1, N):
        a.append((P[n, 1] * Fraction(1, factorial(n)) - z[n - 1]) if N > 1 else Poly())
    a.append(Poly())

    def A(i):
        return a[i] if 0 <= i < len(a) else Poly()

    def Z(i):
        return z[i] if 0 <= i < len(z) else Poly()

    form = all(P[n, k] == (Z(n - k) + A(n - k + 1) * k) * Fraction(factorial(n), factorial(k))
               for n in range(N) for k in range(N) if k <= n + 1 and n - k + 1 < N)
    order = N - 1
    F = egf_to_series(list(pair.F) + [0] * (order + 2), order + 1)
    G = egf_to_series(list(pair.G) + [0] * (order + 2), order + 1)
    dG = _derivative(G).truncate(order - 1) if order >= 1 else Series([], 0)
    dF = _derivative(F).truncate(order - 1) if order >= 1 else Series([], 0)
    Gt = G.truncate(dG.order)
    g_eq = dG == _compose(a[: dG.order + 1], Gt)
    f_eq = dF == F.truncate(dG.order) * _compose(z[: dG.order + 1], Gt)
    return {"N": N, "riordan_form": form, "A_equation": g_eq, "Z_equation": f_eq,
            "a": [str(x) for x in a[:N]], "z": [str(x) for x in z],
            "pass": form and g_eq and f_eq}


# ----------------------------------------------------------------------
# simple J-fractions through the production matrix

_FAMILY_PHI = {
    "bt": lambda x1, x2, y1, y2, w: (y1, x2 + y2, x1),
    "rt": lambda x1, x2, y1, y2, w: (y1, x2 + y2 + w, x1),
}


def family_phi(family: str, weights: Optional[Mapping] = None) -> CoeffSeq:
    """phi_0 = y1, phi_1 = x2 + y2 (+ w for RTs), phi_2 = x1, phi_i = 0
    beyond; ``weights`` may replace any of x1, x2, y1, y2, w."""
    if family not in _FAMILY_PHI:
        raise ValueError("family must be 'bt' or 'rt', got %r" % family)
    vals = {}
    for name, s in (("x1", X1), ("x2", X2), ("y1", Y1), ("y2", Y2), ("w", W)):
        v = (weights or {}).get(name, (weights or {}).get(s))
        vals[name] = Poly.coerce(v) if v is not None else Poly.var(s)
    phi = _FAMILY_PHI[family](**vals)
    return CoeffSeq.from_table(phi, start=0)


def simple_fraction_via_production(family: str, weights: Optional[Mapping] = None, N: int = 8) -> JFractionSpec:
    """Read a J-fraction off the tridiagonal production matrix: level
    weights p_{nn} and, after moving rise weights onto falls,
    beta_n = p_{n,n-1} p_{n-1,n}."""
    P = lah_production(family_phi(family, weights), N + 1)
    if not P.is_lower_hessenberg() or any(P[i, j] for i in range(P.size) for j in range(max(0, i - 1))):
        raise TfracError("production matrix is not tridiagonal")
    gammas = [P[n, n] for n in range(N)]
    betas = [P[n, n - 1] * P[n - 1, n] for n in range(1, N)]
    return JFractionSpec(CoeffSeq.from_table(gammas, start=0), CoeffSeq.from_table(betas, start=1))


def lah_output_column(family: str, weights: Optional[Mapping] = None, N: int = 8) -> List[Poly]:
    """Column 0 of the output matrix of the family's Lah production matrix:
    entry n is the tree polynomial P_{n+1} divided by y1."""
    return output_matrix(lah_production(family_phi(family, weights), N)).column(0)
