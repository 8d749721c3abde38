"""Thron (T), Jacobi (J) and Stieltjes (S) continued fractions as truncated
power series, plus the contraction and transformation identities."""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Dict, Iterable, List, NamedTuple, Optional, Sequence, Tuple, Union

from .errors import OddDeltaNonzero, TerminatingFraction, TfracError
from .poly import Poly, Series, parse_poly, series_inverse, specialize, sym

PolyLike = Union[Poly, int, Fraction, str]


class CoeffSeq:
    """A total map from an integer index to a Poly.

    Either a closed-form ``rule`` or a finite ``table`` (with ``default`` for
    indices outside it).  Values are cached so repeated lookups agree.
    ``start`` is the first index of the table (1 for alpha/delta/beta, 0 for
    gamma).
    """

    __slots__ = ("_rule", "_table", "_default", "_start", "_cache", "description")

    def __init__(self, rule: Optional[Callable[[int], PolyLike]] = None,
                 table: Optional[Sequence[PolyLike]] = None,
                 default: PolyLike = 0, start: int = 1, description: str = ""):
        if (rule is None) == (table is None):
            raise ValueError("give exactly one of rule or table")
        self._rule = rule
        self._table = None if table is None else tuple(Poly.coerce(c) for c in table)
        self._default = Poly.coerce(default)
        self._start = start
        self._cache: Dict[int, Poly] = {}
        self.description = description

    @classmethod
    def constant(cls, c: PolyLike) -> "CoeffSeq":
        p = Poly.coerce(c)
        return cls(rule=lambda n: p, description=str(p))

    @classmethod
    def zero(cls) -> "CoeffSeq":
        return cls.constant(0)

    @classmethod
    def from_table(cls, values: Sequence[PolyLike], start: int = 1, default: PolyLike = 0) -> "CoeffSeq":
        return cls(table=values, start=start, default=default)

    @classmethod
    def from_rule(cls, rule: Callable[[int], PolyLike], description: str = "") -> "CoeffSeq":
        return cls(rule=rule, description=description)

    @property
    def is_table(self) -> bool:
        return self._table is not None

    @property
    def table(self) -> Tuple[Poly, ...]:
        return self._table or ()

    @property
    def start(self) -> int:
        return self._start

    def __call__(self, n: int) -> Poly:
        v = self._cache.get(n)
        if v is None:
            if self._table is not None:
                i = n - self._start
                v = self._table[i] if 0 <= i < len(self._table) else self._default
            else:
                v = Poly.coerce(self._rule(n))
            self._cache[n] = v
        return v

    def values(self, first: int, last: int) -> List[Poly]:
        return [self(n) for n in range(first, last + 1)]

    def map(self, fn: Callable[[Poly], Poly]) -> "CoeffSeq":
        return CoeffSeq(rule=lambda n: fn(self(n)))

    def specialize(self, assignment) -> "CoeffSeq":
        return self.map(lambda p: specialize(p, assignment))

    def __repr__(self) -> str:
        if self._table is not None:
            return "CoeffSeq(table=[%s], start=%d)" % (", ".join(map(str, self._table)), self._start)
        return "CoeffSeq(rule=%s)" % (self.description or "<fn>")


class TFractionSpec(NamedTuple):
    alpha: CoeffSeq
    delta: CoeffSeq


class JFractionSpec(NamedTuple):
    gamma: CoeffSeq  # gamma(0), gamma(1), ...
    beta: CoeffSeq   # beta(1), beta(2), ...


class SFractionSpec(NamedTuple):
    alpha: CoeffSeq


class QuasiAffineSpec(NamedTuple):
    x: Poly
    y: Poly
    u: Poly
    v: Poly
    a: Poly
    b: Poly
    c: Poly
    d: Poly

    @classmethod
    def from_tuple(cls, values: Iterable[PolyLike]) -> "QuasiAffineSpec":
        vals = [Poly.coerce(v) for v in values]
        if len(vals) != 8:
            raise ValueError("quasi-affine spec needs 8 values (x,y,u,v,a,b,c,d)")
        return cls(*vals)

    @classmethod
    def symbolic(cls) -> "QuasiAffineSpec":
        return cls(*(Poly.var(n) for n in "xyuvabcd"))

    def as_tuple(self) -> Tuple[Poly, ...]:
        return tuple(self)


def quasi_affine(spec: QuasiAffineSpec) -> TFractionSpec:
    """alpha_{2k-1} = x+(k-1)u, alpha_{2k} = y+(k-1)v,
    delta_{2k-1} = a+(k-1)c, delta_{2k} = b+(k-1)d."""
    x, y, u, v, a, b, c, d = spec

    def alpha(n: int) -> Poly:
        k = (n + 1) // 2
        return x + u * (k - 1) if n % 2 else y + v * (k - 1)

    def delta(n: int) -> Poly:
        k = (n + 1) // 2
        return a + c * (k - 1) if n % 2 else b + d * (k - 1)

    desc = "quasi-affine(%s)" % ",".join(str(p) for p in spec)
    return TFractionSpec(CoeffSeq.from_rule(alpha, desc), CoeffSeq.from_rule(delta, desc))


# ----------------------------------------------------------------------
# expansion

def _as_series(c, order: int) -> Series:
    if isinstance(c, Series):
        return c.truncate(order)
    return Series([c], order)


def _expand_t_general(alpha: Callable[[int], object], delta: Callable[[int], object],
                      N: int, depth: Optional[int] = None, trim: bool = True) -> Series:
    """Bottom-up evaluation.  ``alpha(k)``/``delta(k)`` may return a Poly or
    a Series (used for the substituted fraction in the transformation
    identity)."""
    if N < 0:
        raise ValueError("order must be non-negative")
    if depth is None:
        depth = N + 1
    f: Optional[Series] = None  # f_{depth+1} = 1
    for k in range(depth, 0, -1):
        order = max(N - (k - 1), 0) if trim else N
        tail = Series.one(order) if f is None else f.truncate(order) if f.order >= order else _pad(f, order)
        a = alpha(k)
        dl = delta(k)
        if isinstance(a, Series):
            at = (a.truncate(order) * tail).shift(1)
        else:
            at = (tail * a).shift(1) if a else Series([], order)
        if isinstance(dl, Series):
            dt = dl.truncate(order).shift(1)
        else:
            dt = Series([0, dl], order) if order >= 1 else Series([0], order)
        f = series_inverse(Series.one(order) - dt - at)
    if f is None:
        return Series.one(N)
    return f if f.order == N else _pad(f, N)


def _pad(s: Series, order: int) -> Series:
    return Series(list(s.coeffs) + [0] * (order - s.order), order)


def expand_t(spec: TFractionSpec, N: int, depth: Optional[int] = None, trim: bool = True) -> Series:
    """Taylor series of 1/(1 - d1 t - a1 t/(1 - d2 t - a2 t/(...))) to t^N.

    By default the fraction is cut at depth N+1; level k is evaluated only
    to order N-(k-1), the most it can influence.  ``trim=False`` keeps full
    order at every level and ``depth`` overrides the cut (used by tests of
    the truncation contract).
    """
    return _expand_t_general(spec.alpha, spec.delta, N, depth, trim)


def expand_s(spec: SFractionSpec, N: int, depth: Optional[int] = None) -> Series:
    zero = Poly()
    return _expand_t_general(spec.alpha, lambda k: zero, N, depth)


def expand_j(spec: JFractionSpec, N: int, depth: Optional[int] = None) -> Series:
    """Taylor series of 1/(1 - g0 t - b1 t^2/(1 - g1 t - b2 t^2/(...)))."""
    if N < 0:
        raise ValueError("order must be non-negative")
    if depth is None:
        depth = N // 2 + 1
    f: Optional[Series] = None
    for k in range(depth - 1, -1, -1):
        order = max(N - 2 * k, 0)
        tail = Series.one(order) if f is None else _fit(f, order)
        g = spec.gamma(k)
        b = spec.beta(k + 1)
        bt = (tail * b).shift(2) if (b and order >= 2) else Series([], order)
        gt = Series([0, g], order) if order >= 1 else Series([0], order)
        f = series_inverse(Series.one(order) - gt - bt)
    return Series.one(N) if f is None else _fit(f, N)


def _fit(s: Series, order: int) -> Series:
    return s.truncate(order) if s.order >= order else _pad(s, order)


# ----------------------------------------------------------------------
# identities

def odd_contract(spec: TFractionSpec, order: int = 16) -> Tuple[Poly, JFractionSpec]:
    """For a T-fraction with vanishing odd deltas, return (alpha_1, J) with
    T(t) = 1 + alpha_1 t J(t), where gamma_n = a_{2n+1} + a_{2n+2} + d_{2n+2}
    and beta_n = a_{2n} a_{2n+1}.  Odd deltas are probed up to ``order``."""
    for k in range(1, order + 2, 2):
        if spec.delta(k):
            raise OddDeltaNonzero("delta_%d = %s is not zero" % (k, spec.delta(k)))
    al, de = spec.alpha, spec.delta
    gamma = CoeffSeq.from_rule(lambda n: al(2 * n + 1) + al(2 * n + 2) + de(2 * n + 2), "contracted gamma")
    beta = CoeffSeq.from_rule(lambda n: al(2 * n) * al(2 * n + 1), "contracted beta")
    return al(1), JFractionSpec(gamma, beta)


def contraction_sides(spec: TFractionSpec, N: int) -> Tuple[Series, Series]:
    """(expand_t(spec), 1 + alpha_1 t J) to order N."""
    a1, j = odd_contract(spec, N + 1)
    rhs = (expand_j(j, max(N - 1, 0)) * a1)
    rhs = Series([1] + list(rhs.coeffs), N) if N >= 1 else Series([1], 0)
    return expand_t(spec, N), rhs


def insert_odd_delta(alpha: CoeffSeq, delta_even: CoeffSeq, delta_odd: CoeffSeq, N: int = 0) -> TFractionSpec:
    """Combine alpha with even deltas from ``delta_even`` and odd deltas from
    ``delta_odd`` (both indexed by the full index) into one T-fraction."""
    delta = CoeffSeq.from_rule(lambda n: delta_odd(n) if n % 2 else delta_even(n), "merged delta")
    return TFractionSpec(alpha, delta)


def substituted_expansion(alpha: CoeffSeq, delta_even: CoeffSeq, delta_odd: CoeffSeq, N: int) -> Series:
    """(1/(1 - d_1 t)) times the T-fraction with no odd deltas in which
    a_{2k-1} is divided by (1 - d_{2k-1} t) and a_{2k} by (1 - d_{2k+1} t)."""
    geo: Dict[int, Series] = {}

    def g(n: int) -> Series:
        if n not in geo:
            geo[n] = Series.geometric(delta_odd(n), N)
        return geo[n]

    def a(k: int) -> Series:
        j = k if k % 2 else k + 1
        return g(j) * alpha(k)

    zero = Poly()
    inner = _expand_t_general(a, lambda k: zero if k % 2 else delta_even(k), N)
    return g(1) * inner


def transformation_sides(alpha: CoeffSeq, delta_even: CoeffSeq, delta_odd: CoeffSeq, N: int) -> Tuple[Series, Series]:
    """Both sides of the odd-delta insertion identity, to order N."""
    lhs = substituted_expansion(alpha, delta_even, delta_odd, N)
    rhs = expand_t(insert_odd_delta(alpha, delta_even, delta_odd, N), N)
    return lhs, rhs


# ----------------------------------------------------------------------
# inverse problem

def _scalar(p) -> Fraction:
    if isinstance(p, Poly):
        return Fraction(p.constant_value())
    return Fraction(p)


def series_to_jfraction(s: Union[Series, Sequence], depth: int) -> JFractionSpec:
    """Recover gamma_0..gamma_{depth-1} and beta_1..beta_{depth-1} from a
    numeric series with constant term 1 (needs order >= 2*depth - 1).

    Raises TerminatingFraction (with the coefficients found so far on
    ``partial``) when the series is a finite J-fraction of smaller depth.
    """
    coeffs = [_scalar(c) for c in (s.coeffs if isinstance(s, Series) else s)]
    if not coeffs or coeffs[0] != 1:
        raise TfracError("series must have constant term 1")
    if depth < 1:
        raise ValueError("depth must be positive")
    if len(coeffs) - 1 < 2 * depth - 1:
        raise ValueError("series of order %d is too short for depth %d" % (len(coeffs) - 1, depth))
    gammas: List[Fraction] = []
    betas: List[Fraction] = []
    f = coeffs
    for n in range(depth):
        gammas.append(f[1] if len(f) > 1 else Fraction(0))
        if n == depth - 1:
            break
        inv = _inverse_fractions(f)
        r = [-c for c in inv]
        r[0] += 1
        r[1] -= gammas[-1]
        b = r[2]
        if b == 0:
            partial = _tabulated(gammas, betas)
            if any(r[2:]):
                raise TfracError("series has no J-fraction expansion (beta_%d vanishes but the tail does not)" % (n + 1))
            raise TerminatingFraction("beta_%d is zero: the fraction terminates at depth %d" % (n + 1, n + 1),
                                      partial=partial, depth=n + 1)
        betas.append(b)
        f = [c / b for c in r[2:]]
    return _tabulated(gammas, betas)


def _tabulated(gammas, betas) -> JFractionSpec:
    return JFractionSpec(CoeffSeq.from_table([Poly.const(g) for g in gammas], start=0),
                         CoeffSeq.from_table([Poly.const(b) for b in betas], start=1))


def _inverse_fractions(a: List[Fraction]) -> List[Fraction]:
    b = [Fraction(1) / a[0]]
    for n in range(1, len(a)):
        b.append(-sum(a[k] * b[n - k] for k in range(1, n + 1)) / a[0])
    return b


# ----------------------------------------------------------------------
# JSON-friendly encoding used by the CLI

def coeffseq_from_json(obj, start: int = 1) -> CoeffSeq:
    """Accepts a list (table), a Poly string in the index variable ``n``
    (rule), or {"odd": rule, "even": rule} where rules may also use
    ``k = ceil(n/2)``.  A dict may carry "table" and "default" instead."""
    if isinstance(obj, list):
        return CoeffSeq.from_table([Poly.coerce(v) for v in obj], start=start)
    if isinstance(obj, (int, float)):
        return CoeffSeq.constant(int(obj))
    if isinstance(obj, str):
        return _rule_seq(obj, obj)
    if isinstance(obj, dict):
        if "table" in obj:
            return CoeffSeq.from_table([Poly.coerce(v) for v in obj["table"]],
                                       start=obj.get("start", start), default=obj.get("default", 0))
        if "odd" in obj or "even" in obj:
            odd = _rule_seq(str(obj.get("odd", "0")), "")
            even = _rule_seq(str(obj.get("even", "0")), "")
            return CoeffSeq.from_rule(lambda n: odd(n) if n % 2 else even(n), repr(obj))
        if "rule" in obj:
            return _rule_seq(str(obj["rule"]), obj["rule"])
    raise ValueError("cannot read coefficient sequence from %r" % (obj,))


def _rule_seq(text: str, desc: str) -> CoeffSeq:
    p = parse_poly(text)
    n_sym, k_sym = sym("n"), sym("k")
    return CoeffSeq.from_rule(lambda n: specialize(p, {n_sym: n, k_sym: (n + 1) // 2}), desc)


def spec_from_json(obj) -> Union[TFractionSpec, JFractionSpec, SFractionSpec]:
    kind = obj.get("kind", "T").upper()
    if "quasi_affine" in obj:
        return quasi_affine(QuasiAffineSpec.from_tuple(obj["quasi_affine"]))
    if kind == "T":
        return TFractionSpec(coeffseq_from_json(obj.get("alpha", 0)), coeffseq_from_json(obj.get("delta", 0)))
    if kind == "S":
        return SFractionSpec(coeffseq_from_json(obj.get("alpha", 0)))
    if kind == "J":
        return JFractionSpec(coeffseq_from_json(obj.get("gamma", 0), start=0), coeffseq_from_json(obj.get("beta", 0)))
    raise ValueError("unknown fraction kind %r" % kind)


def expand(spec, N: int) -> Series:
    if isinstance(spec, TFractionSpec):
        return expand_t(spec, N)
    if isinstance(spec, JFractionSpec):
        return expand_j(spec, N)
    if isinstance(spec, SFractionSpec):
        return expand_s(spec, N)
    raise TypeError("not a fraction spec")
