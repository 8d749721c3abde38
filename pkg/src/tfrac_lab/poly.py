"""Sparse multivariate polynomials over indexed indeterminates, and truncated
power series in a distinguished variable t.

Coefficients are Python integers (or ``Fraction`` where rationals are
unavoidable).  A monomial is a tuple of ``(IndexedSymbol, exponent)`` pairs
sorted by symbol, so equal polynomials always have equal internal dicts.
"""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational
from typing import Callable, Dict, Iterable, Iterator, Mapping, NamedTuple, Tuple, Union

from .errors import NonUnitConstantTerm


class IndexedSymbol(NamedTuple):
    """An indeterminate such as ``x1``, ``mu(2)`` or ``a(0,1)``."""

    base: str
    indices: Tuple[int, ...] = ()

    def __str__(self) -> str:
        if not self.indices:
            return self.base
        return "%s(%s)" % (self.base, ",".join(str(i) for i in self.indices))


Monomial = Tuple[Tuple[IndexedSymbol, int], ...]
Scalar = Union[int, Fraction]


def sym(base: str, *indices: int) -> IndexedSymbol:
    return IndexedSymbol(base, tuple(indices))


def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def _mono_mul(m1: Monomial, m2: Monomial) -> Monomial:
    if not m1:
        return m2
    if not m2:
        return m1
    d = dict(m1)
    for s, e in m2:
        d[s] = d.get(s, 0) + e
    return tuple(sorted(d.items()))


def monomial_from_symbols(symbols: Iterable[IndexedSymbol]) -> Monomial:
    """Monomial for the product of the given symbols (with repetition)."""
    d: Dict[IndexedSymbol, int] = {}
    for s in symbols:
        d[s] = d.get(s, 0) + 1
    return tuple(sorted(d.items()))


class Poly:
    """Immutable sparse polynomial.  Use ``Poly.var``/``Poly.const`` or
    arithmetic to build values; ``Poly(terms)`` trusts a canonical dict."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Scalar] | None = None):
        if terms:
            self._terms = {m: _norm(c) for m, c in terms.items() if c != 0}
        else:
            self._terms = {}
        self._hash = None

    # construction -------------------------------------------------------
    @classmethod
    def const(cls, c: Scalar) -> "Poly":
        return cls({(): c}) if c else cls()

    @classmethod
    def var(cls, s: IndexedSymbol | str, *indices: int) -> "Poly":
        if isinstance(s, str):
            s = IndexedSymbol(s, tuple(indices))
        return cls({((s, 1),): 1})

    @classmethod
    def coerce(cls, x) -> "Poly":
        if isinstance(x, Poly):
            return x
        if isinstance(x, IndexedSymbol):
            return cls.var(x)
        if isinstance(x, (int, Fraction)) or isinstance(x, Rational):
            return cls.const(x)
        if isinstance(x, str):
            return parse_poly(x)
        raise TypeError("cannot convert %r to Poly" % (x,))

    # inspection ---------------------------------------------------------
    @property
    def terms(self) -> Dict[Monomial, Scalar]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __iter__(self) -> Iterator[Tuple[Monomial, Scalar]]:
        return iter(sorted(self._terms.items(), key=_term_key))

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and () in self._terms)

    def constant_term(self) -> Scalar:
        return self._terms.get((), 0)

    def constant_value(self) -> Scalar:
        if not self.is_constant():
            raise ValueError("polynomial is not constant: %s" % self)
        return self.constant_term()

    def symbols(self) -> set:
        return {s for m in self._terms for s, _ in m}

    def total_degree(self) -> int:
        return max((sum(e for _, e in m) for m in self._terms), default=0)

    def degree_in(self, s: IndexedSymbol) -> int:
        return max((e for m in self._terms for t, e in m if t == s), default=0)

    def is_homogeneous(self, degree: int | None = None) -> bool:
        degs = {sum(e for _, e in m) for m in self._terms}
        if degree is not None:
            return degs <= {degree}
        return len(degs) <= 1

    def coefficient(self, mono: Monomial) -> Scalar:
        return self._terms.get(mono, 0)

    # arithmetic ---------------------------------------------------------
    def __add__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            try:
                other = Poly.coerce(other)
            except TypeError:
                return NotImplemented
        if not other._terms:
            return self
        if not self._terms:
            return other
        d = dict(self._terms)
        for m, c in other._terms.items():
            v = d.get(m, 0) + c
            if v:
                d[m] = v
            else:
                d.pop(m, None)
        return Poly(d)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly({m: -c for m, c in self._terms.items()})

    def __sub__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            try:
                other = Poly.coerce(other)
            except TypeError:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Poly":
        return Poly.coerce(other) - self

    def __mul__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            if isinstance(other, (int, Fraction)):
                if not other:
                    return Poly()
                return Poly({m: c * other for m, c in self._terms.items()})
            try:
                other = Poly.coerce(other)
            except TypeError:
                return NotImplemented
        if not self._terms or not other._terms:
            return Poly()
        a, b = self._terms, other._terms
        if len(a) < len(b):
            a, b = b, a
        if len(b) == 1:
            (mb, cb), = b.items()
            if mb == ():
                return Poly({m: c * cb for m, c in a.items()})
            return Poly({_mono_mul(m, mb): c * cb for m, c in a.items()})
        d: Dict[Monomial, Scalar] = {}
        for m1, c1 in a.items():
            for m2, c2 in b.items():
                m = _mono_mul(m1, m2)
                d[m] = d.get(m, 0) + c1 * c2
        return Poly(d)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Poly":
        if k < 0:
            raise ValueError("negative power")
        result = Poly.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def exact_div(self, other) -> "Poly":
        """Divide by a scalar or a single-term polynomial; must be exact."""
        other = Poly.coerce(other)
        if len(other._terms) != 1:
            raise ValueError("can only divide by a single term")
        (mb, cb), = other._terms.items()
        db = dict(mb)
        out = {}
        for m, c in self._terms.items():
            dm = dict(m)
            for s, e in db.items():
                r = dm.get(s, 0) - e
                if r < 0:
                    raise ValueError("division is not exact")
                if r:
                    dm[s] = r
                else:
                    del dm[s]
            q = Fraction(c, 1) / cb
            out[tuple(sorted(dm.items()))] = q
        return Poly(out)

    # comparison ---------------------------------------------------------
    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == ({(): other} if other else {})
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # calculus and substitution -----------------------------------------
    def derivative(self, s: IndexedSymbol) -> "Poly":
        out: Dict[Monomial, Scalar] = {}
        for m, c in self._terms.items():
            for i, (t, e) in enumerate(m):
                if t == s:
                    rest = m[:i] + (((t, e - 1),) if e > 1 else ()) + m[i + 1:]
                    out[rest] = out.get(rest, 0) + c * e
                    break
        return Poly(out)

    def specialize(self, assignment: Mapping) -> "Poly":
        return specialize(self, assignment)

    def evaluate(self, assignment: Mapping) -> Scalar:
        return specialize(self, assignment).constant_value()

    # text ---------------------------------------------------------------
    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return "Poly(%r)" % format_poly(self)


def _term_key(item):
    m, _ = item
    return (sum(e for _, e in m), m)


def to_poly(x) -> Poly:
    return Poly.coerce(x)


def specialize(p: Poly, assignment: Mapping) -> Poly:
    """Substitute symbols by polynomials (or numbers).  Unassigned symbols
    are left alone, so the map is a ring homomorphism."""
    amap: Dict[IndexedSymbol, Poly] = {}
    for k, v in assignment.items():
        if isinstance(k, str):
            k = parse_symbol(k)
        amap[k] = Poly.coerce(v)
    numeric = {k: v.constant_term() for k, v in amap.items() if v.is_constant()}
    acc: Dict[Monomial, Scalar] = {}
    extra = Poly()
    pow_cache: Dict[Tuple[IndexedSymbol, int], Poly] = {}
    for mono, c in p._terms.items():
        rest = []
        factor = None
        for s, e in mono:
            if s in numeric:
                c = c * numeric[s] ** e
                if not c:
                    break
            elif s in amap:
                key = (s, e)
                pw = pow_cache.get(key)
                if pw is None:
                    pw = pow_cache[key] = amap[s] ** e
                factor = pw if factor is None else factor * pw
            else:
                rest.append((s, e))
        if not c:
            continue
        rest_t = tuple(rest)
        if factor is None:
            acc[rest_t] = acc.get(rest_t, 0) + c
        else:
            extra = extra + factor * Poly({rest_t: c})
    return Poly(acc) + extra


# ----------------------------------------------------------------------
# canonical text form

def format_symbol(s: IndexedSymbol) -> str:
    return str(s)


def format_poly(p: Poly) -> str:
    if not p._terms:
        return "0"
    parts = []
    for m, c in p:
        factors = []
        for s, e in m:
            factors.append(str(s) if e == 1 else "%s^%d" % (s, e))
        neg = c < 0
        a = -c if neg else c
        if not factors:
            body = str(a)
        elif a == 1:
            body = "*".join(factors)
        else:
            body = str(a) + "*" + "*".join(factors)
        parts.append(("-" if neg else "+", body))
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        out += " %s %s" % (sign, body)
    return out


_SYMBOL_RE = re.compile(r"^([A-Za-z_][A-Za-z_0-9]*?)(?:\(([0-9,\s-]*)\))?$")
_FACTOR_RE = re.compile(r"^(.*?)(?:\^(\d+))?$")


def parse_symbol(text: str) -> IndexedSymbol:
    m = _SYMBOL_RE.match(text.strip())
    if not m:
        raise ValueError("bad symbol %r" % text)
    base, idx = m.group(1), m.group(2)
    if idx is None:
        return IndexedSymbol(base, ())
    idx = idx.strip()
    return IndexedSymbol(base, tuple(int(i) for i in idx.split(",")) if idx else ())


def _split_terms(text: str):
    depth = 0
    start = 0
    sign = 1
    out = []
    i = 0
    text = text.replace(" ", "")
    if not text:
        raise ValueError("empty polynomial text")
    if text[0] in "+-":
        sign = -1 if text[0] == "-" else 1
        start = i = 1
    while i < len(text):
        ch = text[i]
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch in "+-" and depth == 0 and i > start and text[i - 1] not in "^*/":
            out.append((sign, text[start:i]))
            sign = -1 if ch == "-" else 1
            start = i + 1
        i += 1
    out.append((sign, text[start:]))
    return out


def parse_poly(text: str) -> Poly:
    """Inverse of ``format_poly``; also accepts plain integers."""
    result: Dict[Monomial, Scalar] = {}
    for sign, term in _split_terms(text):
        coeff: Scalar = sign
        syms: Dict[IndexedSymbol, int] = {}
        for factor in _split_factors(term):
            if re.fullmatch(r"\d+(/\d+)?", factor):
                coeff = coeff * Fraction(factor)
                continue
            fm = _FACTOR_RE.match(factor)
            s = parse_symbol(fm.group(1))
            e = int(fm.group(2)) if fm.group(2) else 1
            syms[s] = syms.get(s, 0) + e
        mono = tuple(sorted(syms.items()))
        result[mono] = result.get(mono, 0) + coeff
    return Poly({m: c for m, c in result.items() if c})


def _split_factors(term: str):
    depth = 0
    cur = ""
    for ch in term:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "*" and depth == 0:
            yield cur
            cur = ""
        else:
            cur += ch
    if cur:
        yield cur


# ----------------------------------------------------------------------
# truncated power series in t

class Series:
    """Power series in t truncated after t^order; coefficients are Polys."""

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: Iterable, order: int | None = None):
        cs = [Poly.coerce(c) for c in coeffs]
        if order is None:
            order = len(cs) - 1
        if len(cs) < order + 1:
            cs = cs + [Poly()] * (order + 1 - len(cs))
        self.coeffs: Tuple[Poly, ...] = tuple(cs[: order + 1])
        self.order = order

    @classmethod
    def one(cls, order: int) -> "Series":
        return cls([1], order)

    @classmethod
    def constant(cls, c, order: int) -> "Series":
        return cls([c], order)

    @classmethod
    def geometric(cls, c, order: int) -> "Series":
        """1/(1 - c t) truncated."""
        c = Poly.coerce(c)
        out = [Poly.const(1)]
        for _ in range(order):
            out.append(out[-1] * c)
        return cls(out, order)

    def __getitem__(self, n: int) -> Poly:
        return self.coeffs[n]

    def __len__(self) -> int:
        return self.order + 1

    def __iter__(self):
        return iter(self.coeffs)

    def truncate(self, order: int) -> "Series":
        return Series(self.coeffs[: order + 1], order)

    def _coerce(self, other) -> "Series":
        if isinstance(other, Series):
            return other
        return Series([other], self.order)

    def __add__(self, other) -> "Series":
        other = self._coerce(other)
        n = min(self.order, other.order)
        return Series([self.coeffs[i] + other.coeffs[i] for i in range(n + 1)], n)

    __radd__ = __add__

    def __neg__(self) -> "Series":
        return Series([-c for c in self.coeffs], self.order)

    def __sub__(self, other) -> "Series":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Series":
        return self._coerce(other) - self

    def __mul__(self, other) -> "Series":
        if not isinstance(other, Series):
            p = Poly.coerce(other)
            return Series([c * p for c in self.coeffs], self.order)
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = []
        for k in range(n + 1):
            acc = Poly()
            for i in range(k + 1):
                if a[i] and b[k - i]:
                    acc = acc + a[i] * b[k - i]
            out.append(acc)
        return Series(out, n)

    __rmul__ = __mul__

    def shift(self, k: int = 1) -> "Series":
        """Multiply by t^k, keeping the same order."""
        return Series([Poly()] * k + list(self.coeffs[: self.order + 1 - k]), self.order)

    def map(self, fn: Callable[[Poly], Poly]) -> "Series":
        return Series([fn(c) for c in self.coeffs], self.order)

    def specialize(self, assignment: Mapping) -> "Series":
        return self.map(lambda c: specialize(c, assignment))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def to_ints(self) -> list:
        return [c.constant_value() for c in self.coeffs]

    def __repr__(self) -> str:
        return "Series([%s], order=%d)" % (", ".join(str(c) for c in self.coeffs), self.order)


def series_inverse(s: Series) -> Series:
    """Multiplicative inverse of a series whose constant term is exactly 1."""
    if s.coeffs[0] != 1:
        raise NonUnitConstantTerm("constant term is %s, expected 1" % s.coeffs[0])
    a = s.coeffs
    b = [Poly.const(1)]
    for n in range(1, s.order + 1):
        acc = Poly()
        for k in range(1, n + 1):
            if a[k] and b[n - k]:
                acc = acc + a[k] * b[n - k]
        b.append(-acc)
    return Series(b, s.order)


def poly_add(a: Poly, b: Poly) -> Poly:
    return Poly.coerce(a) + Poly.coerce(b)


def poly_mul(a: Poly, b: Poly) -> Poly:
    return Poly.coerce(a) * Poly.coerce(b)
