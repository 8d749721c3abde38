"""Linear classification of permutation letters, vincular pattern counts and
the checks built on the four-variable pattern polynomial.

Exhaustive sweeps over S_n are vectorized with numpy: permutations are
generated in blocks sharing a first letter and all four pattern totals are
counted at once, so the joint distribution is computed a single time per n
and every check is a marginal or a specialization of it.
"""

from __future__ import annotations

import itertools
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from functools import lru_cache
from typing import Dict, List, Sequence, Tuple

import numpy as np

from .poly import IndexedSymbol, Poly, sym

PATTERNS = ("31-2", "2-13", "2-31", "13-2")
P, Q, R, S = (sym(c) for c in "pqrs")
_VARS = (P, Q, R, S)  # exponents of 13-2, 31-2, 2-13, 2-31 in that order


def _normalize_tag(tag: str) -> str:
    t = tag.replace("–", "-").replace("--", "-").strip()
    if t not in PATTERNS:
        raise ValueError("unknown pattern %r (choose from %s)" % (tag, ", ".join(PATTERNS)))
    return t


def linear_class(sigma: Sequence[int], i: int) -> str:
    """Class of position i (1-based) with sigma_0 = sigma_{n+1} = 0."""
    n = len(sigma)
    prev = sigma[i - 2] if i > 1 else 0
    cur = sigma[i - 1]
    nxt = sigma[i] if i < n else 0
    if prev < cur > nxt:
        return "peak"
    if prev > cur < nxt:
        return "valley"
    if prev < cur < nxt:
        return "dasc"
    return "ddes"


def linear_classes(sigma: Sequence[int]) -> Dict[int, str]:
    """Map each letter to its linear class."""
    return {sigma[i - 1]: linear_class(sigma, i) for i in range(1, len(sigma) + 1)}


def pattern_count(sigma: Sequence[int], letter: int, tag: str) -> int:
    """Occurrences of a vincular pattern in which ``letter`` plays the 2."""
    tag = _normalize_tag(tag)
    n = len(sigma)
    s = [0] + list(sigma)  # 1-based
    pos = s.index(letter)
    if tag == "31-2":
        return sum(1 for j in range(2, pos) if s[j] < letter < s[j - 1])
    if tag == "2-13":
        return sum(1 for j in range(pos + 1, n) if s[j] < letter < s[j + 1])
    if tag == "2-31":
        return sum(1 for j in range(pos + 1, n) if s[j + 1] < letter < s[j])
    return sum(1 for j in range(1, pos - 1) if s[j] < letter < s[j + 1])


def pattern_vectors(sigma: Sequence[int]) -> Tuple[List[int], List[int]]:
    """((2-13)(l), (31-2)(l)) for l = 0..n (index 0 unused)."""
    n = len(sigma)
    a = [0] * (n + 1)
    b = [0] * (n + 1)
    for l in range(1, n + 1):
        a[l] = pattern_count(sigma, l, "2-13")
        b[l] = pattern_count(sigma, l, "31-2")
    return a, b


def pattern_totals(sigma: Sequence[int]) -> Dict[str, int]:
    return {t: sum(pattern_count(sigma, l, t) for l in range(1, len(sigma) + 1)) for t in PATTERNS}


# ----------------------------------------------------------------------
# vectorized sweep

_BASE = 1 << 8  # counts never exceed C(n,3) <= 220 for n <= 12


def _block_counts(n: int, first: int) -> Dict[int, int]:
    rest = [x for x in range(1, n + 1) if x != first]
    tails = np.array(list(itertools.permutations(rest)), dtype=np.int16).reshape(-1, n - 1)
    perms = np.empty((tails.shape[0], n), dtype=np.int16)
    perms[:, 0] = first
    perms[:, 1:] = tails
    return _counts_of(perms)


def _counts_of(perms: np.ndarray) -> Dict[int, int]:
    k, n = perms.shape
    c132 = np.zeros(k, dtype=np.int32)
    c312 = np.zeros(k, dtype=np.int32)
    c213 = np.zeros(k, dtype=np.int32)
    c231 = np.zeros(k, dtype=np.int32)
    for j in range(n - 1):
        a = perms[:, j]
        b = perms[:, j + 1]
        desc = a > b
        lo = np.minimum(a, b)
        hi = np.maximum(a, b)
        for i in range(n):
            if i == j or i == j + 1:
                continue
            x = perms[:, i]
            between = (lo < x) & (x < hi)
            if i > j + 1:
                c312 += between & desc
                c132 += between & ~desc
            else:
                c231 += between & desc
                c213 += between & ~desc
    keys = ((c132.astype(np.int64) * _BASE + c312) * _BASE + c213) * _BASE + c231
    vals, cnts = np.unique(keys, return_counts=True)
    return {int(v): int(c) for v, c in zip(vals, cnts)}


def _decode(key: int) -> Tuple[int, int, int, int]:
    c231 = key % _BASE
    key //= _BASE
    c213 = key % _BASE
    key //= _BASE
    c312 = key % _BASE
    c132 = key // _BASE
    return c132, c312, c213, c231


@lru_cache(maxsize=16)
def pattern_distribution(n: int, jobs: int = 1) -> Tuple[Tuple[Tuple[int, int, int, int], int], ...]:
    """Joint distribution of the pattern totals (13-2, 31-2, 2-13, 2-31)
    over S_n, as sorted (exponent tuple, count) pairs."""
    if n <= 1:
        return (((0, 0, 0, 0), 1),)
    total: Counter = Counter()
    firsts = list(range(1, n + 1))
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_block_counts, [n] * n, firsts))
    else:
        parts = [_block_counts(n, f) for f in firsts]
    for part in parts:
        total.update(part)
    return tuple(sorted((_decode(k), c) for k, c in total.items()))


def p4(n: int, jobs: int = 1) -> Poly:
    """P_n(p,q,r,s) = sum of p^(13-2) q^(31-2) r^(2-13) s^(2-31)."""
    terms = {}
    for exps, c in pattern_distribution(n, jobs):
        terms[tuple((v, e) for v, e in sorted(zip(_VARS, exps)) if e)] = c
    return Poly(terms)


def _dist_from_exps(n: int, order: Sequence[int], jobs: int = 1) -> Counter:
    out: Counter = Counter()
    for exps, c in pattern_distribution(n, jobs):
        out[tuple(exps[i] for i in order)] += c
    return out


def _permuted(dist: Sequence, perm: Sequence[int]) -> Counter:
    """Distribution of P(v_perm[0], ..., v_perm[3]) as exponent tuples."""
    out: Counter = Counter()
    for exps, c in dist:
        new = [0, 0, 0, 0]
        for i, e in enumerate(exps):
            new[perm[i]] += e
        out[tuple(new)] += c
    return out


# variable order p, q, r, s = indices 0..3
_SYMMETRIES = {"P(q,p,s,r)": (1, 0, 3, 2), "P(s,r,q,p)": (3, 2, 1, 0), "P(r,s,p,q)": (2, 3, 0, 1)}


def check_z2z2_symmetry(n: int, jobs: int = 1) -> dict:
    dist = pattern_distribution(n, jobs)
    base = Counter(dict(dist))
    results = {name: _permuted(dist, perm) == base for name, perm in _SYMMETRIES.items()}
    fixing = sorted(perm for perm in itertools.permutations(range(4)) if _permuted(dist, perm) == base)
    expected = sorted([(0, 1, 2, 3)] + list(_SYMMETRIES.values()))
    report = {"n": n, "symmetries": results, "stabilizer": [list(p) for p in fixing],
              "only_these": fixing == expected}
    report["pass"] = all(results.values()) and (n < 5 or report["only_these"])
    return report


def _specialized(dist, one: int, swap: Tuple[int, int]) -> Tuple[Counter, Counter]:
    """Distributions of P with variable ``one`` set to 1, before and after
    exchanging the two variables in ``swap``."""
    lhs: Counter = Counter()
    rhs: Counter = Counter()
    i, j = swap
    for exps, c in dist:
        e = list(exps)
        e[one] = 0
        lhs[tuple(e)] += c
        e[i], e[j] = e[j], e[i]
        rhs[tuple(e)] += c
    return lhs, rhs


_CONJECTURE = {
    "a: P(1,q,r,s)=P(1,q,s,r)": (0, (2, 3)),
    "b: P(p,1,r,s)=P(p,1,s,r)": (1, (2, 3)),
    "c: P(p,q,1,s)=P(q,p,1,s)": (2, (0, 1)),
    "d: P(p,q,r,1)=P(q,p,r,1)": (3, (0, 1)),
}


def check_trivariate_conjecture(n_max: int, n_min: int = 1, jobs: int = 1) -> dict:
    """Check the four conjectured trivariate symmetries for n_min..n_max."""
    per_n = []
    first_failure = None
    for n in range(n_min, n_max + 1):
        t0 = time.perf_counter()
        dist = pattern_distribution(n, jobs)
        rel = {}
        for name, (one, swap) in _CONJECTURE.items():
            lhs, rhs = _specialized(dist, one, swap)
            rel[name] = lhs == rhs
            if not rel[name] and first_failure is None:
                first_failure = {"n": n, "relation": name}
        per_n.append({"n": n, "relations": rel, "pass": all(rel.values()),
                      "seconds": round(time.perf_counter() - t0, 3)})
    return {"n_max": n_max, "results": per_n, "first_failure": first_failure,
            "pass": first_failure is None}


def check_mixed_relation(n: int, jobs: int = 1) -> bool:
    """P(1,q,r,1) = P(1,q,1,r)."""
    a: Counter = Counter()
    b: Counter = Counter()
    for (e132, e312, e213, e231), c in pattern_distribution(n, jobs):
        a[(e312, e213)] += c
        b[(e312, e231)] += c
    return a == b


def check_pair_equidistribution(n: int, jobs: int = 1) -> dict:
    """(2-13, 31-2) and (2-31, 31-2) have the same joint distribution."""
    first = _dist_from_exps(n, (2, 1), jobs)
    second = _dist_from_exps(n, (3, 1), jobs)
    return {"n": n, "pass": first == second, "support": len(first)}


def claesson_equidistribution_check(n: int, jobs: int = 1) -> dict:
    dists = {tag: _dist_from_exps(n, (i,), jobs) for tag, i in
             (("13-2", 0), ("31-2", 1), ("2-13", 2), ("2-31", 3))}
    ref = dists["31-2"]
    return {"n": n, "pass": all(d == ref for d in dists.values()),
            "distribution": sorted((k[0], v) for k, v in ref.items())}


def pq_integer(k: int) -> Poly:
    """[k]_{p,q} = sum_{i<k} p^i q^(k-1-i)."""
    p, q = Poly.var(P), Poly.var(Q)
    return sum((p ** i * q ** (k - 1 - i) for i in range(k)), Poly())


def pq_polynomial(n: int, jobs: int = 1) -> Poly:
    """sum over S_n of p^(2-13) q^(31-2)."""
    terms: Dict = {}
    for (e132, e312, e213, e231), c in pattern_distribution(n, jobs):
        key = tuple((v, e) for v, e in ((P, e213), (Q, e312)) if e)
        terms[key] = terms.get(key, 0) + c
    return Poly(terms)


def pq_sfraction_check(n_max: int, jobs: int = 1) -> dict:
    from .contfrac import CoeffSeq, SFractionSpec, expand_s

    series = expand_s(SFractionSpec(CoeffSeq.from_rule(lambda i: pq_integer((i + 1) // 2))), n_max)
    per_n = [{"n": n, "pass": pq_polynomial(n, jobs) == series[n]} for n in range(n_max + 1)]
    return {"n_max": n_max, "results": per_n, "pass": all(r["pass"] for r in per_n)}
