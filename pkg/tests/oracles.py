"""Independent reference implementations used only by the tests.

None of these touch the signature machinery, the component builder or the
rooted isomorphism search of the library; they recompute everything from
the letter tables of the base crystal.
"""
from __future__ import annotations

import itertools
from collections import defaultdict
from fractions import Fraction
from functools import lru_cache

from qck.core import INF


def _weight(base, w):
    total = [0] * base.system.rank
    for x in w:
        for k, c in enumerate(base.wt(x)):
            total[k] += c
    return tuple(total)


class TwoFactorOracle:
    """Word structure from the two-factor product rule, applied recursively.

    ``structure(i, w)`` splits off the first letter; ``splits(i, w)`` evaluates
    every split point ``w = u v`` so callers can confirm they all agree.
    """

    def __init__(self, base, quasi: bool):
        self.base = base
        self.quasi = quasi
        self.structure = lru_cache(maxsize=None)(self._structure)

    def _letter(self, i, x):
        b = self.base
        e, f = b.e(i, x), b.f(i, x)
        return (b.eps(i, x), b.phi(i, x), None if e is None else (e,), None if f is None else (f,))

    def _structure(self, i, w):
        if not w:
            return (0, 0, None, None)
        if len(w) == 1:
            return self._letter(i, w[0])
        return self.join(i, w[:1], w[1:])

    def join(self, i, u, v):
        eu, pu, eu_w, fu_w = self.structure(i, u)
        ev, pv, ev_w, fv_w = self.structure(i, v)
        if self.quasi and pu > 0 and ev > 0:
            return (INF, INF, None, None)
        pair_u = self.base.system.pairing(_weight(self.base, u), i)
        pair_v = self.base.system.pairing(_weight(self.base, v), i)
        eps = max(eu, ev - pair_u)
        phi = max(pu + pair_v, pv)
        if pu >= ev:
            e = None if eu_w is None else eu_w + v
        else:
            e = None if ev_w is None else u + ev_w
        if pu > ev:
            f = None if fu_w is None else fu_w + v
        else:
            f = None if fv_w is None else u + fv_w
        return (eps, phi, e, f)

    def splits(self, i, w):
        return [self.join(i, w[:k], w[k:]) for k in range(1, len(w))]

    def blocked(self, i, w) -> bool:
        """Some factorisation ``w = u v`` has phi(u) > 0 and eps(v) > 0 (tensor data)."""
        tensor = self if not self.quasi else TwoFactorOracle(self.base, quasi=False)
        for k in range(1, len(w)):
            if tensor.structure(i, w[:k])[1] > 0 and tensor.structure(i, w[k:])[0] > 0:
                return True
        return False


def oracle_component(oracle: TwoFactorOracle, w):
    """Vertices, weights, per-index statistics, edges and loops reachable from ``w``."""
    w = tuple(w)
    seen, todo = {w}, [w]
    while todo:
        x = todo.pop()
        for i in oracle.base.indices:
            _, _, e, f = oracle.structure(i, x)
            for y in (e, f):
                if y is not None and y not in seen:
                    seen.add(y)
                    todo.append(y)
    edges, loops = set(), set()
    for x in seen:
        for i in oracle.base.indices:
            eps, _, _, f = oracle.structure(i, x)
            if f is not None:
                edges.add((x, f, i))
            if eps is INF:
                loops.add((x, i))
    return seen, edges, loops


def brute_force_isomorphic(oracle: TwoFactorOracle, u, v) -> bool:
    """Try every weight-preserving bijection of the two components with ``u -> v``."""
    base = oracle.base
    cu, eu, lu = oracle_component(oracle, u)
    cv, ev, lv = oracle_component(oracle, v)
    if len(cu) != len(cv):
        return False

    def signature(x):
        return _weight(base, x), tuple(oracle.structure(i, x)[:2] for i in base.indices)

    buckets_u, buckets_v = defaultdict(list), defaultdict(list)
    for x in cu:
        buckets_u[signature(x)].append(x)
    for x in cv:
        buckets_v[signature(x)].append(x)
    if {k: len(b) for k, b in buckets_u.items()} != {k: len(b) for k, b in buckets_v.items()}:
        return False
    keys = sorted(buckets_u, key=repr)
    choices = [itertools.permutations(sorted(buckets_v[k])) for k in keys]
    for combo in itertools.product(*choices):
        psi = {}
        for k, image in zip(keys, combo):
            psi.update(zip(sorted(buckets_u[k]), image))
        if psi[tuple(u)] != tuple(v):
            continue
        if {(psi[a], psi[b], i) for a, b, i in eu} == ev and {(psi[a], i) for a, i in lu} == lv:
            return True
    return False


def fraction_rank(vectors) -> int:
    """Rank by Gaussian elimination over the rationals."""
    rows = [[Fraction(c) for c in v] for v in vectors]
    rank = 0
    cols = len(rows[0]) if rows else 0
    for c in range(cols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][c] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        for r in range(len(rows)):
            if r != rank and rows[r][c] != 0:
                factor = rows[r][c] / rows[rank][c]
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
    return rank
