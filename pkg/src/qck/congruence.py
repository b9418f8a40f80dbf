"""Plactic and hypoplactic congruences on the free monoid over a base crystal.

``u`` and ``v`` are congruent when some isomorphism of their connected
components (tensor mode for plactic, quasi-tensor mode for hypoplactic)
sends ``u`` to ``v``. Enumeration is bounded by word length; a class found
with cutoff ``L`` lists only its members of length at most ``L``.
"""
from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from scipy.cluster.hierarchy import DisjointSet

from .cache import PairCache
from .core import QuasiCrystal
from .graphs import DEFAULT_CAP, ComponentGraph, component, iso_from, iso_map
from .products import Mode
from .rootsys import rank
from .transform import find_blocking_decomposition
from .words import all_words, shortlex_key, word_weight


def decide(mode: Mode, base: QuasiCrystal, u, v, cache: PairCache | None = None,
           cap: int = DEFAULT_CAP) -> bool:
    u, v = tuple(u), tuple(v)
    if cache is not None:
        hit = cache.get(base, mode, u, v)
        if hit is not None:
            return hit
    verdict = iso_from(mode, base, u, v, cap)
    if cache is not None:
        cache.put(base, mode, u, v, verdict)
    return verdict


def plactic_equiv(base: QuasiCrystal, u, v, **kw) -> bool:
    return decide(Mode.TENSOR, base, u, v, **kw)


def hypo_equiv(base: QuasiCrystal, u, v, **kw) -> bool:
    return decide(Mode.QTENSOR, base, u, v, **kw)


@dataclass
class CongruenceClass:
    representative: tuple
    members: tuple  # shortlex order
    mode: Mode

    def __contains__(self, w):
        return tuple(w) in self.members


def _fingerprint(g: ComponentGraph):
    by_label = defaultdict(int)
    for _, _, i in g.edges:
        by_label[i] += 1
    profile = sorted((g.wt[v], g.stats[v]) for v in g.vertices)
    return len(g), tuple(sorted(by_label.items(), key=repr)), len(g.loops), repr(profile)


def enumerate_classes(base: QuasiCrystal, mode: Mode, max_len: int,
                      cap: int = DEFAULT_CAP) -> list:
    """Partition all words of length ``<= max_len`` into congruence classes.

    Components are built once; each isomorphism found between two of them
    (or of one with itself) relates its paired vertices in a union-find.
    Only components with equal (size, label counts, loop count, multiset of
    vertex weights and statistics) are compared.
    """
    mode = Mode(mode)
    if max_len < 0:
        raise ValueError("max_len must be non-negative")
    words = list(all_words(base, max_len))
    owner, comps = {}, []
    for w in words:
        if w in owner:
            continue
        g = component(mode, base, w, cap)
        for v in g.vertices:
            owner[v] = len(comps)
        comps.append(g)

    ds = DisjointSet(words)
    groups = defaultdict(list)
    for k, g in enumerate(comps):
        groups[_fingerprint(g)].append(k)
    for members in groups.values():
        for a_pos, a in enumerate(members):
            ga = comps[a]
            root = ga.vertices[0]
            key = (ga.wt[root], ga.stats[root])
            for b in members[a_pos:]:
                gb = comps[b]
                for cand in gb.vertices:
                    if cand == root or (gb.wt[cand], gb.stats[cand]) != key:
                        continue
                    psi = iso_map(mode, base, root, cand, cap)
                    if psi is not None:
                        for x, y in psi.items():
                            ds.merge(x, y)

    classes = []
    for subset in ds.subsets():
        members = tuple(sorted(subset, key=lambda w: shortlex_key(base, w)))
        classes.append(CongruenceClass(members[0], members, mode))
    classes.sort(key=lambda c: shortlex_key(base, c.representative))
    return classes


def class_index(classes: Sequence[CongruenceClass]) -> dict:
    return {w: k for k, c in enumerate(classes) for w in c.members}


def related_pairs(classes: Sequence[CongruenceClass]) -> Iterable:
    """Pairs ``(u, v)`` of distinct members of a class, ``v`` shortlex-earlier."""
    for c in classes:
        for a, b in itertools.combinations(c.members, 2):
            yield b, a


@dataclass
class CongruenceReport:
    violations: list = field(default_factory=list)
    checked: int = 0

    @property
    def ok(self) -> bool:
        return not self.violations


def verify_congruence_property(base: QuasiCrystal, mode: Mode, max_len: int,
                               contexts: Iterable | None = None, context_len: int = 1,
                               cap: int = DEFAULT_CAP) -> CongruenceReport:
    """Check ``u ~ v  =>  x u y ~ x v y`` on every related pair up to ``max_len``.

    ``contexts`` is an iterable of ``(x, y)`` word pairs; by default all
    pairs of words of length ``<= context_len``.
    """
    mode = Mode(mode)
    if contexts is None:
        short = list(all_words(base, context_len))
        contexts = [(x, y) for x in short for y in short]
    contexts = [(tuple(x), tuple(y)) for x, y in contexts]
    report = CongruenceReport()
    for u, v in related_pairs(enumerate_classes(base, mode, max_len, cap)):
        for x, y in contexts:
            report.checked += 1
            if not iso_from(mode, base, x + u + y, x + v + y, cap):
                report.violations.append((x, u, v, y))
    return report


def weights_linearly_independent(base: QuasiCrystal) -> bool:
    distinct = sorted({base.wt(x) for x in base.elements})
    return rank(distinct) == len(distinct)


@dataclass
class QuotientResult:
    """Outcome of checking that plactic-related pairs are hypoplactic-related."""

    holds: bool
    counterexample: tuple | None = None
    counterexamples: list = field(default_factory=list)
    pairs_checked: int = 0

    def __str__(self):
        return "HOLDS" if self.holds else f"COUNTEREXAMPLE {self.counterexample}"


def verify_quotient_inclusion(base: QuasiCrystal, max_len: int, collect_all: bool = False,
                              cap: int = DEFAULT_CAP) -> QuotientResult:
    """Look for ``u ≈ v`` with ``u`` not hypoplactic-related to ``v``.

    Pairs are scanned with ``u`` in shortlex order and ``v`` shortlex-earlier
    in the plactic class of ``u``; the first failure is ``counterexample``.
    """
    plac = enumerate_classes(base, Mode.TENSOR, max_len, cap)
    hypo_of = class_index(enumerate_classes(base, Mode.QTENSOR, max_len, cap))
    plac_of = class_index(plac)
    result = QuotientResult(True)
    for u in all_words(base, max_len):
        for v in plac[plac_of[u]].members:
            if v == u:
                break
            result.pairs_checked += 1
            if hypo_of[u] != hypo_of[v]:
                if result.holds:
                    result.holds = False
                    result.counterexample = (u, v)
                result.counterexamples.append((u, v))
                if not collect_all:
                    return result
    return result


def has_blocking_pair(base: QuasiCrystal, w, i) -> bool:
    return find_blocking_decomposition(base, w, i) is not None


def check_permutation_lemma(base: QuasiCrystal, max_len: int, cap: int = DEFAULT_CAP) -> CongruenceReport:
    """For plactic-related letter permutations, blocking pairs occur in both or neither."""
    report = CongruenceReport()
    for u, v in related_pairs(enumerate_classes(base, Mode.TENSOR, max_len, cap)):
        if sorted(map(base.position, u)) != sorted(map(base.position, v)):
            continue
        for i in base.indices:
            report.checked += 1
            if has_blocking_pair(base, u, i) != has_blocking_pair(base, v, i):
                report.violations.append((u, v, i))
    return report


def weight_preserved(base: QuasiCrystal, classes: Sequence[CongruenceClass]) -> bool:
    return all(len({word_weight(base, w) for w in c.members}) == 1 for c in classes)
