"""Quasi-tensor structure derived from tensor structure on the free monoid.

A word ``w`` is *blocked* at index ``i`` when it factors as ``w = u v`` with
``phi_i(u) > 0`` and ``eps_i(v) > 0``. For words it is enough to look for a
letter with ``phi_i > 0`` occurring before a letter with ``eps_i > 0``.
Blocked words get undefined operators and infinite statistics; every other
word keeps its tensor-mode values.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .core import INF, QuasiCrystal
from .errors import DomainError
from .graphs import ComponentGraph
from .products import Mode
from .words import _check, signature


@dataclass(frozen=True)
class Decomposition:
    word: tuple
    index: object
    left_letter_pos: int
    right_letter_pos: int


def find_blocking_decomposition(base: QuasiCrystal, w: Sequence, i) -> Decomposition | None:
    """Leftmost letter pair (x before y) with phi_i(x) > 0 and eps_i(y) > 0."""
    _check(base, w)
    left = None
    for p, x in enumerate(w):
        if left is not None and base.eps(i, x) > 0:
            return Decomposition(tuple(w), i, left, p)
        if left is None and base.phi(i, x) > 0:
            left = p
    return None


def derive_qtensor_structure(base: QuasiCrystal, w: Sequence, i):
    """``(e, f, eps, phi)`` of ``w`` in the quasi-tensor monoid, from tensor data."""
    w = tuple(w)
    if find_blocking_decomposition(base, w, i) is not None:
        return None, None, INF, INF
    s = signature(Mode.TENSOR, base, i, w)
    if s.zero:
        return None, None, INF, INF
    e = f = None
    if s.minus:
        p = s.rightmost_minus
        e = w[:p] + (base.e(i, w[p]),) + w[p + 1:]
    if s.plus:
        q = s.leftmost_plus
        f = w[:q] + (base.f(i, w[q]),) + w[q + 1:]
    return e, f, s.minus, s.plus


def transform_graph(g: ComponentGraph, base: QuasiCrystal) -> ComponentGraph:
    """Turn a tensor-mode word graph into the quasi-tensor graph on the same vertices.

    For each blocked ``(w, i)``: drop every ``i``-labelled edge at ``w``, add
    an ``i``-loop and set the statistics to ``+inf``. The result may fall
    apart into several components.
    """
    if g.mode is not Mode.TENSOR:
        raise DomainError("transform_graph expects a tensor-mode graph")
    blocked = {(w, i) for w in g.vertices for i in g.indices
               if find_blocking_decomposition(base, w, i) is not None}
    edges = frozenset((a, b, i) for a, b, i in g.edges if (a, i) not in blocked and (b, i) not in blocked)
    loops = g.loops | frozenset(blocked)
    stats = {}
    for w in g.vertices:
        stats[w] = tuple((INF, INF) if (w, i) in blocked else pair for i, pair in zip(g.indices, g.stats[w]))
    return ComponentGraph(Mode.QTENSOR, g.indices, g.vertices, dict(g.wt), stats, edges, loops,
                          g.root, g.base_id)


class LeviWitness(NamedTuple):
    """Overlap ``z``; ``x1_is_prefix`` says ``x2 = x1 z`` (else ``x1 = x2 z``)."""

    z: tuple
    x1_is_prefix: bool


def levi_decompose(x1: Sequence, y1: Sequence, x2: Sequence, y2: Sequence) -> LeviWitness:
    """Equidivisibility witness in the free monoid for ``x1 y1 == x2 y2``."""
    x1, y1, x2, y2 = map(tuple, (x1, y1, x2, y2))
    if x1 + y1 != x2 + y2:
        raise DomainError("x1·y1 and x2·y2 are different words")
    if len(x1) <= len(x2):
        z = x2[len(x1):]
        assert x2 == x1 + z and y1 == z + y2
        return LeviWitness(z, True)
    z = x1[len(x2):]
    assert x1 == x2 + z and y2 == z + y1
    return LeviWitness(z, False)
