"""Connected components of word quasi-crystal graphs, rooted isomorphism, export.

A component is generated from one word by closing under every defined
``e_i``/``f_i``. Operators preserve word length, so components are finite.
Because each vertex has at most one outgoing and one incoming edge per
label, an isomorphism of connected components is forced once the image of
a single vertex is fixed; ``iso_map`` exploits this with a paired traversal
and needs no backtracking.
"""
from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field, replace
from typing import Iterable

from .core import INF, QuasiCrystal, ext_from_json, ext_to_json
from .errors import CapExceeded, DomainError
from .products import Mode
from .words import shortlex_key, signature, word_weight

DEFAULT_CAP = 10**6


def vertex_data(mode: Mode, base: QuasiCrystal, w):
    """Per-index ``(eps, phi, e(w), f(w))`` from one signature evaluation each."""
    out = []
    for i in base.indices:
        s = signature(mode, base, i, w)
        e = f = None
        if not s.zero:
            if s.minus:
                p = s.rightmost_minus
                e = w[:p] + (base.e(i, w[p]),) + w[p + 1:]
            if s.plus:
                q = s.leftmost_plus
                f = w[:q] + (base.f(i, w[q]),) + w[q + 1:]
        eps, phi = s.stats
        out.append((eps, phi, e, f))
    return out


@dataclass
class ComponentGraph:
    """Weighted, labelled word graph with loops.

    Built by ``component`` it is one connected component containing
    ``root``; ``word_graph`` and ``transform_graph`` also produce unions of
    components, for which ``root`` may be ``None``.
    """

    mode: Mode
    indices: tuple
    vertices: tuple  # shortlex order
    wt: dict
    stats: dict  # word -> tuple of (eps, phi), one pair per index
    edges: frozenset  # (source, target, label)
    loops: frozenset  # (vertex, label)
    root: tuple | None = None
    base_id: str | None = None
    _rank: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        self.mode = Mode(self.mode)
        self._rank = {v: k for k, v in enumerate(self.vertices)}

    def __len__(self):
        return len(self.vertices)

    def sorted_edges(self) -> list:
        pos = {i: k for k, i in enumerate(self.indices)}
        return sorted(self.edges, key=lambda t: (self._rank[t[0]], pos[t[2]], self._rank[t[1]]))

    def sorted_loops(self) -> list:
        pos = {i: k for k, i in enumerate(self.indices)}
        return sorted(self.loops, key=lambda t: (self._rank[t[0]], pos[t[1]]))

    def stat(self, w, i):
        return self.stats[w][self.indices.index(i)]

    def connected_components(self) -> list:
        adj = {v: set() for v in self.vertices}
        for u, v, _ in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        seen, parts = set(), []
        for v in self.vertices:
            if v in seen:
                continue
            part, todo = {v}, [v]
            while todo:
                for y in adj[todo.pop()]:
                    if y not in part:
                        part.add(y)
                        todo.append(y)
            seen |= part
            parts.append(self.restrict(part, root=v))
        return parts

    def restrict(self, keep: Iterable, root=None) -> "ComponentGraph":
        keep = set(keep)
        return ComponentGraph(
            self.mode, self.indices, tuple(v for v in self.vertices if v in keep),
            {v: self.wt[v] for v in keep}, {v: self.stats[v] for v in keep},
            frozenset(t for t in self.edges if t[0] in keep and t[1] in keep),
            frozenset(t for t in self.loops if t[0] in keep),
            root, self.base_id,
        )


def _build(mode: Mode, base: QuasiCrystal, vertices: dict, root):
    edges, loops, wt, stats = set(), set(), {}, {}
    for w, data in vertices.items():
        wt[w] = word_weight(base, w)
        stats[w] = tuple((eps, phi) for eps, phi, _, _ in data)
        for i, (eps, _, _, f) in zip(base.indices, data):
            if f is not None:
                edges.add((w, f, i))
            if eps is INF:
                loops.add((w, i))
    order = tuple(sorted(vertices, key=lambda v: shortlex_key(base, v)))
    return ComponentGraph(Mode(mode), base.indices, order, wt, stats, frozenset(edges),
                          frozenset(loops), root, base.ident)


def component(mode: Mode, base: QuasiCrystal, w, cap: int = DEFAULT_CAP) -> ComponentGraph:
    """Connected component of the word graph containing ``w``."""
    mode = Mode(mode)
    w = tuple(w)
    seen = {w: vertex_data(mode, base, w)}
    todo = deque([w])
    while todo:
        for _, _, e, f in seen[todo.popleft()]:
            for y in (e, f):
                if y is not None and y not in seen:
                    if len(seen) >= cap:
                        raise CapExceeded(f"component of {w!r} exceeds {cap} vertices")
                    seen[y] = vertex_data(mode, base, y)
                    todo.append(y)
    return _build(mode, base, seen, w)


def word_graph(mode: Mode, base: QuasiCrystal, words: Iterable) -> ComponentGraph:
    """Induced graph on a set of words closed under the operators."""
    mode = Mode(mode)
    data = {tuple(w): vertex_data(mode, base, tuple(w)) for w in words}
    for w, rows in data.items():
        for _, _, e, f in rows:
            for y in (e, f):
                if y is not None and y not in data:
                    raise DomainError(f"word set is not closed: {w!r} -> {y!r}")
    return _build(mode, base, data, None)


def iso_map(mode: Mode, base: QuasiCrystal, u, v, cap: int = DEFAULT_CAP) -> dict | None:
    """The isomorphism of components sending ``u`` to ``v``, or ``None``.

    Pairs are extended along every defined operator; a pair with different
    weight or statistics, or a conflict with an earlier pairing, rules the
    isomorphism out.
    """
    mode = Mode(mode)
    u, v = tuple(u), tuple(v)
    fwd, bwd = {u: v}, {v: u}
    todo = deque([(u, v)])
    while todo:
        a, b = todo.popleft()
        if word_weight(base, a) != word_weight(base, b):
            return None
        da, db = vertex_data(mode, base, a), vertex_data(mode, base, b)
        for (ea, pa, xa, ya), (eb, pb, xb, yb) in zip(da, db):
            if ea != eb or pa != pb:
                return None
            for s, t in ((xa, xb), (ya, yb)):
                if (s is None) != (t is None):
                    return None
                if s is None:
                    continue
                if s in fwd or t in bwd:
                    if fwd.get(s) != t or bwd.get(t) != s:
                        return None
                    continue
                if len(fwd) >= cap:
                    raise CapExceeded(f"component of {u!r} exceeds {cap} vertices")
                fwd[s], bwd[t] = t, s
                todo.append((s, t))
    return fwd


def iso_from(mode: Mode, base: QuasiCrystal, u, v, cap: int = DEFAULT_CAP) -> bool:
    return iso_map(mode, base, u, v, cap) is not None


def export_dot(g: ComponentGraph, base: QuasiCrystal | None = None) -> str:
    """Deterministic DOT text; vertices in shortlex order, loops as self-edges."""
    def show(w):
        if not w:
            return "ε"
        names = [base.name(x) if base is not None else str(x) for x in w]
        sep = "" if all(len(n) == 1 for n in names) else " "
        return sep.join(names)

    ids = {v: f"v{k}" for k, v in enumerate(g.vertices)}
    lines = ["digraph component {", f'  // mode={g.mode.value} vertices={len(g)}']
    for v in g.vertices:
        wt = ",".join(map(str, g.wt[v]))
        lines.append(f'  {ids[v]} [label="{show(v)}\\nwt=({wt})"];')
    for a, b, i in g.sorted_edges():
        lines.append(f'  {ids[a]} -> {ids[b]} [label="{i}"];')
    for a, i in g.sorted_loops():
        lines.append(f'  {ids[a]} -> {ids[a]} [label="{i}", style=dashed];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json_dict(g: ComponentGraph) -> dict:
    return {
        "mode": g.mode.value,
        "base": g.base_id,
        "indices": list(g.indices),
        "root": None if g.root is None else list(g.root),
        "vertices": [
            {"word": list(v), "wt": list(g.wt[v]),
             "stats": [[ext_to_json(a), ext_to_json(b)] for a, b in g.stats[v]]}
            for v in g.vertices
        ],
        "edges": [[list(a), list(b), i] for a, b, i in g.sorted_edges()],
        "loops": [[list(a), i] for a, i in g.sorted_loops()],
    }


def export_json(g: ComponentGraph) -> str:
    return json.dumps(to_json_dict(g), ensure_ascii=False, indent=1)


def from_json_dict(data: dict) -> ComponentGraph:
    vertices = tuple(tuple(d["word"]) for d in data["vertices"])
    return ComponentGraph(
        Mode(data["mode"]),
        tuple(data["indices"]),
        vertices,
        {tuple(d["word"]): tuple(d["wt"]) for d in data["vertices"]},
        {tuple(d["word"]): tuple((ext_from_json(a), ext_from_json(b)) for a, b in d["stats"])
         for d in data["vertices"]},
        frozenset((tuple(a), tuple(b), i) for a, b, i in data["edges"]),
        frozenset((tuple(a), i) for a, i in data["loops"]),
        None if data["root"] is None else tuple(data["root"]),
        data.get("base"),
    )


def graph_from_json(text: str) -> ComponentGraph:
    return from_json_dict(json.loads(text))


def with_root(g: ComponentGraph, root) -> ComponentGraph:
    return replace(g, root=tuple(root))
