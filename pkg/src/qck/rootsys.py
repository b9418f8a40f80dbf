"""Root-system data for types A_n, C_n and a table-driven generic kind.

Weights are plain tuples of Python ints. All arithmetic is exact.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Hashable, Mapping, Sequence

from .errors import DomainError, ShapeError

Weight = tuple  # tuple[int, ...]


def zero_weight(n: int) -> Weight:
    return (0,) * n


def add_weights(a: Weight, b: Weight) -> Weight:
    if len(a) != len(b):
        raise ShapeError(f"cannot add weights of length {len(a)} and {len(b)}")
    return tuple(x + y for x, y in zip(a, b))


def sub_weights(a: Weight, b: Weight) -> Weight:
    if len(a) != len(b):
        raise ShapeError(f"cannot subtract weights of length {len(a)} and {len(b)}")
    return tuple(x - y for x, y in zip(a, b))


def unit(n: int, k: int) -> Weight:
    """The standard basis vector e_k of Z^n (k is 1-based)."""
    return tuple(1 if j == k else 0 for j in range(1, n + 1))


def inner(u: Sequence, v: Sequence):
    if len(u) != len(v):
        raise ShapeError(f"length mismatch: {len(u)} vs {len(v)}")
    return sum(a * b for a, b in zip(u, v))


def _exact(x):
    x = Fraction(x)
    return x.numerator if x.denominator == 1 else x


def reflection(alpha: Sequence, v: Sequence) -> tuple:
    """Reflect ``v`` in the hyperplane orthogonal to ``alpha``.

    Coordinates come back as ints when integral, otherwise as Fractions.
    """
    aa = inner(alpha, alpha)
    if aa == 0:
        raise DomainError("cannot reflect in the hyperplane of the zero vector")
    c = Fraction(2 * inner(v, alpha), aa)
    return tuple(_exact(x - c * a) for x, a in zip(v, alpha))


def rank(vectors: Sequence[Sequence[int]]) -> int:
    """Rank of a list of integer vectors by fraction-free (Bareiss) elimination."""
    rows = [list(map(int, r)) for r in vectors]
    if not rows:
        return 0
    ncols = len(rows[0])
    if any(len(r) != ncols for r in rows):
        raise ShapeError("vectors of unequal length")
    r = 0
    prev = 1
    for c in range(ncols):
        pivot = next((k for k in range(r, len(rows)) if rows[k][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        for k in range(r + 1, len(rows)):
            rows[k] = [
                (rows[r][c] * rows[k][j] - rows[k][c] * rows[r][j]) // prev
                for j in range(ncols)
            ]
        prev = rows[r][c]
        r += 1
        if r == len(rows):
            break
    return r


@dataclass(frozen=True)
class RootSystemSpec:
    """Simple roots and coroot pairings for a fixed index set.

    ``kind`` is ``"A"``, ``"C"`` or ``"Generic"``. For the generic kind the
    pairing <lam, alpha_i^vee> is ``pairing_rows[i] . lam``; for A and C it
    is computed from the Euclidean inner product on Z^n.
    """

    kind: str
    rank: int
    index_set: tuple
    simple_roots: tuple  # tuple of (i, Weight) pairs, in index order
    pairing_rows: tuple | None = None
    _roots: dict = field(init=False, repr=False, compare=False, hash=False)
    _rows: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if self.kind not in ("A", "C", "Generic"):
            raise DomainError(f"unknown kind {self.kind!r}")
        if self.rank < 1:
            raise DomainError("rank must be positive")
        roots = dict(self.simple_roots)
        if tuple(roots) != tuple(self.index_set):
            raise DomainError("simple roots must be listed in index-set order")
        for i, a in roots.items():
            if len(a) != self.rank:
                raise ShapeError(f"simple root {i} has length {len(a)}, expected {self.rank}")
        if rank(list(roots.values())) != len(roots):
            raise DomainError("simple roots are not linearly independent")
        object.__setattr__(self, "_roots", roots)
        rows = {}
        if self.kind == "Generic":
            if self.pairing_rows is None:
                raise DomainError("generic root system needs pairing rows")
            rows = dict(self.pairing_rows)
            if set(rows) != set(roots):
                raise DomainError("pairing rows must cover the index set exactly")
            for i, row in rows.items():
                if len(row) != self.rank:
                    raise ShapeError(f"pairing row {i} has length {len(row)}")
                if not all(isinstance(x, int) for x in row):
                    raise DomainError("pairing rows must be integer vectors")
        object.__setattr__(self, "_rows", rows)

    @property
    def ident(self) -> str:
        if self.kind == "Generic":
            return f"Generic{self.rank}:{','.join(map(str, self.index_set))}"
        return f"{self.kind}{self.rank}"

    def simple_root(self, i: Hashable) -> Weight:
        try:
            return self._roots[i]
        except KeyError:
            raise IndexError(f"{i!r} is not in the index set {list(self.index_set)}") from None

    def pairing(self, lam: Sequence[int], i: Hashable) -> int:
        """Return <lam, alpha_i^vee>."""
        alpha = self.simple_root(i)
        if len(lam) != self.rank:
            raise ShapeError(f"weight of length {len(lam)} for a rank-{self.rank} system")
        if self.kind == "Generic":
            return inner(self._rows[i], lam)
        value = Fraction(2 * inner(lam, alpha), inner(alpha, alpha))
        if value.denominator != 1:
            raise DomainError(f"non-integral pairing {value} for weight {tuple(lam)}")
        return value.numerator

    def to_json(self) -> dict:
        if self.kind in ("A", "C"):
            return {"kind": self.kind, "rank": self.rank}
        return {
            "kind": "Generic",
            "rank": self.rank,
            "index_set": list(self.index_set),
            "simple_roots": {str(i): list(a) for i, a in self.simple_roots},
            "pairing_rows": {str(i): list(r) for i, r in self.pairing_rows},
        }


def type_A(n: int) -> RootSystemSpec:
    """Root system of type A_n: Z^n with simple roots e_i - e_{i+1}, i < n."""
    if n < 2:
        raise DomainError(f"type A needs n >= 2, got {n}")
    roots = tuple((i, sub_weights(unit(n, i), unit(n, i + 1))) for i in range(1, n))
    return RootSystemSpec("A", n, tuple(range(1, n)), roots)


def type_C(n: int) -> RootSystemSpec:
    """Root system of type C_n: as type A plus alpha_n = 2 e_n."""
    if n < 2:
        raise DomainError(f"type C needs n >= 2, got {n}")
    roots = [(i, sub_weights(unit(n, i), unit(n, i + 1))) for i in range(1, n)]
    roots.append((n, tuple(2 * x for x in unit(n, n))))
    return RootSystemSpec("C", n, tuple(range(1, n + 1)), tuple(roots))


def generic(rank: int, index_set: Sequence, simple_roots: Mapping, pairing_rows: Mapping) -> RootSystemSpec:
    index_set = tuple(index_set)
    return RootSystemSpec(
        "Generic",
        rank,
        index_set,
        tuple((i, tuple(simple_roots[i])) for i in index_set),
        tuple((i, tuple(pairing_rows[i])) for i in index_set),
    )


def _lookup(mapping: Mapping, i):
    if i in mapping:
        return mapping[i]
    if str(i) in mapping:
        return mapping[str(i)]
    raise DomainError(f"no entry for index {i!r}")


def from_json(data: Mapping) -> RootSystemSpec:
    """Build a root system from its JSON description.

    ``{"kind": "A", "rank": 3}`` and ``{"kind": "C", "rank": 2}`` name the
    built-in types; anything else must carry ``index_set``, ``simple_roots``
    and ``pairing_rows``.
    """
    kind = data.get("kind", "Generic")
    n = int(data["rank"])
    if kind == "A":
        return type_A(n)
    if kind == "C":
        return type_C(n)
    index_set = list(data["index_set"])
    return generic(
        n,
        index_set,
        {i: _lookup(data["simple_roots"], i) for i in index_set},
        {i: _lookup(data["pairing_rows"], i) for i in index_set},
    )
