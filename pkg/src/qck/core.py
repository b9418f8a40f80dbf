"""Seminormal quasi-crystals: data structure, standard crystals, validation.

A ``QuasiCrystal`` keeps its carrier as a tuple of hashable labels with a
dense index; the operator tables are lists of optional indices. The
undefined value is ``None`` everywhere in the public API.
"""
from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from typing import Hashable, Iterable, Mapping

from . import rootsys
from .errors import DomainError, LetterError
from .rootsys import RootSystemSpec, add_weights, sub_weights, unit


class _PlusInfinity:
    """The maximal element +inf of Z u {+inf}; absorbs finite summands."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INF"

    def __str__(self):
        return "+inf"

    def __add__(self, other):
        if isinstance(other, (int, _PlusInfinity)):
            return self
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            return self
        return NotImplemented

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("+inf")

    def __lt__(self, other):
        if isinstance(other, (int, _PlusInfinity)):
            return False
        return NotImplemented

    def __le__(self, other):
        if isinstance(other, (int, _PlusInfinity)):
            return other is self
        return NotImplemented

    def __gt__(self, other):
        if isinstance(other, (int, _PlusInfinity)):
            return other is not self
        return NotImplemented

    def __ge__(self, other):
        if isinstance(other, (int, _PlusInfinity)):
            return True
        return NotImplemented

    def __reduce__(self):
        return (_PlusInfinity, ())


INF = _PlusInfinity()


def is_inf(x) -> bool:
    return x is INF


def ext_to_json(x):
    return "+inf" if x is INF else x


def ext_from_json(x):
    if x == "+inf" or x is INF:
        return INF
    if isinstance(x, bool) or not isinstance(x, int):
        raise DomainError(f"statistic must be an integer or '+inf', got {x!r}")
    return x


class QuasiCrystal:
    """A finite seminormal quasi-crystal (validity is checked separately).

    ``wt`` maps elements to weights; ``e`` and ``f`` map each index to a
    partial map ``{x: y}``; ``eps`` and ``phi`` map each index to ``{x: value}``
    with values ints or ``INF``. Missing statistics default to the string
    lengths read off the operator tables.
    """

    def __init__(self, system: RootSystemSpec, elements: Iterable[Hashable], wt: Mapping,
                 f: Mapping, e: Mapping | None = None, eps: Mapping | None = None,
                 phi: Mapping | None = None, names: Mapping | None = None, ident: str | None = None):
        self.system = system
        self.elements = tuple(elements)
        self._index = {x: k for k, x in enumerate(self.elements)}
        if len(self._index) != len(self.elements):
            raise DomainError("carrier has repeated elements")
        self.indices = system.index_set
        self._wt = [tuple(wt[x]) for x in self.elements]
        for w in self._wt:
            if len(w) != system.rank:
                raise DomainError(f"weight {w} does not match rank {system.rank}")

        def table(maps, i):
            out = [None] * len(self.elements)
            for x, y in (maps.get(i, {}) if maps else {}).items():
                if y is not None:
                    out[self._pos(x)] = self._pos(y)
            return out

        self._f = {i: table(f, i) for i in self.indices}
        if e is None:
            self._e = {i: [None] * len(self.elements) for i in self.indices}
            for i in self.indices:
                for k, t in enumerate(self._f[i]):
                    if t is not None:
                        self._e[i][t] = k
        else:
            self._e = {i: table(e, i) for i in self.indices}

        self._eps = {}
        self._phi = {}
        for i in self.indices:
            given_eps = (eps or {}).get(i)
            given_phi = (phi or {}).get(i)
            self._eps[i] = [
                given_eps[x] if given_eps is not None and x in given_eps else self._string_len(self._e[i], k)
                for k, x in enumerate(self.elements)
            ]
            self._phi[i] = [
                given_phi[x] if given_phi is not None and x in given_phi else self._string_len(self._f[i], k)
                for k, x in enumerate(self.elements)
            ]
        self._names = {x: str(x) for x in self.elements}
        if names:
            self._names.update({x: str(v) for x, v in names.items()})
        self._by_name = {v: x for x, v in self._names.items()}
        self.ident = ident

    def _string_len(self, table, k):
        steps = 0
        seen = {k}
        while table[k] is not None:
            k = table[k]
            steps += 1
            if k in seen:
                return INF
            seen.add(k)
        return steps

    def _pos(self, x) -> int:
        try:
            return self._index[x]
        except (KeyError, TypeError):
            raise LetterError(f"{x!r} is not an element of the carrier") from None

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, x):
        try:
            return x in self._index
        except TypeError:
            return False

    def __repr__(self):
        label = self.ident or f"{len(self)} elements"
        return f"<QuasiCrystal {label} of type {self.system.ident}>"

    def position(self, x) -> int:
        """Dense index of ``x``; also the carrier order used for shortlex."""
        return self._pos(x)

    def wt(self, x):
        return self._wt[self._pos(x)]

    def e(self, i, x):
        if x is None:
            return None
        t = self._e[i][self._pos(x)]
        return None if t is None else self.elements[t]

    def f(self, i, x):
        if x is None:
            return None
        t = self._f[i][self._pos(x)]
        return None if t is None else self.elements[t]

    def eps(self, i, x):
        return self._eps[i][self._pos(x)]

    def phi(self, i, x):
        return self._phi[i][self._pos(x)]

    def pairing(self, x, i) -> int:
        return self.system.pairing(self.wt(x), i)

    def name(self, x) -> str:
        return self._names[x] if x in self._index else str(x)

    def element(self, name: str):
        try:
            return self._by_name[name]
        except KeyError:
            raise LetterError(f"no element named {name!r}") from None

    def edges(self) -> set:
        """Set of ``(x, f_i(x), i)`` over all defined lowering operators."""
        return {(x, self.f(i, x), i) for i in self.indices for x in self.elements if self.f(i, x) is not None}

    def loops(self) -> set:
        return {(x, i) for i in self.indices for x in self.elements if self.eps(i, x) is INF}

    def to_json(self) -> dict:
        nm = self.name
        ops = {}
        for i in self.indices:
            ops[str(i)] = {
                "f": {nm(x): nm(self.f(i, x)) for x in self.elements if self.f(i, x) is not None},
                "e": {nm(x): nm(self.e(i, x)) for x in self.elements if self.e(i, x) is not None},
            }
        return {
            "system": self.system.to_json(),
            "elements": [nm(x) for x in self.elements],
            "wt": [list(self.wt(x)) for x in self.elements],
            "ops": ops,
            "eps": {str(i): {nm(x): ext_to_json(self.eps(i, x)) for x in self.elements} for i in self.indices},
            "phi": {str(i): {nm(x): ext_to_json(self.phi(i, x)) for x in self.elements} for i in self.indices},
        }


def standard_crystal_A(n: int) -> QuasiCrystal:
    """The standard crystal of type A_n on 1 < 2 < ... < n."""
    system = rootsys.type_A(n)
    elements = list(range(1, n + 1))
    f = {i: {i: i + 1} for i in system.index_set}
    return QuasiCrystal(system, elements, {x: unit(n, x) for x in elements}, f, ident=f"A{n}")


def standard_crystal_C(n: int) -> QuasiCrystal:
    """The standard crystal of type C_n; the barred letter x-bar is ``-x``."""
    system = rootsys.type_C(n)
    elements = list(range(1, n + 1)) + list(range(-n, 0))
    wt = {x: unit(n, x) if x > 0 else tuple(-c for c in unit(n, -x)) for x in elements}
    f = {i: {i: i + 1, -(i + 1): -i} for i in range(1, n)}
    f[n] = {n: -n}
    return QuasiCrystal(system, elements, wt, f, ident=f"C{n}")


def trivial_crystal(system: RootSystemSpec, element=()) -> QuasiCrystal:
    """One-element quasi-crystal of weight zero with all statistics zero."""
    return QuasiCrystal(system, [element], {element: rootsys.zero_weight(system.rank)}, {},
                        names={element: ""}, ident=f"1_{system.ident}")


@dataclass(frozen=True)
class Violation:
    element: object
    index: object
    condition: int
    message: str


@dataclass
class ValidationReport:
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def conditions(self) -> set:
        return {v.condition for v in self.violations}

    def __iter__(self):
        return iter(self.violations)

    def __len__(self):
        return len(self.violations)

    def lines(self, q: QuasiCrystal | None = None) -> list:
        name = q.name if q is not None else str
        return [f"condition {v.condition} at ({name(v.element)}, {v.index}): {v.message}" for v in self.violations]


def _is_stat(v) -> bool:
    return v is INF or (isinstance(v, int) and not isinstance(v, bool))


def validate_seminormal(q: QuasiCrystal) -> ValidationReport:
    """Check the six quasi-crystal conditions for every element and index."""
    report = ValidationReport()
    bad = report.violations.append
    n = len(q)
    for i in q.indices:
        alpha = q.system.simple_root(i)
        for x in q.elements:
            eps, phi = q.eps(i, x), q.phi(i, x)
            if not (_is_stat(eps) and _is_stat(phi)):
                bad(Violation(x, i, 1, f"statistics must lie in Z u {{+inf}}, got {eps!r}, {phi!r}"))
                continue
            if (eps is INF) != (phi is INF):
                bad(Violation(x, i, 1, f"eps={eps} and phi={phi} must be infinite together"))
            elif eps is not INF and phi != eps + q.pairing(x, i):
                bad(Violation(x, i, 1, f"phi={phi} != eps + <wt, coroot> = {eps + q.pairing(x, i)}"))
            y = q.e(i, x)
            if y is not None and q.wt(y) != add_weights(q.wt(x), alpha):
                bad(Violation(x, i, 2, f"wt(e(x)) = {q.wt(y)} != wt(x) + alpha = {add_weights(q.wt(x), alpha)}"))
            z = q.f(i, x)
            if z is not None and q.wt(z) != sub_weights(q.wt(x), alpha):
                bad(Violation(x, i, 3, f"wt(f(x)) = {q.wt(z)} != wt(x) - alpha = {sub_weights(q.wt(x), alpha)}"))
            if y is not None and q.f(i, y) != x:
                bad(Violation(x, i, 4, f"e(x) = {q.name(y)} but f({q.name(y)}) != x"))
            if z is not None and q.e(i, z) != x:
                bad(Violation(x, i, 4, f"f(x) = {q.name(z)} but e({q.name(z)}) != x"))
            if eps is INF:
                if y is not None or z is not None:
                    bad(Violation(x, i, 5, "infinite statistics but an operator is defined"))
                continue
            for op, stat, label in ((q.e, eps, "eps"), (q.f, phi, "phi")):
                steps, cur = 0, x
                while steps <= n:
                    cur = op(i, cur)
                    if cur is None:
                        break
                    steps += 1
                if steps > n:
                    bad(Violation(x, i, 6, f"operator string through x never terminates ({label}={stat})"))
                elif steps != stat:
                    bad(Violation(x, i, 6, f"{label}={stat} but the operator applies {steps} times"))
    return report


def is_crystal(q: QuasiCrystal) -> bool:
    return all(q.eps(i, x) is not INF and q.phi(i, x) is not INF for i in q.indices for x in q.elements)


def check_isomorphism_pair(q: QuasiCrystal, q2: QuasiCrystal, psi: Mapping) -> bool:
    """True iff ``psi`` (a dict on the carrier of ``q``) is a quasi-crystal isomorphism."""
    if q.system != q2.system:
        return False
    if set(psi) != set(q.elements) or any(y not in q2 for y in psi.values()):
        return False
    if len(set(psi.values())) != len(q2):
        return False
    for x, y in psi.items():
        if q.wt(x) != q2.wt(y):
            return False
        for i in q.indices:
            if q.eps(i, x) != q2.eps(i, y) or q.phi(i, x) != q2.phi(i, y):
                return False
            for op, op2 in ((q.e, q2.e), (q.f, q2.f)):
                t = op(i, x)
                if t is not None and psi[t] != op2(i, y):
                    return False
    return True


class InvalidQuasiCrystal(DomainError):
    def __init__(self, report: ValidationReport, q: QuasiCrystal):
        self.report = report
        self.crystal = q
        super().__init__("; ".join(report.lines(q)[:5]))


def load_json(data: Mapping, validate: bool = True) -> QuasiCrystal:
    """Load a quasi-crystal from the JSON schema produced by ``to_json``.

    ``ops[i]["e"]`` is optional (defaults to the inverse of ``f``); ``eps``
    and ``phi`` are optional (default to string lengths). ``"+inf"``
    encodes the infinite statistic.
    """
    system = rootsys.from_json(data["system"])
    names = [str(x) for x in data["elements"]]
    if len(data["wt"]) != len(names):
        raise DomainError("wt must list one weight per element")
    wt = dict(zip(names, (tuple(w) for w in data["wt"])))

    def index_key(k):
        for i in system.index_set:
            if str(i) == str(k):
                return i
        raise DomainError(f"unknown index {k!r}")

    def check(name):
        if name not in wt:
            raise DomainError(f"unknown element {name!r}")
        return name

    f, e = {}, None
    for k, ops in data.get("ops", {}).items():
        i = index_key(k)
        f[i] = {check(str(x)): check(str(y)) for x, y in ops.get("f", {}).items()}
        if "e" in ops:
            e = e if e is not None else {}
            e[i] = {check(str(x)): check(str(y)) for x, y in ops["e"].items()}
    if e is not None:
        for k, ops in data.get("ops", {}).items():
            e.setdefault(index_key(k), {})

    def stats(key):
        if key not in data:
            return None
        return {index_key(k): {check(str(x)): ext_from_json(v) for x, v in vals.items()}
                for k, vals in data[key].items()}

    digest = hashlib.sha256(json.dumps(data, sort_keys=True).encode()).hexdigest()[:16]
    q = QuasiCrystal(system, names, wt, f, e=e, eps=stats("eps"), phi=stats("phi"), ident=f"file-{digest}")
    if validate:
        report = validate_seminormal(q)
        if not report.ok:
            raise InvalidQuasiCrystal(report, q)
    return q
