"""Tensor and quasi-tensor products of seminormal quasi-crystals."""
from __future__ import annotations

from enum import Enum

from .core import INF, QuasiCrystal, trivial_crystal
from .rootsys import add_weights


class Mode(str, Enum):
    TENSOR = "tensor"
    QTENSOR = "qtensor"

    @property
    def symbol(self) -> str:
        return "⊗" if self is Mode.TENSOR else "⊗̇"


LEFT, RIGHT = "left", "right"


def combine(mode: Mode, eps_l, phi_l, pair_l: int, eps_r, phi_r, pair_r: int):
    """Structure of a two-factor product at one index.

    ``pair_l``/``pair_r`` are the coroot pairings of the factor weights.
    Returns ``(eps, phi, e_side, f_side)`` where a side of ``None`` means the
    operator is undefined on the product regardless of the factors.
    """
    if mode is Mode.QTENSOR and phi_l > 0 and eps_r > 0:
        return INF, INF, None, None
    eps = max(eps_l, eps_r - pair_l)
    phi = max(phi_l + pair_r, phi_r)
    e_side = LEFT if phi_l >= eps_r else RIGHT
    f_side = LEFT if phi_l > eps_r else RIGHT
    return eps, phi, e_side, f_side


def _apply(side, op, i, x, y, label):
    if side is None:
        return None
    if side == LEFT:
        x = op[0](i, x)
    else:
        y = op[1](i, y)
    if x is None or y is None:
        return None
    return label(x, y)


def product(mode: Mode, q: QuasiCrystal, q2: QuasiCrystal, label=None, name=None, ident=None) -> QuasiCrystal:
    """Materialize ``q (x) q2`` or ``q (x.) q2`` as explicit tables.

    ``label(x, y)`` builds the product element (default: the pair ``(x, y)``)
    and ``name(x, y)`` its display name (default ``"x⊗y"``).
    """
    mode = Mode(mode)
    if q.system != q2.system:
        raise TypeError(f"cannot multiply quasi-crystals of types {q.system.ident} and {q2.system.ident}")
    label = label or (lambda x, y: (x, y))
    elements, wt, names = [], {}, {}
    e, f, eps, phi = ({i: {} for i in q.indices} for _ in range(4))
    for x in q.elements:
        for y in q2.elements:
            xy = label(x, y)
            elements.append(xy)
            wt[xy] = add_weights(q.wt(x), q2.wt(y))
            names[xy] = name(x, y) if name else q.name(x) + mode.symbol + q2.name(y)
            for i in q.indices:
                s = combine(mode, q.eps(i, x), q.phi(i, x), q.pairing(x, i),
                            q2.eps(i, y), q2.phi(i, y), q2.pairing(y, i))
                eps[i][xy], phi[i][xy] = s[0], s[1]
                e[i][xy] = _apply(s[2], (q.e, q2.e), i, x, y, label)
                f[i][xy] = _apply(s[3], (q.f, q2.f), i, x, y, label)
    if ident is None and q.ident and q2.ident:
        ident = f"({q.ident}{mode.symbol}{q2.ident})"
    return QuasiCrystal(q.system, elements, wt, f, e=e, eps=eps, phi=phi, names=names, ident=ident)


def tensor(q: QuasiCrystal, q2: QuasiCrystal, label=None) -> QuasiCrystal:
    return product(Mode.TENSOR, q, q2, label)


def quasi_tensor(q: QuasiCrystal, q2: QuasiCrystal, label=None) -> QuasiCrystal:
    return product(Mode.QTENSOR, q, q2, label)


def iterated_product(mode: Mode, q: QuasiCrystal, k: int) -> QuasiCrystal:
    """Left-associated ``k``-fold product of ``q`` with itself.

    Elements are ``k``-tuples of elements of ``q``; ``k == 0`` gives the
    trivial one-element quasi-crystal on the empty tuple.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    mode = Mode(mode)
    sep = " " if any(len(q.name(x)) > 1 for x in q.elements) else ""
    ident = f"{q.ident}^{mode.symbol}{k}" if q.ident else None
    out = trivial_crystal(q.system, ())
    for _ in range(k):
        out = product(mode, out, q, label=lambda w, x: w + (x,),
                      name=lambda w, x: sep.join(q.name(c) for c in w + (x,)), ident=ident)
    return out
