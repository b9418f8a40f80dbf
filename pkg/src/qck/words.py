"""Free tensor and quasi-tensor quasi-crystal monoids over a base crystal.

Words are tuples of base elements. Word-level statistics and operators are
evaluated with the signature rule: each letter contributes
``-^eps +^phi`` (or the zero element when its statistics are infinite), and
the letters are multiplied in the bicyclic monoid with zero (tensor mode)
or in the zero monoid where ``+-`` collapses to zero (quasi-tensor mode).
Positions are 0-based letter indices.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Iterator, Sequence

from .core import INF, QuasiCrystal
from .errors import LetterError
from .products import Mode
from .rootsys import zero_weight

Word = tuple


@dataclass(frozen=True)
class Signature:
    """Reduced signature ``-^minus +^plus`` or the zero element.

    ``rightmost_minus`` and ``leftmost_plus`` are the positions of the letters
    that originate the surviving symbols struck by ``e_i`` and ``f_i``.
    """

    minus: int = 0
    plus: int = 0
    rightmost_minus: int | None = None
    leftmost_plus: int | None = None
    zero: bool = False

    @property
    def stats(self):
        return (INF, INF) if self.zero else (self.minus, self.plus)

    def __repr__(self):
        if self.zero:
            return "Signature(0)"
        return f"Signature(-^{self.minus} +^{self.plus}, e@{self.rightmost_minus}, f@{self.leftmost_plus})"


ZERO = Signature(zero=True)
ONE = Signature()


def bicyclic_mul(s: Signature, t: Signature) -> Signature:
    """Product in the bicyclic monoid with zero, tracking origins."""
    if s.zero or t.zero:
        return ZERO
    a, b, c, d = s.minus, s.plus, t.minus, t.plus
    minus = a + max(c - b, 0)
    plus = d + max(b - c, 0)
    rm = t.rightmost_minus if c > b else s.rightmost_minus
    lp = s.leftmost_plus if b > c else t.leftmost_plus
    return Signature(minus, plus, rm if minus else None, lp if plus else None)


def zero_monoid_mul(s: Signature, t: Signature) -> Signature:
    """Product in the zero monoid: any ``+`` meeting a ``-`` gives zero."""
    if s.zero or t.zero or (s.plus > 0 and t.minus > 0):
        return ZERO
    if s.plus == 0:
        rm = t.rightmost_minus if t.minus else s.rightmost_minus
        return Signature(s.minus + t.minus, t.plus, rm, t.leftmost_plus)
    return Signature(s.minus, s.plus + t.plus, s.rightmost_minus, s.leftmost_plus)


def letter_signature(base: QuasiCrystal, i, x, pos: int) -> Signature:
    eps = base.eps(i, x)
    if eps is INF:
        return ZERO
    phi = base.phi(i, x)
    return Signature(eps, phi, pos if eps else None, pos if phi else None)


def _check(base: QuasiCrystal, w: Sequence):
    for x in w:
        if x not in base:
            raise LetterError(f"{x!r} is not a letter of {base!r}")


def signature(mode: Mode, base: QuasiCrystal, i, w: Sequence) -> Signature:
    _check(base, w)
    mul = bicyclic_mul if Mode(mode) is Mode.TENSOR else zero_monoid_mul
    return reduce(mul, (letter_signature(base, i, x, p) for p, x in enumerate(w)), ONE)


def sgn_tensor(base: QuasiCrystal, i, w: Sequence) -> Signature:
    return signature(Mode.TENSOR, base, i, w)


def sgn_qtensor(base: QuasiCrystal, i, w: Sequence) -> Signature:
    return signature(Mode.QTENSOR, base, i, w)


def word_stats(mode: Mode, base: QuasiCrystal, i, w: Sequence):
    """``(eps_i(w), phi_i(w))`` in the free monoid of the given mode."""
    return signature(mode, base, i, w).stats


def word_e(mode: Mode, base: QuasiCrystal, i, w: Sequence):
    s = signature(mode, base, i, w)
    if s.zero or s.minus == 0:
        return None
    p = s.rightmost_minus
    return tuple(w[:p]) + (base.e(i, w[p]),) + tuple(w[p + 1:])


def word_f(mode: Mode, base: QuasiCrystal, i, w: Sequence):
    s = signature(mode, base, i, w)
    if s.zero or s.plus == 0:
        return None
    q = s.leftmost_plus
    return tuple(w[:q]) + (base.f(i, w[q]),) + tuple(w[q + 1:])


def word_weight(base: QuasiCrystal, w: Sequence):
    _check(base, w)
    total = list(zero_weight(base.system.rank))
    for x in w:
        for k, c in enumerate(base.wt(x)):
            total[k] += c
    return tuple(total)


def shortlex_key(base: QuasiCrystal, w: Sequence):
    return (len(w), tuple(base.position(x) for x in w))


def all_words(base: QuasiCrystal, max_len: int, min_len: int = 0) -> Iterator[Word]:
    """All words of length ``min_len..max_len`` in shortlex order."""
    layer = [()]
    for k in range(max_len + 1):
        if k >= min_len:
            yield from layer
        if k < max_len:
            layer = [w + (x,) for w in layer for x in base.elements]


def parse_word(base: QuasiCrystal, text: str) -> Word:
    """Parse a word literal such as ``"1 2 -2"``.

    Tokens are whitespace separated element names. A token that is not a
    name but whose characters all are (``"112"`` over A_3) is read letter by
    letter. The empty string is the empty word.
    """
    letters = []
    for token in text.split():
        try:
            letters.append(base.element(token))
        except LetterError:
            if len(token) > 1 and all(ch in base._by_name for ch in token):
                letters.extend(base.element(ch) for ch in token)
            else:
                raise LetterError(f"cannot read {token!r} as letters of {base!r}") from None
    return tuple(letters)


def format_word(base: QuasiCrystal, w: Iterable) -> str:
    return " ".join(base.name(x) for x in w)
