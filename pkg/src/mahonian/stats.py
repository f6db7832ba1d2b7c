"""Permutation statistics on signed words.

Every statistic is a pure function of the word plus two knobs: the total
order used to compare letters and the boundary convention for position 0.

>>> inv((5, 3, 1, 2, 4)), maj((5, 3, 1, 2, 4))
(6, 3)
>>> fmaj((-3, 1, -6, 2, -4, -5)), dmaj((-3, 1, -6, 2, -4, -5))
(16, 15)
"""

from __future__ import annotations

import enum
from typing import Callable, Sequence

from .errors import PreconditionViolation, TypeMismatch

__all__ = [
    "LetterOrder", "Boundary", "LengthType",
    "inv", "des_set", "des", "maj", "neg", "neg_sum", "length",
    "fmaj", "dmaj", "maj_a", "STATISTICS", "statistic",
]


class LetterOrder(enum.Enum):
    NATURAL = "natural"   # -n < ... < -1 < 0 < 1 < ... < n
    SPECIAL = "special"   # -1 < -2 < ... < -n < 0 < 1 < ... < n


class Boundary(enum.Enum):
    NONE = "none"
    ZERO_PREFIX = "zero"   # w_0 = 0
    TYPE_D = "type-d"      # w_0 = -w_2

    @classmethod
    def parse(cls, name) -> "Boundary":
        if isinstance(name, cls):
            return name
        key = str(name).lower()
        for b in cls:
            if b.value == key or b.name.lower() == key.replace("-", "_"):
                return b
        raise ValueError(f"unknown boundary {name!r}")


class LengthType(enum.Enum):
    A = "A"
    B = "B"
    D = "D"


_OFFSET = 1 << 40


def _special_key(x: int) -> int:
    return x if x >= 0 else -_OFFSET - x


def _key(order: LetterOrder) -> Callable[[int], int]:
    if order is LetterOrder.NATURAL:
        return int
    return _special_key


def inv(w: Sequence[int], order: LetterOrder = LetterOrder.NATURAL) -> int:
    """Number of pairs ``i < j`` with ``w_i > w_j`` in ``order``."""
    k = [_key(order)(x) for x in w]
    n = len(k)
    return sum(1 for i in range(n) for j in range(i + 1, n) if k[i] > k[j])


def des_set(w: Sequence[int], order: LetterOrder = LetterOrder.NATURAL,
            boundary: Boundary = Boundary.NONE) -> set[int]:
    key = _key(order)
    k = [key(x) for x in w]
    out = {i for i in range(1, len(k)) if k[i - 1] > k[i]}
    if boundary is Boundary.ZERO_PREFIX:
        if k and key(0) > k[0]:
            out.add(0)
    elif boundary is Boundary.TYPE_D:
        if len(w) < 2:
            raise PreconditionViolation("type D boundary needs a word of length >= 2")
        if key(-w[1]) > k[0]:
            out.add(0)
    return out


def des(w: Sequence[int], order: LetterOrder = LetterOrder.NATURAL,
        boundary: Boundary = Boundary.NONE) -> int:
    return len(des_set(w, order, boundary))


def maj(w: Sequence[int], order: LetterOrder = LetterOrder.NATURAL,
        boundary: Boundary = Boundary.NONE) -> int:
    # position 0 adds nothing to the sum, so the boundary is irrelevant here
    key = _key(order)
    return sum(i for i in range(1, len(w)) if key(w[i - 1]) > key(w[i]))


def neg(w: Sequence[int]) -> int:
    return sum(1 for x in w if x < 0)


def neg_sum(w: Sequence[int]) -> int:
    """Sum of the negative letters (a nonpositive number)."""
    return sum(x for x in w if x < 0)


def length(w: Sequence[int], kind) -> int:
    """Coxeter length in type A, B or D, from inversions and negative letters."""
    kind = LengthType(kind) if not isinstance(kind, LengthType) else kind
    if kind is LengthType.A:
        if any(x < 0 for x in w):
            raise TypeMismatch("type A length requested for a word with barred letters")
        return inv(w)
    lb = inv(w) - neg_sum(w)
    if kind is LengthType.B:
        return lb
    return lb - neg(w)


def fmaj(w: Sequence[int]) -> int:
    """Flag major index: twice the special-order major index plus ``neg``."""
    return 2 * maj(w, LetterOrder.SPECIAL) + neg(w)


def dmaj(w: Sequence[int]) -> int:
    """``fmaj`` of the word with its last letter made positive."""
    if not w:
        return 0
    return fmaj(tuple(w[:-1]) + (abs(w[-1]),))


def maj_a(w: Sequence[int]) -> int:
    return maj(w, LetterOrder.NATURAL)


def _des(order):
    return lambda w, boundary=Boundary.NONE: des(w, order, boundary)


# CLI names; each entry accepts (word, boundary)
STATISTICS: dict[str, Callable] = {
    "inv-nat": lambda w, boundary=Boundary.NONE: inv(w),
    "inv-spec": lambda w, boundary=Boundary.NONE: inv(w, LetterOrder.SPECIAL),
    "des": _des(LetterOrder.NATURAL),
    "des-spec": _des(LetterOrder.SPECIAL),
    "maj-nat": lambda w, boundary=Boundary.NONE: maj(w),
    "maj-spec": lambda w, boundary=Boundary.NONE: maj(w, LetterOrder.SPECIAL),
    "neg": lambda w, boundary=Boundary.NONE: neg(w),
    "len-a": lambda w, boundary=Boundary.NONE: length(w, LengthType.A),
    "len-b": lambda w, boundary=Boundary.NONE: length(w, LengthType.B),
    "len-d": lambda w, boundary=Boundary.NONE: length(w, LengthType.D),
    "fmaj": lambda w, boundary=Boundary.NONE: fmaj(w),
    "dmaj": lambda w, boundary=Boundary.NONE: dmaj(w),
    "maj-a": lambda w, boundary=Boundary.NONE: maj_a(w),
}


def statistic(name: str) -> Callable:
    try:
        return STATISTICS[name]
    except KeyError:
        raise ValueError(f"unknown statistic {name!r}; "
                         f"choose from {', '.join(STATISTICS)}") from None
