"""Reduction, derangement part, Chow's relabelling map, shuffles and fibers."""

from __future__ import annotations

from collections import defaultdict
from itertools import combinations
from typing import Iterator, NamedTuple, Sequence

from .errors import DisjointnessViolation, PreconditionViolation
from .weyl import GroupFamily, Word, in_family, is_derangement, is_signed_word, iterate

__all__ = [
    "ShuffleSpec", "reduce", "derangement_part", "subcedants", "excedants",
    "psi_bar", "chow_gamma", "shuffles", "shuffles_sb", "fiber",
    "fiber_by_insertion", "fibers_by_dp",
]


class ShuffleSpec(NamedTuple):
    left: Word
    right: Word

    def check(self) -> "ShuffleSpec":
        if not is_signed_word(self.left) or not is_signed_word(self.right):
            raise PreconditionViolation("shuffle inputs must be signed words")
        if {abs(x) for x in self.left} & {abs(x) for x in self.right}:
            raise DisjointnessViolation(
                f"alphabets of {self.left} and {self.right} overlap")
        return self


def reduce(w: Sequence[int]) -> Word:
    """Relabel ``|w|`` onto ``1..m`` keeping signs and the relative order of absolute values."""
    rank = {a: i for i, a in enumerate(sorted(abs(x) for x in w), 1)}
    return tuple(rank[abs(x)] if x > 0 else -rank[abs(x)] for x in w)


def derangement_part(w: Sequence[int]) -> Word:
    """Reduction of the subword of letters that are not fixed points."""
    return reduce([x for i, x in enumerate(w, 1) if x != i])


def subcedants(w: Sequence[int]) -> list[int]:
    """Letters with ``w_i < i`` (every barred letter is one)."""
    return [x for i, x in enumerate(w, 1) if x < i]


def excedants(w: Sequence[int]) -> list[int]:
    return [x for i, x in enumerate(w, 1) if x > i]


def psi_bar(n: int, w: Sequence[int]) -> Word:
    """Chow's map for a signed permutation ``w`` of ``1..k`` with ``k <= n``.

    The i-th smallest subcedant (by absolute value) becomes ``±i``, the i-th
    smallest fixed point ``s + i`` and the i-th largest excedant ``n - i + 1``,
    where ``s`` is the number of subcedants.
    """
    k = len(w)
    if k > n:
        raise PreconditionViolation(f"psi_bar needs k <= n, got k={k}, n={n}")
    subs = sorted((abs(x), i) for i, x in enumerate(w, 1) if x < i)
    fixed = sorted(i for i, x in enumerate(w, 1) if x == i)
    excs = sorted(((x, i) for i, x in enumerate(w, 1) if x > i), reverse=True)
    out = [0] * k
    for rank, (_, pos) in enumerate(subs, 1):
        out[pos - 1] = rank if w[pos - 1] > 0 else -rank
    s = len(subs)
    for rank, pos in enumerate(fixed, 1):
        out[pos - 1] = s + rank
    for rank, (_, pos) in enumerate(excs, 1):
        out[pos - 1] = n - rank + 1
    return tuple(out)


def chow_gamma(n: int, w: Sequence[int]) -> Word:
    """The increasing word ``s+1, ..., n-e`` paired with ``psi_bar(n, w)``."""
    return tuple(range(len(subcedants(w)) + 1, n - len(excedants(w)) + 1))


def _interleave(left: Word, right: Word) -> Iterator[Word]:
    m, n = len(left), len(right)
    for slots in combinations(range(m + n), m):
        out, li, ri = [], 0, 0
        slot_set = set(slots)
        for pos in range(m + n):
            if pos in slot_set:
                out.append(left[li])
                li += 1
            else:
                out.append(right[ri])
                ri += 1
        yield tuple(out)


def shuffles(left: Sequence[int], right: Sequence[int]) -> list[Word]:
    """All ``C(m+n, n)`` interleavings of two words with disjoint alphabets."""
    spec = ShuffleSpec(tuple(left), tuple(right)).check()
    return list(_interleave(spec.left, spec.right))


def shuffles_sb(left: Sequence[int], right: Sequence[int],
                rule: str = "left") -> list[Word]:
    """Shuffles whose final letter is pinned.

    ``rule="left"`` keeps shuffles ending in the left word's last letter,
    which is the smaller final letter in every case the identities use.
    ``rule="natural-min"`` pins the smaller of the two final letters under the
    usual integer order and is only accepted for unsigned words.
    """
    spec = ShuffleSpec(tuple(left), tuple(right)).check()
    if not spec.left:
        raise PreconditionViolation("restricted shuffles need a nonempty left word")
    if rule == "left":
        last = spec.left[-1]
    elif rule == "natural-min":
        if any(x < 0 for x in spec.left + spec.right):
            raise PreconditionViolation("natural-min rule is defined for unsigned words only")
        last = min(spec.left[-1], spec.right[-1]) if spec.right else spec.left[-1]
    else:
        raise ValueError(f"unknown rule {rule!r}")
    return [a for a in _interleave(spec.left, spec.right) if a[-1] == last]


def _check_fiber_args(family: GroupFamily, n: int, sigma: Word) -> None:
    k = len(sigma)
    if family not in (GroupFamily.S, GroupFamily.B, GroupFamily.DeltaLess):
        raise PreconditionViolation(f"no fibers over family {family.value}")
    if k > n:
        raise PreconditionViolation(f"derangement of size {k} does not fit in n={n}")
    if not is_derangement(sigma) or (k and not in_family(sigma, GroupFamily.B)):
        raise PreconditionViolation(f"{sigma} is not a signed derangement")
    if family is GroupFamily.S and any(x < 0 for x in sigma):
        raise PreconditionViolation(f"{sigma} is not an unsigned derangement")
    if family is GroupFamily.DeltaLess and (k == 0 or sigma[-1] < 0):
        raise PreconditionViolation(f"{sigma} does not end in a positive letter")


def fiber(family, n: int, sigma: Sequence[int]) -> list[Word]:
    """Elements ``pi`` of the family over ``n`` letters with ``dp(pi) == sigma``.

    ``family`` is ``b`` (all of B_n), ``delta-less`` (last letter in
    ``1..n-1``) or ``s``. Computed by filtering the full enumeration.
    """
    family = GroupFamily.parse(family)
    sigma = tuple(sigma)
    _check_fiber_args(family, n, sigma)
    return [p for p in iterate(family, n) if derangement_part(p) == sigma]


def fiber_by_insertion(family, n: int, sigma: Sequence[int]) -> list[Word]:
    """Same set as :func:`fiber`, built by choosing fixed-point positions.

    Independent of the enumeration path: for every ``(n-k)``-subset of
    positions, spread ``sigma`` over the complementary values and keep the
    word when the chosen positions are exactly its fixed points.
    """
    family = GroupFamily.parse(family)
    sigma = tuple(sigma)
    _check_fiber_args(family, n, sigma)
    k = len(sigma)
    out = []
    for fixed in combinations(range(1, n + 1), n - k):
        rest = [v for v in range(1, n + 1) if v not in fixed]
        word = [0] * n
        for v in fixed:
            word[v - 1] = v
        free = [i for i in range(1, n + 1) if i not in fixed]
        for pos, x in zip(free, sigma):
            word[pos - 1] = rest[x - 1] if x > 0 else -rest[-x - 1]
        w = tuple(word)
        if all(w[i - 1] != i for i in free) and in_family(w, family):
            out.append(w)
    return sorted(out)


def fibers_by_dp(family, n: int) -> dict[Word, list[Word]]:
    """Partition a whole family by derangement part in one pass."""
    groups: dict[Word, list[Word]] = defaultdict(list)
    for p in iterate(family, n):
        groups[derangement_part(p)].append(p)
    return dict(groups)
