"""Pure-Python fallback for the enumeration kernel.

Same contract as the compiled ``_kernel`` module: walk one family (or one
first-letter chunk of it), evaluate a statistic and a sign on every element
that passes the restriction, and return the signed histogram of the
statistic as a list indexed by exponent.
"""

from __future__ import annotations

from typing import Iterator

from . import stats
from .weyl import GroupFamily, Word, is_derangement, iterate

# the integer codes are shared with _kernel.pyx
FAMILIES = ("s", "b", "d", "delta", "delta-less")
STATS = ("inv-nat", "inv-spec", "des", "des-spec", "maj-nat", "maj-spec", "neg",
         "len-a", "len-b", "len-d", "fmaj", "dmaj", "maj-a")
SIGNS = ("none", "len-a", "len-b", "len-d")
RESTRICTS = ("all", "derangements", "even")
BOUNDARIES = ("none", "zero", "type-d")

_LENGTHS = {"len-a": stats.LengthType.A, "len-b": stats.LengthType.B,
            "len-d": stats.LengthType.D}


def _natural_length(family: str) -> stats.LengthType:
    if family == "s":
        return stats.LengthType.A
    if family == "d":
        return stats.LengthType.D
    return stats.LengthType.B


def members(n: int, family: int, stat: int, sign: int, restrict: int,
            boundary: int = 0, first: int = 0) -> Iterator[tuple[Word, int, int]]:
    """Yield ``(word, exponent, sign)`` for every element the histogram counts."""
    fam = FAMILIES[family]
    stat_fn = stats.statistic(STATS[stat])
    bnd = stats.Boundary.parse(BOUNDARIES[boundary])
    sign_len = _LENGTHS.get(SIGNS[sign])
    even_len = _natural_length(fam)
    for w in iterate(GroupFamily.parse(fam), n, first=first or None):
        if restrict and not is_derangement(w):
            continue
        if restrict == 2 and stats.length(w, even_len) % 2:
            continue
        s = -1 if sign_len is not None and stats.length(w, sign_len) % 2 else 1
        yield w, stat_fn(w, bnd), s


def histogram(n: int, family: int, stat: int, sign: int, restrict: int,
              boundary: int = 0, first: int = 0) -> list[int]:
    counts: dict[int, int] = {}
    for _, e, s in members(n, family, stat, sign, restrict, boundary, first):
        counts[e] = counts.get(e, 0) + s
    if not counts:
        return []
    out = [0] * (max(counts) + 1)
    for e, c in counts.items():
        out[e] += c
    return out
