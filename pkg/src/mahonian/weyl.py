"""Signed permutations and exhaustive iteration over S_n, B_n, D_n and the
two index sets ``Delta_n`` (last letter positive) and ``DeltaLess_n``
(last letter in ``1..n-1``).

Words are plain tuples of nonzero ints; a negative entry is a barred letter.
Iteration is lexicographic under ``-n < ... < -1 < 1 < ... < n``.
"""

from __future__ import annotations

import enum
from math import factorial
from typing import Iterable, Iterator, Optional, Sequence

from .errors import PreconditionViolation

__all__ = [
    "GroupFamily", "Word", "MAX_N",
    "parse_word", "format_word", "is_signed_word", "is_signed_permutation",
    "in_family", "cardinality", "iterate", "chunk_keys",
    "fixed_points", "is_derangement", "derangements", "abs_last",
]

Word = tuple[int, ...]

# statistics are defined for any n; enumeration past ~8 is out of reach anyway
MAX_N = 20


class GroupFamily(enum.Enum):
    S = "s"
    B = "b"
    D = "d"
    Delta = "delta"
    DeltaLess = "delta-less"

    @classmethod
    def parse(cls, name) -> "GroupFamily":
        if isinstance(name, cls):
            return name
        key = str(name).strip().lower().replace("_", "-")
        aliases = {"a": "s", "deltaless": "delta-less", "b-full": "b"}
        key = aliases.get(key, key)
        for fam in cls:
            if fam.value == key:
                return fam
        raise ValueError(f"unknown group family {name!r}")


def parse_word(text: str) -> Word:
    """Parse one-line notation: ``"2 -1 3"``; commas are accepted as separators."""
    parts = text.replace(",", " ").split()
    word = tuple(int(p) for p in parts)
    if not is_signed_word(word):
        raise ValueError(f"{text!r} is not a signed word (zero or repeated letter)")
    return word


def format_word(word: Sequence[int]) -> str:
    return " ".join(str(x) for x in word)


def is_signed_word(word: Sequence[int]) -> bool:
    absval = [abs(x) for x in word]
    return 0 not in absval and len(set(absval)) == len(absval)


def is_signed_permutation(word: Sequence[int]) -> bool:
    return sorted(abs(x) for x in word) == list(range(1, len(word) + 1))


def in_family(word: Sequence[int], family) -> bool:
    family = GroupFamily.parse(family)
    if not is_signed_permutation(word):
        return False
    n = len(word)
    if family is GroupFamily.S:
        return all(x > 0 for x in word)
    if family is GroupFamily.B:
        return True
    if family is GroupFamily.D:
        return sum(1 for x in word if x < 0) % 2 == 0
    if family is GroupFamily.Delta:
        return n >= 1 and word[-1] > 0
    return n >= 1 and 0 < word[-1] < n


def cardinality(family, n: int) -> int:
    family = GroupFamily.parse(family)
    if n < 0:
        raise ValueError("n must be nonnegative")
    if family is GroupFamily.S:
        return factorial(n)
    if family is GroupFamily.B:
        return 2 ** n * factorial(n)
    if n == 0:
        return 1 if family is GroupFamily.D else 0
    if family in (GroupFamily.D, GroupFamily.Delta):
        return 2 ** (n - 1) * factorial(n)
    return (n - 1) * 2 ** (n - 1) * factorial(n - 1)


def _check_n(n: int) -> None:
    if not 1 <= n <= MAX_N:
        raise PreconditionViolation(f"n must lie in 1..{MAX_N}, got {n}")


def _letters(family: GroupFamily, n: int) -> list[int]:
    if family is GroupFamily.S:
        return list(range(1, n + 1))
    return list(range(-n, 0)) + list(range(1, n + 1))


def chunk_keys(family, n: int) -> list[int]:
    """First letters that can start an element, in iteration order.

    ``iterate(family, n, first=k)`` for ``k`` in this list partitions the full
    stream, and concatenating the chunks in this order reproduces it.
    """
    family = GroupFamily.parse(family)
    _check_n(n)
    keys = _letters(family, n)
    if n == 1:
        keys = [k for k in keys if in_family((k,), family)]
    return keys


def iterate(family, n: int, first: Optional[int] = None) -> Iterator[Word]:
    """Yield every element of the family once, in lexicographic order.

    With ``first`` set, only elements starting with that letter are produced.
    ``DeltaLess`` with ``n == 1`` is empty.
    """
    family = GroupFamily.parse(family)
    _check_n(n)
    letters = _letters(family, n)
    used = [False] * (n + 1)
    word = [0] * n

    def last_ok(x: int, negs: int) -> bool:
        if family is GroupFamily.D:
            return (negs + (x < 0)) % 2 == 0
        if family is GroupFamily.Delta:
            return x > 0
        if family is GroupFamily.DeltaLess:
            return 0 < x < n
        return True

    def rec(pos: int, negs: int) -> Iterator[Word]:
        if pos == n - 1:
            for x in letters:
                if not used[abs(x)] and last_ok(x, negs):
                    word[pos] = x
                    yield tuple(word)
            return
        for x in letters:
            a = abs(x)
            if used[a]:
                continue
            used[a] = True
            word[pos] = x
            yield from rec(pos + 1, negs + (x < 0))
            used[a] = False

    if first is None:
        yield from rec(0, 0)
        return
    if first not in letters:
        return
    if n == 1:
        if last_ok(first, 0):
            yield (first,)
        return
    used[abs(first)] = True
    word[0] = first
    yield from rec(1, int(first < 0))


def fixed_points(word: Sequence[int]) -> set[int]:
    """1-based positions ``i`` with ``word[i] == i`` (a barred letter is never fixed)."""
    return {i for i, x in enumerate(word, 1) if x == i}


def is_derangement(word: Sequence[int]) -> bool:
    return all(x != i for i, x in enumerate(word, 1))


def derangements(family, n: int) -> Iterator[Word]:
    return (w for w in iterate(family, n) if is_derangement(w))


def abs_last(word: Sequence[int]) -> Word:
    """``w_1 ... w_{n-1} |w_n|``; restricted to D_n this is a bijection onto Delta_n."""
    if not word:
        return tuple(word)
    return tuple(word[:-1]) + (abs(word[-1]),)


def words_from(lines: Iterable[str]) -> list[Word]:
    return [parse_word(line) for line in lines if line.strip()]
