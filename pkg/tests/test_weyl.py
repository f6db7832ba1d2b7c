from math import factorial

import pytest
from hypothesis import given, strategies as st

from mahonian.errors import PreconditionViolation
from mahonian.weyl import (GroupFamily, abs_last, cardinality, chunk_keys, derangements,
                           fixed_points, format_word, in_family, is_derangement,
                           is_signed_permutation, iterate, parse_word)


def test_small_families():
    assert list(iterate("s", 2)) == [(1, 2), (2, 1)]
    assert set(iterate("d", 2)) == {(1, 2), (-1, -2), (2, 1), (-2, -1)}
    assert len(list(iterate("b", 3))) == 48


@pytest.mark.parametrize("family", list(GroupFamily))
def test_cardinalities(family):
    top = 7 if family is not GroupFamily.S else 8
    for n in range(1, top + 1):
        if family is GroupFamily.S or n <= 6:
            words = list(iterate(family, n))
            assert len(words) == len(set(words)) == cardinality(family, n)
            assert all(in_family(w, family) for w in words)
            assert words == sorted(words)
        else:
            assert sum(1 for _ in iterate(family, n)) == cardinality(family, n)


def test_cardinality_formulas():
    for n in range(1, 9):
        assert cardinality("b", n) == 2 ** n * factorial(n)
        assert cardinality("d", n) == 2 ** (n - 1) * factorial(n)
        assert cardinality("delta", n) == 2 ** (n - 1) * factorial(n)
        assert cardinality("delta-less", n) == 2 ** (n - 1) * factorial(n - 1) * (n - 1)


@pytest.mark.parametrize("family", ["s", "b", "d", "delta", "delta-less"])
@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_chunks_partition_stream(family, n):
    stream = []
    for k in chunk_keys(family, n):
        chunk = list(iterate(family, n, first=k))
        assert all(w[0] == k for w in chunk)
        stream += chunk
    assert stream == list(iterate(family, n))


def test_fixed_points():
    assert fixed_points((1, 5, 3, 7, 6, 2, 9, 8, 4)) == {1, 3, 8}
    assert fixed_points((1, 2, 3)) == {1, 2, 3}
    assert fixed_points((-1, -2)) == set()


def test_derangement_counts():
    # subfactorials and the signed analogues
    assert [sum(1 for _ in derangements("s", n)) for n in range(1, 8)] == [0, 1, 2, 9, 44, 265, 1854]
    assert [sum(1 for _ in derangements("b", n)) for n in range(1, 6)] == [1, 5, 29, 233, 2329]
    assert set(derangements("d", 2)) == {(-1, -2), (2, 1), (-2, -1)}
    assert set(derangements("delta", 2)) == {(2, 1), (-2, 1)}
    assert list(derangements("d", 1)) == []


@pytest.mark.parametrize("n", range(1, 7))
def test_abs_last_is_a_bijection_from_d_to_delta(n):
    images = [abs_last(w) for w in iterate("d", n)]
    assert len(set(images)) == len(images)
    assert set(images) == set(iterate("delta", n))


def test_parse_and_format():
    assert parse_word("2 -1 3") == (2, -1, 3)
    assert parse_word("2,-1,3") == (2, -1, 3)
    assert format_word((2, -1, 3)) == "2 -1 3"
    for bad in ("1 1", "0 1", "1 -1"):
        with pytest.raises(ValueError):
            parse_word(bad)


def test_family_parse_and_membership():
    assert GroupFamily.parse("A") is GroupFamily.S
    assert GroupFamily.parse("deltaless") is GroupFamily.DeltaLess
    with pytest.raises(ValueError):
        GroupFamily.parse("e8")
    assert not in_family((1, 3), "b")
    assert not in_family((-1, 2), "d")
    assert in_family((2, 1), "delta-less") and not in_family((1, 2), "delta-less")
    assert not is_signed_permutation((1, -1))
    assert is_derangement(()) and not is_derangement((1,))


def test_iterate_rejects_bad_n():
    with pytest.raises(PreconditionViolation):
        list(iterate("s", 0))
    with pytest.raises(PreconditionViolation):
        list(iterate("b", 21))


@given(st.permutations(range(1, 7)), st.lists(st.booleans(), min_size=6, max_size=6))
def test_random_words_belong_to_b(perm, signs):
    w = tuple(-x if s else x for x, s in zip(perm, signs))
    assert in_family(w, "b")
    assert in_family(w, "d") == (sum(signs) % 2 == 0)
    assert in_family(w, "delta") == (w[-1] > 0)
