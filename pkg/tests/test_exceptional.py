from itertools import combinations, permutations

import pytest

from simperm.errors import InvalidM
from simperm.exceptional import (
    FAMILIES,
    ExceptionalDescriptor,
    exceptional_perm,
    exceptional_types_of,
    exceptionals_of_size,
    is_exceptional,
    is_parallel_alternation,
    is_wedge_alternation,
    smaller_same_family,
)
from simperm.perm import is_simple, pattern_occurs, standardize

D = ExceptionalDescriptor


@pytest.mark.parametrize("d, expected", [
    (D(1, 5), (2, 4, 6, 8, 10, 1, 3, 5, 7, 9)),
    (D(2, 5), (9, 7, 5, 3, 1, 10, 8, 6, 4, 2)),
    (D(3, 5), (6, 1, 7, 2, 8, 3, 9, 4, 10, 5)),
    (D(4, 5), (5, 10, 4, 9, 3, 8, 2, 7, 1, 6)),
    (D(3, 3), (4, 1, 5, 2, 6, 3)),
])
def test_families(d, expected):
    assert exceptional_perm(d) == expected


def test_invalid_m():
    with pytest.raises(InvalidM):
        exceptional_perm(D(1, 1))


@pytest.mark.parametrize("m", range(2, 7))
@pytest.mark.parametrize("f", FAMILIES)
def test_simple_and_even(f, m):
    p = exceptional_perm((f, m))
    assert len(p) == 2 * m and is_simple(p)
    assert D(f, m) in exceptional_types_of(p)


def test_types_of():
    assert exceptional_types_of((2, 4, 6, 1, 3, 5)) == {D(1, 3)}
    assert exceptional_types_of((3, 1, 4, 2)) == {D(2, 2), D(3, 2)}
    assert exceptional_types_of((2, 4, 1, 3)) == {D(1, 2), D(4, 2)}
    assert exceptional_types_of((2, 4, 1, 5, 3)) == frozenset()


def test_counts_per_size():
    assert len(exceptionals_of_size(4)) == 2
    for n in range(6, 14, 2):
        assert len(exceptionals_of_size(n)) == 4
    assert exceptionals_of_size(7) == []


@pytest.mark.parametrize("m", range(3, 7))
def test_removal_closure(m):
    for f in (1, 2):
        big = exceptional_perm((f, m))
        trimmed = tuple(v for v in big if v < 2 * m - 1)
        assert trimmed == exceptional_perm((f, m - 1))
    for f in (3, 4):
        assert standardize(exceptional_perm((f, m))[:-2]) == exceptional_perm((f, m - 1))


def test_pattern_law():
    descs = [(f, m) for m in range(2, 6) for f in FAMILIES]
    for f, m in descs:
        for g, k in descs:
            if m > k:
                continue
            small, big = exceptional_perm((f, m)), exceptional_perm((g, k))
            shared = {d.family for d in exceptional_types_of(small)} & {d.family for d in exceptional_types_of(big)}
            assert pattern_occurs(small, big) == bool(shared), (small, big)


def test_smaller_same_family():
    assert smaller_same_family((2, 4, 6, 1, 3, 5)) == [(2, 4, 1, 3)]
    assert smaller_same_family((2, 4, 1, 3)) == []
    assert smaller_same_family((2, 4, 1, 5, 3)) == []


@pytest.mark.parametrize("m", range(2, 7))
@pytest.mark.parametrize("f", FAMILIES)
def test_even_size_simple_patterns(f, m):
    sigma = exceptional_perm((f, m))
    fams = {d.family for d in exceptional_types_of(sigma)}
    for s in range(4, 2 * m):
        found = {standardize([sigma[i] for i in idx]) for idx in combinations(range(2 * m), s)}
        found = {q for q in found if is_simple(q)}
        if s % 2:
            assert found == set()
        else:
            assert found == {exceptional_perm((g, s // 2)) for g in fams}


def test_alternation_examples():
    assert is_parallel_alternation((1, 3, 5, 7, 9, 11, 2, 4, 6, 8, 10))
    assert is_parallel_alternation((6, 11, 5, 10, 4, 9, 3, 8, 2, 7, 1))
    assert is_wedge_alternation((6, 5, 7, 4, 8, 3, 9, 2, 10, 1, 11))
    assert is_wedge_alternation((1, 3, 5, 7, 9, 11, 10, 8, 6, 4, 2))
    assert is_parallel_alternation((2, 4, 1, 3))
    assert not is_wedge_alternation((2, 4, 1, 3))
    assert not is_parallel_alternation((2, 4, 1, 5, 3))


@pytest.mark.parametrize("n", range(4, 9))
def test_simple_alternations_are_exceptional(n):
    for p in permutations(range(1, n + 1)):
        if is_simple(p):
            alt = is_parallel_alternation(p) or is_wedge_alternation(p)
            assert alt == is_exceptional(p), p
