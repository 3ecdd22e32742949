from itertools import permutations
from math import factorial

import pytest

from stirling_identities.errors import ResourceLimitError
from stirling_identities.exact_numbers import bell_number
from stirling_identities.oracles import (
    count_permutations_by_cycles,
    count_set_partitions,
    count_subsets,
    cycle_count,
    restricted_growth_strings,
)


def test_restricted_growth_strings_small():
    assert list(restricted_growth_strings(0)) == [()]
    assert list(restricted_growth_strings(3)) == [
        (0, 0, 0), (0, 0, 1), (0, 1, 0), (0, 1, 1), (0, 1, 2),
    ]


@pytest.mark.parametrize("n", range(8))
def test_restricted_growth_strings_are_distinct_and_canonical(n):
    seen = set()
    for rgs in restricted_growth_strings(n):
        assert rgs not in seen
        seen.add(rgs)
        for i, x in enumerate(rgs):
            assert x <= (max(rgs[:i]) + 1 if i else 0)
    assert len(seen) == bell_number(n)


def test_three_partitions_of_three_into_two_blocks():
    # {1,2|3}, {1,3|2}, {2,3|1}
    blocks = set()
    for rgs in restricted_growth_strings(3):
        if max(rgs) == 1:
            blocks.add(frozenset(frozenset(i for i, b in enumerate(rgs) if b == label) for label in (0, 1)))
    assert blocks == {
        frozenset({frozenset({0, 1}), frozenset({2})}),
        frozenset({frozenset({0, 2}), frozenset({1})}),
        frozenset({frozenset({1, 2}), frozenset({0})}),
    }


@pytest.mark.parametrize("args, expected", [((0, 0), 1), ((3, 2), 3), ((5, 5), 1), ((4, 2), 7), ((5, 3), 25)])
def test_count_set_partitions(args, expected):
    assert count_set_partitions(*args) == expected


@pytest.mark.parametrize("args, expected", [((0, 0), 1), ((3, 1), 2), ((4, 4), 1), ((4, 2), 11), ((5, 3), 35)])
def test_count_permutations_by_cycles(args, expected):
    assert count_permutations_by_cycles(*args) == expected


@pytest.mark.parametrize("args, expected", [((0, 0), 1), ((4, 2), 6), ((6, 6), 1), ((5, 7), 0)])
def test_count_subsets(args, expected):
    assert count_subsets(*args) == expected


def test_cycle_count():
    assert cycle_count(()) == 0
    assert cycle_count((0, 1, 2)) == 3
    assert cycle_count((1, 2, 0)) == 1
    assert cycle_count((1, 0, 3, 2)) == 2
    threes = [p for p in permutations(range(3)) if cycle_count(p) == 1]
    assert sorted(threes) == [(1, 2, 0), (2, 0, 1)]


@pytest.mark.parametrize("n", range(9))
def test_permutation_totals(n):
    assert sum(count_permutations_by_cycles(n, k) for k in range(n + 1)) == factorial(n)


@pytest.mark.parametrize("n", range(11))
def test_partition_totals(n):
    assert sum(count_set_partitions(n, k) for k in range(n + 1)) == bell_number(n)


@pytest.mark.parametrize("n", range(16))
def test_subset_totals(n):
    assert sum(count_subsets(n, k) for k in range(n + 1)) == 2**n


@pytest.mark.parametrize("oracle, cap", [
    (count_set_partitions, 12),
    (count_permutations_by_cycles, 9),
    (count_subsets, 20),
])
def test_caps_are_hard(oracle, cap):
    oracle(cap, 0)
    with pytest.raises(ResourceLimitError):
        oracle(cap + 1, 1)
    with pytest.raises(ValueError):
        oracle(-1, 0)
