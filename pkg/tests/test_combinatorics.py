import itertools
import math

import pytest

from app.core.exceptions import CapacityError, InvalidInputError, NonCentralError
from app.models.algebra import ClassFunction, GroupAlgebraElement
from app.models.combinatorics import Partition, Permutation
from app.services.combinatorics import (
    all_permutations,
    class_collect,
    class_expand,
    class_representative,
    class_size,
    class_sum,
    conjugacy_classes,
    hooks_and_contents,
    display_order,
    partitions_of,
)


def test_partitions_of_four():
    assert [p.parts for p in partitions_of(4)] == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert partitions_of(0) == [Partition(())]


@pytest.mark.parametrize("k, count", [(5, 7), (8, 22), (10, 42), (20, 627)])
def test_partition_counts(k, count):
    assert len(partitions_of(k)) == count


def test_partitions_of_rejects_bad_degree():
    with pytest.raises(InvalidInputError):
        partitions_of(-1)
    with pytest.raises(CapacityError):
        partitions_of(21)


def test_display_order_matches_published_rows():
    ordered = display_order(partitions_of(4))
    assert [p.class_label() for p in ordered] == ["c_{1,1,1,1}", "c_{1,1,2}", "c_{1,3}", "c_{2,2}", "c_{4}"]


def test_hooks_and_contents():
    boxes = hooks_and_contents(Partition((2, 1)))
    assert [(b.row, b.col, b.hook, b.content) for b in boxes] == [(1, 1, 3, 0), (1, 2, 1, 1), (2, 1, 1, -1)]


@pytest.mark.parametrize("parts, size", [((2, 1, 1), 6), ((2, 2), 3), ((3, 1), 8), ((4,), 6), ((1, 1, 1, 1), 1)])
def test_class_sizes(parts, size):
    assert class_size(Partition(parts)) == size
    assert len(conjugacy_classes(4)[Partition(parts)]) == size


def test_class_representative_has_requested_type():
    mu = Partition((3, 2, 1))
    assert class_representative(mu).cycle_type == mu


def test_class_expand_and_collect_are_inverse():
    f = ClassFunction(3, {Partition((3,)): 2, Partition((1, 1, 1)): -1})
    assert class_collect(class_expand(f)) == f
    assert len(class_sum(Partition((2, 1))).terms) == 3


def test_class_collect_rejects_non_central_elements():
    with pytest.raises(NonCentralError):
        class_collect(GroupAlgebraElement.of(Permutation.transposition(1, 2, 3)))


@pytest.mark.parametrize("k", range(1, 11))
def test_class_sizes_sum_to_group_order(k):
    assert sum(class_size(mu) for mu in partitions_of(k)) == math.factorial(k)


@pytest.mark.parametrize("k", [1, 2, 3, 4, 5, pytest.param(6, marks=pytest.mark.slow)])
def test_length_is_subadditive(k):
    perms = all_permutations(k)
    for sigma, tau in itertools.product(perms, repeat=2):
        assert (sigma * tau).length <= sigma.length + tau.length


@pytest.mark.parametrize("k", range(2, 7))
def test_transposition_changes_length_by_one(k):
    pairs = list(itertools.combinations(range(k), 2))
    for sigma in all_permutations(k):
        cycle_of = {x: index for index, cycle in enumerate(sigma.cycles) for x in cycle}
        for a, b in pairs:
            tau = Permutation.transposition(a + 1, b + 1, k)
            expected = sigma.length - 1 if cycle_of[a] == cycle_of[b] else sigma.length + 1
            assert (sigma * tau).length == expected
