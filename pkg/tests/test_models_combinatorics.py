import pytest

from app.core.exceptions import InvalidInputError
from app.models.combinatorics import Partition, Permutation, cycle_count_of, cycle_type_of


def test_partition_parse_accepts_increasing_form():
    mu = Partition.parse("[1,1,2]")
    assert mu == Partition((2, 1, 1))
    assert str(mu) == "[2,1,1]"
    assert mu.class_label() == "c_{1,1,2}"
    assert mu.increasing_key == (1, 1, 2)


@pytest.mark.parametrize("parts", [(1, 2), (2, 0), (-1,)])
def test_partition_rejects_malformed_parts(parts):
    with pytest.raises(InvalidInputError):
        Partition(parts)


def test_partition_parse_rejects_garbage():
    with pytest.raises(InvalidInputError):
        Partition.parse("[a,b]")


def test_partition_statistics():
    mu = Partition((3, 1))
    assert mu.size == 4
    assert mu.height == 2
    assert mu.conjugate == Partition((2, 1, 1))
    assert mu.transposition_length == 2
    assert mu.sign == 1
    assert Partition((2, 1, 1)).sign == -1
    assert list(mu.boxes()) == [(1, 1), (1, 2), (1, 3), (2, 1)]
    assert mu.is_hook()
    assert not Partition((2, 2)).is_hook()


def test_permutation_parse_cycles_and_one_line():
    cycle = Permutation.parse("(1 2 3)")
    assert cycle.one_line == (2, 3, 1)
    assert Permutation.parse("2 3 1") == cycle
    assert str(cycle) == "2 3 1"
    assert cycle.cycle_notation() == "(1 2 3)"


def test_composition_is_right_to_left():
    sigma = Permutation.parse("(1 2)", 3)
    tau = Permutation.parse("(2 3)", 3)
    assert sigma * tau == Permutation.parse("(1 2 3)")
    assert tau * sigma == Permutation.parse("(1 3 2)")


def test_inverse_and_cycle_data():
    sigma = Permutation.parse("2 1 4 3")
    assert sigma.inverse == sigma
    assert sigma.cycle_type == Partition((2, 2))
    assert sigma.cycle_count == 2
    assert sigma.length == 2
    assert sigma.sign == 1
    assert sigma.cycle_notation() == "(1 2)(3 4)"
    assert Permutation.identity(3).cycle_notation() == "()"


def test_permutation_rejects_non_bijections():
    with pytest.raises(InvalidInputError):
        Permutation((0, 0))
    with pytest.raises(InvalidInputError):
        Permutation.from_cycles([(1, 4)], 3)
    with pytest.raises(InvalidInputError):
        Permutation.parse("1 2", k=3)


def test_conjugation_preserves_cycle_type():
    sigma = Permutation.parse("(1 2)(3 4 5)")
    tau = Permutation.parse("(1 5 2)", 5)
    assert sigma.conjugate_by(tau).cycle_type == sigma.cycle_type


def test_cycle_helpers_on_raw_images():
    assert cycle_count_of((1, 0, 2)) == 2
    assert cycle_type_of((1, 0, 2)) == Partition((2, 1))
