import math

import pytest
from sympy import QQ

from app.core.exceptions import DegreeMismatchError
from app.models.algebra import GroupAlgebraElement
from app.models.combinatorics import Partition, Permutation
from app.models.polynomials import D_POLY
from app.services.characters import (
    central_idempotent,
    character,
    character_table,
    content_sum,
    dim_irrep,
    orthogonality_violations,
    r_lambda,
    schur_dim,
    transposition_scalar,
)
from app.services.combinatorics import class_size, partitions_of


def test_character_table_of_s3():
    table = character_table(3)
    trivial, standard, sign = Partition((3,)), Partition((2, 1)), Partition((1, 1, 1))
    assert table.row(trivial) == {Partition((3,)): 1, Partition((2, 1)): 1, Partition((1, 1, 1)): 1}
    assert table.row(standard) == {Partition((3,)): -1, Partition((2, 1)): 0, Partition((1, 1, 1)): 2}
    assert table.row(sign) == {Partition((3,)): 1, Partition((2, 1)): -1, Partition((1, 1, 1)): 1}


def test_character_of_two_two_on_double_transpositions():
    assert character(Partition((2, 2)), Partition((2, 2))) == 2
    with pytest.raises(DegreeMismatchError):
        character(Partition((2, 1)), Partition((2,)))


@pytest.mark.parametrize("k", range(1, 8))
def test_orthogonality_and_square_dimensions(k):
    table = character_table(k)
    assert orthogonality_violations(k) == []
    assert sum(dim_irrep(shape) ** 2 for shape in table.partitions) == math.factorial(k)


@pytest.mark.parametrize("parts, dim", [((3, 2), 5), ((2, 2), 2), ((4, 1), 4), ((3, 2, 1), 16)])
def test_hook_length_formula(parts, dim):
    assert dim_irrep(Partition(parts)) == dim


def test_schur_and_content_polynomials():
    assert schur_dim(Partition((2,)), 2) == 3
    assert schur_dim(Partition((1, 1)), 2) == 1
    assert schur_dim(Partition((1, 1, 1)), 2) == 0
    assert r_lambda(Partition((2, 1)), 3) == 24
    assert r_lambda(Partition((2, 1))) == D_POLY * (D_POLY + 1) * (D_POLY - 1)


@pytest.mark.parametrize("k", range(1, 9))
def test_content_sum_closed_form(k):
    for shape in partitions_of(k):
        closed = QQ(sum(row * row - (2 * i - 1) * row for i, row in enumerate(shape.parts, start=1)), 2)
        assert content_sum(shape) == closed
        assert transposition_scalar(shape) == closed


@pytest.mark.parametrize(
    "parts, total", [((1,), 0), ((2,), 1), ((1, 1), -1), ((3, 2), 2), ((2, 2), 0), ((4, 1, 1), 3), ((3, 2, 1), 0)]
)
def test_content_sum_values(parts, total):
    assert content_sum(Partition(parts)) == total


@pytest.mark.parametrize("k", [3, 4, 5])
def test_transposition_class_acts_by_content_sum(k):
    for shape in character_table(k).partitions:
        assert transposition_scalar(shape) == content_sum(shape)


def test_central_idempotent_of_s2():
    e = central_idempotent(Partition((2,)))
    half = QQ(1, 2)
    assert e == GroupAlgebraElement(2, {Permutation.identity(2): half, Permutation.parse("2 1"): half})
    assert e * e == e


def test_central_idempotents_are_orthogonal():
    shapes = character_table(3).partitions
    total = GroupAlgebraElement.zero(3)
    for shape in shapes:
        e = central_idempotent(shape)
        assert e * e == e
        total = total + e
        for other in shapes:
            if other != shape:
                assert (e * central_idempotent(other)).is_zero()
    assert total == GroupAlgebraElement.identity(3)


def test_class_size_helper_agrees_with_characters():
    assert class_size(Partition((2, 1, 1))) * character(Partition((3, 1)), Partition((2, 1, 1))) == 6
