import itertools

import pytest

from app.core.exceptions import CapacityError, DegreeMismatchError, InvalidInputError
from app.models.algebra import ClassFunction, ProductMode
from app.models.combinatorics import Partition, Permutation
from app.services.combinatorics import all_permutations, partitions_of
from app.services.connection import (
    block_restriction,
    blockwise_violations,
    brute_force_class_product,
    catalan_factorization,
    class_product,
    class_product_many,
    collins_expansion,
    cycle_blocks,
    in_young_subgroup,
    length_additive_factorizations,
    multiply_class_functions,
    set_partitions,
    top_coefficients,
    top_coefficients_by_elements,
    top_coefficients_by_sequences,
    verify_collins_multiplicativity,
    young_subgroup,
)
from app.services.verification import S4_CLASS_PRODUCTS, S5_DEGENERATE_PRODUCTS, TOP_COEFFICIENTS

p = Partition.parse


def _as_strings(f: ClassFunction) -> dict[str, int]:
    return {",".join(map(str, mu.increasing_key)): int(v) for mu, v in f.values.items()}


def test_transposition_squared_in_s4():
    product = class_product(p("[1,1,2]"), p("[1,1,2]"))
    assert product.values == {p("[1,1,1,1]"): 6, p("[1,3]"): 3, p("[2,2]"): 2}


@pytest.mark.parametrize("pair", sorted(S4_CLASS_PRODUCTS))
def test_s4_products_match_table(pair):
    product = class_product(p(pair[0]), p(pair[1]))
    assert _as_strings(product) == S4_CLASS_PRODUCTS[pair]


@pytest.mark.parametrize("k", [3, 4])
def test_brute_force_agrees_with_characters(k):
    for mu1, mu2 in itertools.combinations_with_replacement(partitions_of(k), 2):
        assert brute_force_class_product(mu1, mu2) == class_product(mu1, mu2)


def test_class_products_reject_mixed_degrees():
    with pytest.raises(DegreeMismatchError):
        class_product(p("[2,1]"), p("[2]"))
    with pytest.raises(InvalidInputError):
        class_product_many([])


def test_brute_force_capacity():
    with pytest.raises(CapacityError):
        brute_force_class_product(p("[7]"), p("[7]"))


def test_class_product_many_is_associative():
    transpositions = p("[1,1,2]")
    triple = class_product_many([transpositions] * 3)
    assert triple == multiply_class_functions(class_product(transpositions, transpositions), ClassFunction(4, {transpositions: 1}))


@pytest.mark.parametrize("pair", sorted(S5_DEGENERATE_PRODUCTS))
def test_s5_degenerate_products(pair):
    product = multiply_class_functions(
        ClassFunction(5, {p(pair[0]): 1}), ClassFunction(5, {p(pair[1]): 1}), ProductMode.DEGENERATE
    )
    assert _as_strings(product) == S5_DEGENERATE_PRODUCTS[pair]


def test_collins_expansion_of_three():
    expansion = collins_expansion(3, 2)
    assert expansion[(p("[1,1,1]"), 0)] == 1
    assert expansion[(p("[2,1]"), 1)] == -1
    assert expansion[(p("[3]"), 2)] == 2
    assert expansion[(p("[1,1,1]"), 2)] == 3
    with pytest.raises(InvalidInputError):
        collins_expansion(3, 1)


def test_top_coefficients_of_four():
    values = top_coefficients(4).values
    assert values == {p("[4]"): -5, p("[3,1]"): 2, p("[2,2]"): 1, p("[2,1,1]"): -1, p("[1,1,1,1]"): 1}


@pytest.mark.parametrize("k", [2, 3, 4, 5])
def test_top_coefficient_routes_agree(k):
    expected = top_coefficients(k).values
    assert top_coefficients_by_sequences(k).values == expected
    assert top_coefficients_by_elements(k).values == expected


def test_top_coefficients_match_published_values():
    for k in (4, 5, 6):
        for mu, value in top_coefficients(k).values.items():
            key = ",".join(map(str, mu.increasing_key))
            if key in TOP_COEFFICIENTS:
                assert value == TOP_COEFFICIENTS[key]


def test_catalan_factorization():
    assert catalan_factorization(p("[3,1]")) == [2, 1]
    assert catalan_factorization(p("[4,2]")) == [-5, -1]


@pytest.mark.parametrize("k", [3, 4, 5, 6])
def test_multiplicativity(k):
    assert verify_collins_multiplicativity(k).passed


def test_length_additive_factorizations_stay_in_young_subgroup():
    sigma = Permutation.parse("(1 2)(3 4)")
    factorizations = length_additive_factorizations(sigma)
    assert len(factorizations) == 2
    blocks = cycle_blocks(sigma)
    for first, second in factorizations:
        assert first * second == sigma
        assert in_young_subgroup(first, blocks)
        assert in_young_subgroup(second, blocks)


def test_three_cycle_has_three_factorizations():
    assert len(length_additive_factorizations(Permutation.parse("(1 2 3)"))) == 3


@pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
def test_every_length_additive_factorization_stays_in_young_subgroup(k):
    for sigma in all_permutations(k):
        blocks = cycle_blocks(sigma)
        for first, second in length_additive_factorizations(sigma):
            assert first * second == sigma
            assert in_young_subgroup(first, blocks)
            assert in_young_subgroup(second, blocks)


@pytest.mark.parametrize("k, bell", [(1, 1), (2, 2), (3, 5), (4, 15), (5, 52)])
def test_set_partitions_are_counted_by_bell_numbers(k, bell):
    partitions = set_partitions(k)
    assert len(partitions) == bell
    for blocks in partitions:
        assert sorted(x for block in blocks for x in block) == list(range(k))


def test_young_subgroup_order():
    blocks = (frozenset({0, 2}), frozenset({1, 3, 4}))
    assert len(young_subgroup(blocks, 5)) == 2 * 6


def test_block_restriction_relabels_the_block():
    sigma = Permutation.parse("(1 3)(2 5 4)")
    assert block_restriction(sigma, frozenset({1, 3, 4})) == Permutation.parse("(1 3 2)")
    assert block_restriction(sigma, frozenset({0, 2})) == Permutation.parse("(1 2)")
    with pytest.raises(InvalidInputError):
        block_restriction(sigma, frozenset({0, 1}))


def test_length_and_degenerate_product_split_over_blocks_in_example():
    blocks = (frozenset({0, 1, 2}), frozenset({3, 4}))
    gamma = Permutation.parse("(1 2)(4 5)")
    tau = Permutation.parse("(2 3)", 5)
    assert (gamma * tau).length == gamma.length + tau.length
    assert blockwise_violations(blocks, 5) == []


@pytest.mark.parametrize("k", [1, 2, 3, 4, pytest.param(5, marks=pytest.mark.slow)])
def test_length_and_degenerate_product_split_over_blocks(k):
    for blocks in set_partitions(k):
        assert blockwise_violations(blocks, k) == []


def test_degenerate_class_products_are_associative_in_s4():
    classes = [ClassFunction(4, {mu: 1}) for mu in partitions_of(4)]
    for f, g, h in itertools.product(classes, repeat=3):
        left = multiply_class_functions(multiply_class_functions(f, g, ProductMode.DEGENERATE), h, ProductMode.DEGENERATE)
        right = multiply_class_functions(f, multiply_class_functions(g, h, ProductMode.DEGENERATE), ProductMode.DEGENERATE)
        assert left == right
