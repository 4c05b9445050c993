import pytest

from app.core.exceptions import CapacityError, DegreeMismatchError, InvalidInputError
from app.models.algebra import GroupAlgebraElement
from app.models.combinatorics import Partition, Permutation
from app.models.tableaux import StandardTableau, Tableau
from app.services.characters import dim_irrep, r_lambda
from app.services.combinatorics import all_permutations, partitions_of
from app.services.integrals import operator_of
from app.services.tableaux import (
    commutant_dimension,
    content_product,
    content_vector,
    enumerate_syt,
    good_basis,
    is_d_good,
    longest_decreasing,
    rsk,
    rsk_inverse,
    rsk_inverse_permutation,
    straighten,
    tableau_from_contents,
)
from app.services.verification import STRAIGHTEN_SAMPLES, straighten_sample

HOOK = StandardTableau(((1, 2), (3,)))


def test_enumerate_syt_of_hook():
    assert enumerate_syt(Partition((2, 1))) == [HOOK, StandardTableau(((1, 3), (2,)))]


@pytest.mark.parametrize("n", range(1, 7))
def test_syt_counts_are_dimensions(n):
    for shape in partitions_of(n):
        assert len(enumerate_syt(shape)) == dim_irrep(shape)


def test_enumerate_syt_capacity():
    with pytest.raises(CapacityError):
        enumerate_syt(Partition((11,)))


def test_rsk_of_small_permutation():
    sigma = Permutation.from_one_line((3, 1, 2))
    result = rsk(sigma)
    assert result.p == StandardTableau(((1, 2), (3,)))
    assert result.q == StandardTableau(((1, 3), (2,)))
    assert rsk_inverse_permutation(result.p, result.q) == sigma


def test_rsk_of_strange():
    result = rsk("strange")
    assert result.shape == Partition((2, 2, 1, 1, 1))
    assert result.p.to_lists() == [["a", "e"], ["g", "t"], ["n"], ["r"], ["s"]]
    assert result.shape.height == longest_decreasing("strange") == 5
    assert "".join(rsk_inverse(result.p, result.q)) == "strange"


@pytest.mark.parametrize("k", [3, 4, 5])
def test_rsk_is_a_bijection(k):
    pairs = set()
    for sigma in all_permutations(k):
        result = rsk(sigma)
        assert result.shape.height == longest_decreasing(sigma)
        assert rsk_inverse_permutation(result.p, result.q) == sigma
        pairs.add((result.p, result.q))
    assert len(pairs) == len(all_permutations(k))


def test_rsk_inverse_needs_matching_shapes():
    with pytest.raises(DegreeMismatchError):
        rsk_inverse(Tableau(((1, 2),)), StandardTableau(((1,), (2,))))


@pytest.mark.parametrize(
    "rows",
    [
        ((2, 1), (3,)),  # row decreases
        ((1, 3), (1,)),  # column not strict
        ((2, 3), (1,)),  # column decreases
        (("b", "a"), ("c",)),
    ],
)
def test_rsk_inverse_rejects_non_semistandard_insertion_tableau(rows):
    p = Tableau(rows)
    assert not p.is_semistandard()
    with pytest.raises(InvalidInputError):
        rsk_inverse(p, StandardTableau(((1, 2), (3,))))


def test_insertion_tableaux_are_semistandard():
    assert rsk("strange").p.is_semistandard()
    assert rsk("aabba").p.is_semistandard()
    assert Tableau(((1, 1, 2), (2, 3))).is_semistandard()


def test_good_permutations():
    reverse = Permutation.from_one_line((3, 2, 1))
    assert not is_d_good(reverse, 3)
    assert is_d_good(reverse, 4)
    assert reverse not in good_basis(3, 2)
    assert len(good_basis(3, 2)) == commutant_dimension(3, 2) == 5


@pytest.mark.parametrize("k, d, count", [(4, 2, 14), (5, 2, 42), (4, 3, 23), (4, 4, 24)])
def test_good_basis_counts(k, d, count):
    assert len(good_basis(k, d)) == commutant_dimension(k, d) == count


@pytest.mark.parametrize("terms", STRAIGHTEN_SAMPLES)
def test_straighten_preserves_action(terms):
    a = straighten_sample(terms)
    assert Permutation.from_one_line((3, 2, 1)) in a.support()
    straightened = straighten(a, 2)
    good = set(good_basis(3, 2))
    assert all(sigma in good for sigma in straightened.support())
    assert operator_of(straightened, 2) == operator_of(a, 2)
    assert straighten(straightened, 2) == straightened


def test_straighten_rewrites_reverse_permutation():
    # 321 = 123 - 132 - 213 + 231 + 312 on V^⊗3 with dim V = 2
    reverse = GroupAlgebraElement.of(Permutation.from_one_line((3, 2, 1)))
    straightened = straighten(reverse, 2)
    assert {sigma.one_line: c for sigma, c in straightened.terms.items()} == {
        (1, 2, 3): 1,
        (1, 3, 2): -1,
        (2, 1, 3): -1,
        (2, 3, 1): 1,
        (3, 1, 2): 1,
    }


def test_straighten_is_identity_for_large_dimension():
    a = GroupAlgebraElement.of(Permutation.from_one_line((3, 2, 1)))
    assert straighten(a, 3) == a
    with pytest.raises(InvalidInputError):
        straighten(a, 0)


def test_content_vector_roundtrip():
    assert content_vector(HOOK).values == (0, 1, -1)
    assert tableau_from_contents((0, 1, -1)) == HOOK
    for shape in partitions_of(5):
        for tableau in enumerate_syt(shape):
            assert tableau_from_contents(content_vector(tableau)) == tableau


@pytest.mark.parametrize("contents", [(0, 2), (1,), (0, -1, 1, 1)])
def test_tableau_from_contents_rejects_invalid(contents):
    with pytest.raises(InvalidInputError):
        tableau_from_contents(contents)


def test_content_product_is_r_lambda():
    assert content_product(HOOK, 3) == 24
    for tableau in enumerate_syt(Partition((3, 2))):
        assert content_product(tableau) == r_lambda(Partition((3, 2)))
        assert content_product(tableau, 4) == r_lambda(Partition((3, 2)), 4)
