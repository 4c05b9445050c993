import pytest
from sympy import QQ, ImmutableMatrix

from app.core.exceptions import DegreeMismatchError, InvalidInputError
from app.models.combinatorics import Permutation
from app.models.tableaux import StandardTableau, Tableau
from app.models.tensors import (
    MatrixTuple,
    MonomialSpec,
    TensorMonomialPolynomial,
    TensorOperator,
    elementary_matrix,
)


def test_swap_operator_exchanges_factors():
    swap = TensorOperator.permutation(Permutation.parse("2 1"), 2)
    assert swap.entry((1, 0), (0, 1)) == 1
    assert swap.entry((0, 1), (0, 1)) == 0
    assert swap @ swap == TensorOperator.identity(2, 2)
    assert swap.trace() == 2


def test_elementary_operators_compose():
    left = TensorOperator.elementary(2, (0,), (1,))
    right = TensorOperator.elementary(2, (1,), (0,))
    assert left @ right == TensorOperator.elementary(2, (0,), (0,))
    assert (right @ right).entries == {}


def test_operator_validation():
    with pytest.raises(InvalidInputError):
        TensorOperator.elementary(2, (2,), (0,))
    with pytest.raises(DegreeMismatchError):
        TensorOperator.identity(2, 2) @ TensorOperator.identity(2, 1)


def test_is_scalar():
    assert TensorOperator.identity(2, 2).scale(QQ(3)).is_scalar()
    assert TensorOperator.zero(2, 2).is_scalar()
    assert not TensorOperator.elementary(2, (0, 0), (0, 0)).is_scalar()


def test_from_matrices_is_kronecker_product():
    a = ImmutableMatrix([[1, 2], [0, 1]])
    b = ImmutableMatrix([[0, 1], [1, 0]])
    op = TensorOperator.from_matrices([a, b])
    assert op.entry((0, 0), (1, 1)) == 2
    assert op.entry((0, 1), (1, 0)) == 2
    assert op.trace() == 0


def test_matrix_tuple(elementary_2, small_matrices):
    assert elementary_2.elementary_pairs() == [(0, 0), (0, 1), (1, 0), (1, 1)]
    assert small_matrices.elementary_pairs() is None
    assert elementary_2.replace(0, 2 * elementary_matrix(2, 0, 0)).elementary_pairs() is None
    with pytest.raises(DegreeMismatchError):
        MatrixTuple(2, (ImmutableMatrix([[1]]),))


def test_monomial_spec_parsing():
    spec = MonomialSpec.parse(2, "1,1 2,2", "1,2 2,1")
    assert spec.j == (1, 2)
    assert spec.h == (1, 2)
    assert spec.i == (1, 2)
    assert spec.p == (2, 1)
    assert str(spec) == "u11u22ū12ū21"
    assert spec.relabel(Permutation.parse("2 1")).u == ((2, 2), (1, 1))


@pytest.mark.parametrize("d, u, ubar", [(2, "1,3", "1,1"), (0, "", ""), (2, "1", "1,1"), (2, "a,1", "1,1")])
def test_monomial_spec_rejects_bad_input(d, u, ubar):
    with pytest.raises(InvalidInputError):
        MonomialSpec.parse(d, u, ubar)


def test_tensor_polynomial_collects_terms():
    x1x2 = TensorMonomialPolynomial.monomial(2, [(1, 2)])
    doubled = x1x2 + x1x2
    assert doubled.terms == ((2, ((1, 2),)),)
    assert (x1x2 + x1x2.scale(-1)).is_zero()
    assert x1x2.is_multilinear_in([1, 2])
    assert not TensorMonomialPolynomial.monomial(2, [(1, 1)]).is_multilinear_in([1])
    with pytest.raises(InvalidInputError):
        TensorMonomialPolynomial.monomial(1, [(2,)])


def test_tableau_shapes():
    tableau = StandardTableau(((1, 2), (3,)))
    assert tableau.shape.parts == (2, 1)
    assert tableau.position(3) == (2, 1)
    assert tableau.restrict(2) == StandardTableau.single_row(2)
    assert tableau.restrict(0).size == 0
    with pytest.raises(InvalidInputError):
        StandardTableau(((2, 1),))
    with pytest.raises(InvalidInputError):
        Tableau((("a",), ("b", "c")))
