import logging

import pytest
from sympy import QQ

from app.core.exceptions import InvalidInputError
from app.models.algebra import GroupAlgebraElement
from app.models.combinatorics import Partition, Permutation
from app.models.polynomials import D
from app.services.weingarten import (
    _wg_characters,
    catalan,
    conjecture_scan,
    jucys_elementary_check,
    jucys_factorization_check,
    jucys_series_matches,
    novak_sign_check,
    p_element,
    pole_profile,
    scaled_table,
    wg_characters,
    wg_dominance_violations,
    wg_full_cycle,
    wg_inequality_check,
    wg_oracle_linear,
)

IDENTITY_2 = Partition((1, 1))
SWAP_2 = Partition((2,))


def test_single_factor_is_one_over_d():
    assert wg_characters(1, 5).value(Partition((1,))) == QQ(1, 5)


def test_two_factor_values():
    wg = wg_characters(2, 2)
    assert wg.value(IDENTITY_2) == QQ(1, 3)
    assert wg.value(SWAP_2) == QQ(-1, 6)
    assert wg.faithful


def test_symbolic_values_and_evaluation():
    wg = wg_characters(2)
    assert wg.symbolic
    assert wg.value(IDENTITY_2) == 1 / (D * D - 1)
    assert wg.value(SWAP_2) == -1 / (D * (D * D - 1))
    assert wg.at(4).value(IDENTITY_2) == QQ(1, 15)
    with pytest.raises(InvalidInputError):
        wg.at(4).at(5)


def test_small_dimension_uses_restricted_sum(caplog):
    _wg_characters.cache_clear()
    with caplog.at_level(logging.WARNING):
        wg = wg_characters(2, 1)
    assert not wg.faithful
    assert wg.value(IDENTITY_2) == QQ(1, 4)
    assert wg.value(SWAP_2) == QQ(1, 4)
    assert "kernel" in caplog.text


def test_dimension_must_be_positive():
    with pytest.raises(InvalidInputError):
        wg_characters(2, 0)


@pytest.mark.parametrize("k, d", [(2, 2), (3, 3), (3, 5), (4, 4), (5, 6)])
def test_linear_oracle_agrees_with_characters(k, d):
    assert wg_oracle_linear(k, d).values == wg_characters(k, d).values


def test_linear_oracle_needs_large_dimension():
    with pytest.raises(InvalidInputError):
        wg_oracle_linear(3, 2)


@pytest.mark.parametrize("k", range(1, 6))
def test_full_cycle_closed_form(k):
    assert wg_full_cycle(k) == wg_characters(k).value(Partition((k,)))


def test_catalan_numbers():
    assert [catalan(i) for i in range(6)] == [1, 1, 2, 5, 14, 42]


def test_p_element():
    assert p_element(2, 3).values == {SWAP_2: 3, IDENTITY_2: 9}


@pytest.mark.parametrize("k", [2, 3, 4])
def test_jucys_identities(k):
    assert jucys_factorization_check(k)
    assert jucys_factorization_check(k, 2)
    assert jucys_elementary_check(k)


@pytest.mark.parametrize("k, order", [(2, 4), (3, 3)])
def test_jucys_series_is_expansion_at_infinity(k, order):
    assert jucys_series_matches(k, order)


@pytest.mark.parametrize("k, d", [(2, 2), (3, 3), (4, 4), (4, 6), (5, 5)])
def test_sign_rule(k, d):
    assert novak_sign_check(k, d) == []


def test_sign_rule_needs_large_dimension():
    with pytest.raises(InvalidInputError):
        novak_sign_check(3, 2)


def test_inequality_value():
    identity = GroupAlgebraElement.identity(2)
    swap = GroupAlgebraElement.of(Permutation.parse("2 1"))
    assert wg_inequality_check(2, 2, identity - swap) == 1
    with pytest.raises(InvalidInputError):
        wg_inequality_check(2, 2, GroupAlgebraElement.zero(2))
    with pytest.raises(InvalidInputError):
        wg_inequality_check(3, 2, GroupAlgebraElement.identity(3))


@pytest.mark.parametrize("k, d", [(3, 3), (4, 4), (4, 5)])
def test_identity_dominates(k, d):
    assert wg_dominance_violations(k, d) == []


def test_pole_profile_of_two():
    profile = pole_profile(2)
    assert profile.orders == {-1: 1, 0: 1, 1: 1}
    assert profile.violations == []


@pytest.mark.parametrize("k", [3, 4])
def test_pole_profile_bound(k):
    assert pole_profile(k).violations == []


def test_scaled_table_of_two():
    table = scaled_table(2)
    assert table.denominator == 3
    assert table.numerators == [4, -2]
    assert [mu for mu, _ in table.entries] == [IDENTITY_2, SWAP_2]


def test_conjecture_scan_small():
    report = conjecture_scan(5)
    assert [row.d for row in report.rows] == [2, 3, 4, 5]
    assert report.passed


@pytest.mark.slow
def test_scaled_table_of_eight():
    table = scaled_table(8)
    assert table.denominator == 19305
    assert table.numerators[0] == 3245092
