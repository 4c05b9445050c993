import pytest
from sympy import QQ

from app.core.exceptions import UnknownCheckError
from app.schemas.schemas import Level
from app.services.combinatorics import partitions_of
from app.services.verification import CHECKS, PUBLISHED_TABLES, check_names, run_check
from app.services.weingarten import scaled_table

EXPECTED_CHECKS = [
    "published-tables",
    "full-cycle",
    "oracle-equivalence",
    "jucys",
    "top-coefficients",
    "connection-tables",
    "young-subgroups",
    "novak-signs",
    "conjecture",
    "haar-integration",
    "wg-via-monomial",
    "formanek",
    "tableaux",
    "characters",
]


def test_registry_order():
    assert check_names() == EXPECTED_CHECKS


def test_every_check_has_all_levels():
    for check in CHECKS.values():
        assert set(check.levels) == set(Level)
        assert check.description


@pytest.mark.parametrize("d", range(2, 6))
def test_published_tables_have_one_entry_per_class(d):
    denominator, numerators = PUBLISHED_TABLES[d]
    assert len(numerators) == len(partitions_of(d))
    values = [value for _, value in scaled_table(d).entries]
    assert values == [QQ(n, denominator) for n in numerators]


@pytest.mark.parametrize("name", EXPECTED_CHECKS)
def test_smoke_level_passes(name):
    result = run_check(name, Level.smoke)
    assert result.name == name
    assert result.level == Level.smoke
    assert result.passed, result.details


def test_unknown_check():
    with pytest.raises(UnknownCheckError):
        run_check("no-such-check", Level.smoke)


@pytest.mark.slow
@pytest.mark.parametrize("name", EXPECTED_CHECKS)
def test_desk_level_passes(name):
    assert run_check(name, Level.desk).passed
