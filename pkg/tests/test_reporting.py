import json

import pytest

from app.core.exceptions import DegreeMismatchError, InvalidInputError
from app.schemas.schemas import Level
from app.services.reporting import (
    char_report,
    conjecture_report,
    connection_report,
    formanek_report,
    goodbasis_report,
    integrate_report,
    render_json,
    render_text,
    rsk_report,
    topcoef_report,
    verify_report,
    wg_report,
)


def test_scaled_wg_report():
    envelope = wg_report(2, 2, scaled=True)
    assert envelope.results == {"[1,1]": "4/3", "[2]": "-2/3"}
    assert envelope.ordering == ["[1,1]", "[2]"]
    assert envelope.passed


def test_symbolic_wg_report():
    envelope = wg_report(2, symbolic=True)
    assert "d - 1" in envelope.results["[1,1]"]
    assert "d" not in envelope.parameters or envelope.parameters["d"] is None


@pytest.mark.parametrize("kwargs", [{"d": None}, {"d": 2, "symbolic": True, "scaled": True}])
def test_wg_report_rejects_bad_flags(kwargs):
    with pytest.raises(InvalidInputError):
        wg_report(2, **kwargs)


def test_render_json_is_sorted_and_stable():
    envelope = wg_report(3, 3)
    text = render_json(envelope)
    assert text == render_json(wg_report(3, 3))
    payload = json.loads(text)
    assert list(payload) == sorted(payload)
    assert "timing" not in payload
    envelope.timing = 0.25
    assert json.loads(render_json(envelope))["timing"] == 0.25


def test_render_text_of_scaled_table():
    envelope = wg_report(2, 2, scaled=True)
    envelope.timing = 0.5
    text = render_text(envelope)
    assert text.startswith("2!^2 Wg(2, .) for k=2")
    assert "1/3 (+4c_{1,1} -2c_{2})" in text
    assert "time: 0.500s" in text
    assert text.rstrip().endswith("PASS")


def test_render_text_of_generic_report():
    text = render_text(char_report(3))
    assert text.startswith("char k=3 table=False")
    assert ["[2,1]", "2"] in [line.split() for line in text.splitlines()]
    assert "time:" not in text


def test_char_table_report():
    envelope = char_report(4, table=True)
    assert envelope.results["[2,2]"]["[2,2]"] == 2
    assert envelope.passed


def test_integrate_report():
    envelope = integrate_report(2, "1,1", "1,1")
    assert envelope.results == {"exact": "1/2"}
    assert envelope.passed


def test_integrate_report_with_monte_carlo():
    envelope = integrate_report(2, "1,1", "1,1", mc=True, samples=5000, seed=3)
    assert envelope.results["mc"]["samples"] == 5000
    assert envelope.parameters["seed"] == 3
    assert envelope.passed


def test_symbolic_integrate_report_checks_at_dimension():
    envelope = integrate_report(3, "1,1", "1,1", symbolic=True, mc=True, samples=5000, seed=3)
    assert envelope.results["exact"] == "1/d"
    assert envelope.passed


def test_connection_report():
    envelope = connection_report(4, ["[1,1,2]", "[1,1,2]"])
    assert envelope.results == {"[1,1,1,1]": 6, "[3,1]": 3, "[2,2]": 2}
    assert envelope.ordering == ["[1,1,1,1]", "[3,1]", "[2,2]"]
    assert envelope.passed


def test_degenerate_connection_report():
    envelope = connection_report(5, ["[1,1,1,2]", "[1,1,1,2]"], degenerate=True)
    assert envelope.results == {"[3,1,1]": 3, "[2,2,1]": 2}


def test_connection_report_rejects_wrong_degree():
    with pytest.raises(DegreeMismatchError):
        connection_report(4, ["[1,1,2]", "[2,1]"])


def test_topcoef_report():
    envelope = topcoef_report(5)
    assert envelope.results["[5]"] == 14
    assert envelope.results["catalan"]["[3,2]"] == [2, -1]
    assert envelope.passed


def test_formanek_report():
    envelope = formanek_report(2)
    assert envelope.results["determinant_constant"] == "-6"
    assert envelope.results["scalar"] == "-3"
    assert envelope.passed


def test_rsk_report():
    envelope = rsk_report(word="strange")
    assert envelope.results["shape"] == "[2,2,1,1,1]"
    assert envelope.results["height"] == 5
    assert envelope.passed
    assert rsk_report(perm="(1 3 2)").passed


@pytest.mark.parametrize("kwargs", [{}, {"word": "ab", "perm": "2 1"}])
def test_rsk_report_needs_one_source(kwargs):
    with pytest.raises(InvalidInputError):
        rsk_report(**kwargs)


def test_goodbasis_report():
    envelope = goodbasis_report(5, 2, count=True)
    assert envelope.results == {"count": 42, "commutant_dimension": 42}
    assert "permutations" in goodbasis_report(3, 2).results


def test_conjecture_report():
    envelope = conjecture_report(4)
    assert envelope.ordering == ["2", "3", "4"]
    assert envelope.passed


def test_verify_report():
    envelope = verify_report(Level.smoke, ["full-cycle", "published-tables"])
    assert envelope.ordering == ["published-tables", "full-cycle"]
    assert envelope.passed
