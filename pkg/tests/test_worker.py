import pytest

from app.core.exceptions import UnknownCheckError
from app.schemas.schemas import Level
from app.services import verification
from app.worker.tasks import dispatch_checks, run_check_task


def test_task_returns_serialized_result():
    payload = run_check_task("full-cycle", "smoke")
    assert payload == {"name": "full-cycle", "level": "smoke", "passed": True, "details": []}


def test_task_reports_a_crashing_check_as_failed(monkeypatch):
    def boom():
        raise RuntimeError("exploded")

    monkeypatch.setitem(verification.CHECKS, "boom", verification.Check("boom", "always raises", boom, {level: {} for level in Level}))
    payload = run_check_task("boom", "smoke")
    assert payload["passed"] is False
    assert payload["details"] == ["RuntimeError: exploded"]


def test_dispatch_keeps_registry_order():
    results = dispatch_checks(["young-subgroups", "full-cycle"], Level.smoke)
    assert [result.name for result in results] == ["full-cycle", "young-subgroups"]
    assert all(result.passed for result in results)


def test_dispatch_rejects_unknown_names():
    with pytest.raises(UnknownCheckError):
        dispatch_checks(["full-cycle", "nope"], Level.smoke)
