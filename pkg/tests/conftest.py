import pytest
from fastapi.testclient import TestClient

from app.core.config import settings
from app.main import app
from app.models.tensors import MatrixTuple


@pytest.fixture(autouse=True)
def eager_celery(monkeypatch):
    from app.worker.tasks import celery_app

    monkeypatch.setattr(settings, "CELERY_TASK_ALWAYS_EAGER", True)
    celery_app.conf.task_always_eager = True
    yield


@pytest.fixture
def client():
    with TestClient(app) as test_client:
        yield test_client


@pytest.fixture
def elementary_2() -> MatrixTuple:
    """(e_11, e_12, e_21, e_22)."""
    return MatrixTuple.elementary_basis(2)


@pytest.fixture
def small_matrices() -> MatrixTuple:
    return MatrixTuple(2, [[[1, 2], [0, 1]], [[0, 1], [1, 0]], [[2, 0], [1, 3]]])
