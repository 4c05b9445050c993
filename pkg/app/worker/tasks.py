import logging
from typing import Optional, Sequence
from celery import Celery, group
from app.core.config import settings
from app.core.exceptions import UnknownCheckError
from app.schemas.schemas import CheckResult, Level
from app.services.verification import CHECKS, check_names, run_check

# Celery Setup
celery_app = Celery("weingarten_worker", broker=settings.CELERY_BROKER_URL, backend=settings.CELERY_RESULT_BACKEND)
celery_app.conf.update(
    task_always_eager=settings.CELERY_TASK_ALWAYS_EAGER,
    task_serializer="json",
    result_serializer="json",
    accept_content=["json"],
)

logger = logging.getLogger(__name__)


@celery_app.task(name="run_check_task")
def run_check_task(name: str, level: str):
    """
    Run one acceptance check; a check that raises is reported as failed
    """
    try:
        result = run_check(name, Level(level))
    except Exception as e:
        logger.error(f"Check {name} ({level}) raised: {str(e)}")
        result = CheckResult(name=name, level=Level(level), passed=False, details=[f"{type(e).__name__}: {e}"])
    return result.model_dump(mode="json")


def dispatch_checks(names: Optional[Sequence[str]], level: Level) -> list[CheckResult]:
    """Fan the checks out as a group; results come back in registry order."""
    requested = set(names) if names else set(CHECKS)
    for name in requested:
        if name not in CHECKS:
            raise UnknownCheckError(name)
    ordered = [name for name in check_names() if name in requested]
    job = group(run_check_task.s(name, Level(level).value) for name in ordered)
    if celery_app.conf.task_always_eager:
        payloads = [result.get() for result in job.apply().results]
    else:
        payloads = job.apply_async().get()
    return [CheckResult(**payload) for payload in payloads]
