from app.core.config import settings
from app.worker.tasks import celery_app

if __name__ == "__main__":
    celery_app.start(["worker", f"--loglevel={settings.LOG_LEVEL}"])
