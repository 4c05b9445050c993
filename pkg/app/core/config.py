from pydantic_settings import BaseSettings
from typing import Optional

class Settings(BaseSettings):
    PROJECT_NAME: str = "Weingarten Calculus Toolkit"
    API_V1_STR: str = "/api/v1"
    LOG_LEVEL: str = "INFO"

    # Capacity bounds
    MAX_PARTITION_DEGREE: int = 20
    MAX_GROUP_DEGREE: int = 8  # S_k enumerated element by element
    MAX_BRUTE_FORCE_DEGREE: int = 6
    MAX_TABLEAU_SIZE: int = 10
    MAX_STRAIGHTEN_DEGREE: int = 8
    MAX_INTEGRAL_DEGREE: int = 8
    MAX_FORMANEK_DEGREE: int = 3

    # Monte Carlo oracle
    MC_SAMPLES: int = 100_000
    MC_SEED: int = 20240101
    MC_STREAMS: int = 4
    MC_BATCH_SIZE: int = 20_000
    MC_TOLERANCE_SIGMAS: float = 4.0

    CONJECTURE_D_MAX: int = 10

    # Redis / Celery
    REDIS_HOST: str = "localhost"
    REDIS_PORT: int = 6379
    CELERY_BROKER_URL: Optional[str] = None
    CELERY_RESULT_BACKEND: Optional[str] = None
    CELERY_TASK_ALWAYS_EAGER: bool = True

    def __init__(self, **kwargs):
        super().__init__(**kwargs)
        if not self.CELERY_BROKER_URL:
            self.CELERY_BROKER_URL = f"redis://{self.REDIS_HOST}:{self.REDIS_PORT}/0"
        if not self.CELERY_RESULT_BACKEND:
            self.CELERY_RESULT_BACKEND = f"redis://{self.REDIS_HOST}:{self.REDIS_PORT}/0"

    class Config:
        env_file = ".env"
        extra = "ignore"

settings = Settings()
