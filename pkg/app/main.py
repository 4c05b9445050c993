import logging
from fastapi import FastAPI
from starlette.responses import RedirectResponse
from app.core.config import settings
from app.api.v1.api import api_router

logging.basicConfig(level=settings.LOG_LEVEL)

app = FastAPI(title=settings.PROJECT_NAME, openapi_url=f"{settings.API_V1_STR}/openapi.json")

app.include_router(api_router, prefix=settings.API_V1_STR)

@app.get("/")
def read_root():
    return RedirectResponse(url="/docs")

@app.get("/health")
def health():
    return {"status": "ok", "project": settings.PROJECT_NAME}
