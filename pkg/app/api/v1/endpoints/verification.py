from fastapi import APIRouter, Query
from typing import List, Optional
from app.api.errors import http_error
from app.core.exceptions import WeingartenError
from app.schemas.schemas import Level, ReportEnvelope
from app.services.reporting import verify_report

router = APIRouter()

@router.get("/{level}", response_model=ReportEnvelope)
def run_checks(level: Level, name: Optional[List[str]] = Query(None)):
    try:
        return verify_report(level, name)
    except WeingartenError as e:
        raise http_error(e)
