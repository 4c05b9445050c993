from fastapi import APIRouter, Query
from typing import Optional
from app.api.errors import http_error
from app.core.exceptions import WeingartenError
from app.schemas.schemas import ReportEnvelope
from app.services.reporting import conjecture_report, wg_report

router = APIRouter()

@router.get("/", response_model=ReportEnvelope)
def read_weingarten(
    k: int = Query(..., ge=1),
    d: Optional[int] = Query(None, ge=1),
    symbolic: bool = False,
    scaled: bool = False,
):
    try:
        return wg_report(k, d, symbolic=symbolic, scaled=scaled)
    except WeingartenError as e:
        raise http_error(e)

@router.get("/conjecture", response_model=ReportEnvelope)
def read_conjecture(d_max: Optional[int] = Query(None, ge=2)):
    try:
        return conjecture_report(d_max)
    except WeingartenError as e:
        raise http_error(e)
