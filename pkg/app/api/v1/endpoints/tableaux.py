from fastapi import APIRouter, Query
from app.api.errors import http_error
from app.core.exceptions import WeingartenError
from app.schemas.schemas import ReportEnvelope, RskRequest
from app.services.reporting import goodbasis_report, rsk_report

router = APIRouter()

@router.post("/rsk", response_model=ReportEnvelope)
def insert(request: RskRequest):
    try:
        return rsk_report(word=request.word, perm=request.perm)
    except WeingartenError as e:
        raise http_error(e)

@router.get("/goodbasis", response_model=ReportEnvelope)
def read_good_basis(k: int = Query(..., ge=1), d: int = Query(..., ge=1), count: bool = False):
    try:
        return goodbasis_report(k, d, count=count)
    except WeingartenError as e:
        raise http_error(e)
