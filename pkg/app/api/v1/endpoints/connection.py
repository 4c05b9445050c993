from fastapi import APIRouter, Query
from app.api.errors import http_error
from app.core.exceptions import WeingartenError
from app.schemas.schemas import ConnectionRequest, ReportEnvelope
from app.services.reporting import connection_report, topcoef_report

router = APIRouter()

@router.post("/", response_model=ReportEnvelope)
def multiply_classes(request: ConnectionRequest):
    try:
        return connection_report(request.k, request.classes, degenerate=request.degenerate)
    except WeingartenError as e:
        raise http_error(e)

@router.get("/top", response_model=ReportEnvelope)
def read_top_coefficients(k: int = Query(..., ge=1)):
    try:
        return topcoef_report(k)
    except WeingartenError as e:
        raise http_error(e)
