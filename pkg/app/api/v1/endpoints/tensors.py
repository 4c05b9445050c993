from fastapi import APIRouter, Query
from app.api.errors import http_error
from app.core.exceptions import WeingartenError
from app.schemas.schemas import ReportEnvelope
from app.services.reporting import formanek_report

router = APIRouter()

@router.get("/formanek", response_model=ReportEnvelope)
def read_formanek(d: int = Query(..., ge=1)):
    try:
        return formanek_report(d)
    except WeingartenError as e:
        raise http_error(e)
