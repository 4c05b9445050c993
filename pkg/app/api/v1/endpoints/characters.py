from fastapi import APIRouter, Query
from app.api.errors import http_error
from app.core.exceptions import WeingartenError
from app.schemas.schemas import ReportEnvelope
from app.services.reporting import char_report

router = APIRouter()

@router.get("/", response_model=ReportEnvelope)
def read_characters(k: int = Query(..., ge=1), table: bool = False):
    try:
        return char_report(k, table=table)
    except WeingartenError as e:
        raise http_error(e)
