from fastapi import APIRouter
from app.api.errors import http_error
from app.core.exceptions import WeingartenError
from app.schemas.schemas import IntegralRequest, ReportEnvelope
from app.services.reporting import integrate_report

router = APIRouter()

@router.post("/", response_model=ReportEnvelope)
def integrate(request: IntegralRequest):
    try:
        return integrate_report(
            request.d,
            request.u,
            request.ubar,
            symbolic=request.symbolic,
            mc=request.mc,
            samples=request.samples,
            seed=request.seed,
        )
    except WeingartenError as e:
        raise http_error(e)
