from fastapi import HTTPException, status
from app.core.exceptions import CapacityError, UnknownCheckError, WeingartenError


def http_error(e: WeingartenError) -> HTTPException:
    if isinstance(e, CapacityError):
        return HTTPException(status_code=status.HTTP_413_REQUEST_ENTITY_TOO_LARGE, detail=str(e))
    if isinstance(e, UnknownCheckError):
        return HTTPException(status_code=status.HTTP_404_NOT_FOUND, detail=str(e))
    return HTTPException(status_code=status.HTTP_400_BAD_REQUEST, detail=str(e))
