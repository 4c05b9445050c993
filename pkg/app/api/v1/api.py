from fastapi import APIRouter
from app.api.v1.endpoints import weingarten, characters, integrals, connection, tensors, tableaux, verification

api_router = APIRouter()

api_router.include_router(weingarten.router, prefix="/weingarten", tags=["weingarten"])
api_router.include_router(characters.router, prefix="/characters", tags=["characters"])
api_router.include_router(integrals.router, prefix="/integrals", tags=["integrals"])
api_router.include_router(connection.router, prefix="/connection", tags=["connection"])
api_router.include_router(tensors.router, prefix="/tensors", tags=["tensors"])
api_router.include_router(tableaux.router, prefix="/tableaux", tags=["tableaux"])
api_router.include_router(verification.router, prefix="/verification", tags=["verification"])
