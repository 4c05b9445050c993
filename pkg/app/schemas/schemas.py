from pydantic import BaseModel, Field
from typing import Any, Dict, List, Optional
from enum import Enum


class Level(str, Enum):
    smoke = "smoke"
    desk = "desk"
    deep = "deep"


class ReportEnvelope(BaseModel):
    command: str
    parameters: Dict[str, Any] = {}
    results: Dict[str, Any] = {}
    passed: bool = True
    ordering: Optional[List[str]] = None  # display order of the keys of results
    timing: Optional[float] = None  # seconds; only set on request


class CheckResult(BaseModel):
    name: str
    level: Level
    passed: bool
    details: List[str] = []


class MonteCarloResponse(BaseModel):
    mean: float
    stderr: float
    samples: int


class IntegralRequest(BaseModel):
    d: int = Field(..., ge=1)
    u: str = Field(..., description='Pairs "j,h" of the unbarred entries, e.g. "1,1 2,2"')
    ubar: str = Field(..., description='Pairs "i,p" of the barred entries')
    symbolic: bool = False
    mc: bool = False
    samples: Optional[int] = None
    seed: Optional[int] = None


class ConnectionRequest(BaseModel):
    k: int = Field(..., ge=1)
    classes: List[str] = Field(..., min_length=1, description='Partitions such as "[1,1,2]"')
    degenerate: bool = False


class RskRequest(BaseModel):
    word: Optional[str] = None
    perm: Optional[str] = None
