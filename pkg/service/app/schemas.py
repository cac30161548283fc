# service/app/schemas.py
from pydantic import BaseModel

from yclaw.certificates import Certificate


class HealthResponse(BaseModel):
    ok: bool


class GraphRequest(BaseModel):
    graph6: str


class DecompositionResponse(BaseModel):
    width: int
    bags: list[list[int]]
    certificate: Certificate


class DeltaResponse(BaseModel):
    delta: float
