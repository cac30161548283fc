# service/app/main.py
import logging

from fastapi import FastAPI, HTTPException

from service.app.schemas import DecompositionResponse, DeltaResponse, GraphRequest, HealthResponse
from yclaw.enumerator import solve_delta
from yclaw.formats import GraphFormatError, parse_graph6
from yclaw.graph import DisconnectedGraphError, Graph
from yclaw.pathdecomp import NotYFreeError, decompose_graph
from yclaw.recognizer import ComponentResult, recognize_components

logger = logging.getLogger(__name__)

app = FastAPI(title="Y-free Graph API")


def _graph(req: GraphRequest) -> Graph:
    try:
        return parse_graph6(req.graph6.strip())
    except GraphFormatError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from None


@app.get("/health", response_model=HealthResponse)
def health() -> HealthResponse:
    return HealthResponse(ok=True)


@app.post("/check", response_model=list[ComponentResult], response_model_exclude_none=True)
def check(req: GraphRequest) -> list[ComponentResult]:
    g = _graph(req)
    results = recognize_components(g)
    logger.info("check n=%d components=%d", g.n, len(results))
    return results


@app.post("/pathdecomp", response_model=DecompositionResponse)
def pathdecomp(req: GraphRequest) -> DecompositionResponse:
    g = _graph(req)
    try:
        cert, pd = decompose_graph(g)
    except (NotYFreeError, DisconnectedGraphError) as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from None
    return DecompositionResponse(width=pd.width, bags=pd.bags, certificate=cert)


@app.get("/delta", response_model=DeltaResponse)
def delta() -> DeltaResponse:
    return DeltaResponse(delta=solve_delta())
