"""HTTP wiring of the analysis service."""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from ..config import ConfigError
from . import handlers
from .models import (
    AmpRequest,
    AmpResponse,
    BeatsRequest,
    BeatsResponse,
    DecayRequest,
    DecayResponse,
    GraphsRequest,
    GraphsResponse,
    IntervalRequest,
    IntervalResponse,
    ScaleRequest,
    ScaleResponse,
    TriadsRequest,
    TriadsResponse,
)


def create_app() -> FastAPI:
    app = FastAPI(title="consonoscope", description="Consonance and dissonance analysis")

    @app.exception_handler(ConfigError)
    async def config_error(request: Request, exc: ConfigError) -> JSONResponse:
        return JSONResponse(status_code=422, content={"detail": str(exc)})

    @app.exception_handler(ValueError)
    async def value_error(request: Request, exc: ValueError) -> JSONResponse:
        return JSONResponse(status_code=400, content={"detail": str(exc)})

    @app.get("/health")
    def health() -> dict:
        return {"status": "ok"}

    @app.get("/defaults")
    def defaults() -> dict:
        return handlers.defaults_payload()

    @app.post("/interval", response_model=IntervalResponse)
    def interval(req: IntervalRequest) -> IntervalResponse:
        return handlers.handle_interval(req)

    @app.post("/scale", response_model=ScaleResponse)
    def scale(req: ScaleRequest) -> ScaleResponse:
        return handlers.handle_scale(req)

    @app.post("/graphs", response_model=GraphsResponse)
    def graphs(req: GraphsRequest) -> GraphsResponse:
        return handlers.handle_graphs(req)

    @app.post("/triads", response_model=TriadsResponse)
    def triads(req: TriadsRequest) -> TriadsResponse:
        return handlers.handle_triads(req)

    @app.post("/beats", response_model=BeatsResponse)
    def beats(req: BeatsRequest) -> BeatsResponse:
        return handlers.handle_beats(req)

    @app.post("/amp", response_model=AmpResponse)
    def amp(req: AmpRequest) -> AmpResponse:
        return handlers.handle_amp(req)

    @app.post("/decay", response_model=DecayResponse)
    def decay(req: DecayRequest) -> DecayResponse:
        return handlers.handle_decay(req)

    return app
