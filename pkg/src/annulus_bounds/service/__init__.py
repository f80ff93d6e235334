"""FastAPI wiring for the annulus-bounds service.

``create_app()`` builds the application; module-level ``app`` exists for
``uvicorn annulus_bounds.service:app``.  Domain errors surface as 422
responses with the exception class name, so clients can tell bad inputs from
server bugs.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse, PlainTextResponse

from ..errors import AnnulusError
from . import routes
from .schemas import (
    BoundRequest,
    BoundResponse,
    ClassifyRequest,
    ClassifyResponse,
    ScanRequest,
    ScanResponse,
    SearchRequest,
    SearchResponse,
    VerifyRequest,
    VerifyResponse,
)


def create_app() -> FastAPI:
    app = FastAPI(title="annulus-bounds", version=routes.__version__)

    @app.exception_handler(AnnulusError)
    async def domain_error(_: Request, exc: AnnulusError) -> JSONResponse:
        return JSONResponse(
            status_code=422,
            content={"error": type(exc).__name__, "detail": str(exc)},
        )

    @app.exception_handler(ValueError)
    async def value_error(_: Request, exc: ValueError) -> JSONResponse:
        return JSONResponse(
            status_code=422,
            content={"error": "ValueError", "detail": str(exc)},
        )

    @app.get("/health")
    def health() -> dict:
        return routes.health()

    @app.post("/classify", response_model=ClassifyResponse)
    def classify(req: ClassifyRequest) -> ClassifyResponse:
        return routes.classify_route(req)

    @app.post("/search", response_model=SearchResponse)
    def search(req: SearchRequest) -> SearchResponse:
        return routes.search_route(req)

    @app.post("/bound", response_model=BoundResponse)
    def bound(req: BoundRequest) -> BoundResponse:
        return routes.bound_route(req)

    @app.post("/verify", response_model=VerifyResponse)
    def verify(req: VerifyRequest) -> VerifyResponse:
        return routes.verify_route(req)

    @app.post("/scan", response_model=ScanResponse)
    def scan(req: ScanRequest) -> ScanResponse:
        return routes.scan_route(req)

    @app.post("/scan.csv", response_class=PlainTextResponse)
    def scan_as_csv(req: ScanRequest) -> str:
        return routes.scan_route(req).csv

    return app


app = create_app()
