"""Route handlers: plain functions over the schema models.

The CLI calls these directly when no server is configured, so they must stay
free of FastAPI-specific types — the app wiring in ``__init__`` adds the
HTTP layer on top.
"""

from __future__ import annotations

from .. import __version__
from ..bounds import bound_report
from ..calculus import auto_grid
from ..functions import normalized
from ..geometry import make_annulus
from ..membership import classify
from ..search import scan, scan_csv, search_lower_bound
from ..verification import rows_to_csv, run_suite
from .schemas import (
    BoundRequest,
    BoundResponse,
    ClassifyRequest,
    ClassifyResponse,
    ScanRequest,
    ScanResponse,
    ScanRowModel,
    SearchRequest,
    SearchResponse,
    VerifyRequest,
    VerifyResponse,
    VerifyRowModel,
)


def health() -> dict:
    return {"status": "ok", "version": __version__}


def classify_route(req: ClassifyRequest) -> ClassifyResponse:
    rep = classify(req.matrix.to_array(), req.R, req.tol)
    return ClassifyResponse.from_report(rep)


def search_route(req: SearchRequest) -> SearchResponse:
    annulus = make_annulus(req.R)
    res = search_lower_bound(
        req.matrix.to_array(),
        annulus,
        -req.degree,
        req.degree,
        iters=req.iters,
        restarts=req.restarts,
        seed=req.seed,
    )
    return SearchResponse.from_result(res)


def bound_route(req: BoundRequest) -> BoundResponse:
    A = req.matrix.to_array()
    annulus = make_annulus(req.R)
    grid = auto_grid(annulus, A=A)
    if req.function is not None:
        f = req.function.to_function()
        k_lower = None
    else:
        found = search_lower_bound(
            A,
            annulus,
            -req.degree,
            req.degree,
            iters=req.iters,
            restarts=req.restarts,
            seed=req.seed,
            grid=grid,
        )
        f = found.best_f
        k_lower = found.k_lower
    rep = bound_report(f, A, req.R, grid=grid)
    return BoundResponse.from_report(rep, normalized(f, annulus), k_lower=k_lower)


def verify_route(req: VerifyRequest) -> VerifyResponse:
    rows = run_suite(
        req.suite, R=req.R, dim=req.dim, samples=req.samples, seed=req.seed, tol=req.tol
    )
    return VerifyResponse(
        rows=[VerifyRowModel.from_row(r) for r in rows],
        all_pass=all(r.passed for r in rows),
        csv=rows_to_csv(rows),
    )


def scan_route(req: ScanRequest) -> ScanResponse:
    rows = scan(
        req.operator_class,
        req.dim,
        req.R_list,
        samples_per_R=req.samples_per_R,
        degree=req.degree,
        iters=req.iters,
        restarts=req.restarts,
        seed=req.seed,
    )
    return ScanResponse(rows=[ScanRowModel.from_row(r) for r in rows], csv=scan_csv(rows))
