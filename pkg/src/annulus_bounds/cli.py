"""Command line client for the annulus-bounds service.

Every data command builds the same request models the HTTP API uses and
dispatches them either in-process (default — no server required, fully
deterministic) or to a running service via ``--server URL``.  Exit codes:
0 success, 1 verification failure, 2 usage/input/transport errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from pydantic import ValidationError

from .errors import AnnulusError
from .membership import sample_numerical, sample_quantum
from .service import routes
from .service.schemas import (
    BoundRequest,
    ClassifyRequest,
    FunctionPayload,
    MatrixPayload,
    ScanRequest,
    SearchRequest,
    VerifyRequest,
)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


class CliError(Exception):
    """User-facing failure; ``code`` becomes the process exit status."""

    def __init__(self, message: str, code: int = EXIT_USAGE):
        super().__init__(message)
        self.code = code


_LOCAL_ROUTES = {
    "/classify": routes.classify_route,
    "/search": routes.search_route,
    "/bound": routes.bound_route,
    "/verify": routes.verify_route,
    "/scan": routes.scan_route,
}


def _dispatch(args: argparse.Namespace, path: str, request, response_cls):
    """Send one request in-process or over HTTP, returning the response model."""
    server = getattr(args, "server", None)
    if not server:
        return _LOCAL_ROUTES[path](request)
    import httpx

    try:
        reply = httpx.post(
            server.rstrip("/") + path,
            content=request.model_dump_json(by_alias=True),
            headers={"content-type": "application/json"},
            timeout=600.0,
        )
    except httpx.HTTPError as exc:
        raise CliError(f"could not reach {server}: {exc}") from exc
    if reply.status_code != 200:
        raise CliError(f"server returned {reply.status_code}: {reply.text[:300]}")
    return response_cls.model_validate_json(reply.text)


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _load_matrix(args: argparse.Namespace) -> MatrixPayload:
    """Matrix from --matrix JSON, or sampled from --dim/--class."""
    if args.matrix:
        with open(args.matrix) as fh:
            data = json.load(fh)
        return MatrixPayload.model_validate(data)
    if args.dim is None:
        raise CliError("provide either --matrix FILE or --dim N with --class")
    cls = getattr(args, "operator_class", "auto")
    if cls == "auto":
        raise CliError("sampling needs a concrete --class (quantum or numerical)")
    margin = args.margin if args.margin is not None else min(0.1, (args.R - 1.0) / 2.0)
    if cls == "quantum":
        A = sample_quantum(args.dim, args.R, margin, seed=args.seed)
    else:
        A = sample_numerical(args.dim, args.R, margin, seed=args.seed)
    return MatrixPayload.from_array(A)


def _load_function(path: str | None) -> FunctionPayload | None:
    if path is None:
        return None
    with open(path) as fh:
        data = json.load(fh)
    return FunctionPayload(triples=data)


def _radius_list(text: str) -> list[float]:
    try:
        return [float(tok) for tok in text.split(",") if tok.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad radius list {text!r}") from exc


def _add_matrix_source(p: argparse.ArgumentParser) -> None:
    p.add_argument("--matrix", help="path to a matrix JSON file ({dim, rows})")
    p.add_argument("--dim", type=int, help="sample a random member of this size instead")
    p.add_argument(
        "--class",
        dest="operator_class",
        choices=("quantum", "numerical", "auto"),
        default="auto",
        help="operator class for sampling (auto = not sampling)",
    )
    p.add_argument("--margin", type=float, help="sampler margin (default min(0.1, (R-1)/2))")


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--server", help="base URL of a running service (default: in-process)")
    p.add_argument("--out-path", help="write output here instead of stdout")
    p.add_argument("--seed", type=int, default=0, help="random seed")


def cmd_classify(args: argparse.Namespace) -> int:
    req = ClassifyRequest(matrix=_load_matrix(args), R=args.R, tol=args.tol)
    resp = _dispatch(args, "/classify", req, routes.ClassifyResponse)
    _emit(resp.model_dump_json(indent=2), args.out_path)
    return EXIT_OK


def cmd_search(args: argparse.Namespace) -> int:
    req = SearchRequest(
        matrix=_load_matrix(args),
        R=args.R,
        degree=args.degree,
        iters=args.iters,
        restarts=args.restarts,
        seed=args.seed,
    )
    resp = _dispatch(args, "/search", req, routes.SearchResponse)
    _emit(resp.model_dump_json(indent=2), args.out_path)
    return EXIT_OK


def cmd_bound(args: argparse.Namespace) -> int:
    req = BoundRequest(
        matrix=_load_matrix(args),
        R=args.R,
        function=_load_function(args.function),
        degree=args.degree,
        iters=args.iters,
        restarts=args.restarts,
        seed=args.seed,
    )
    resp = _dispatch(args, "/bound", req, routes.BoundResponse)
    _emit(resp.model_dump_json(indent=2), args.out_path)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    req = VerifyRequest(
        suite=args.suite,
        R=args.R,
        dim=args.dim,
        samples=args.samples,
        seed=args.seed,
        tol=args.tol,
    )
    resp = _dispatch(args, "/verify", req, routes.VerifyResponse)
    _emit(resp.csv, args.out_path)
    return EXIT_OK if resp.all_pass else EXIT_FAIL


def cmd_scan(args: argparse.Namespace) -> int:
    req = ScanRequest.model_validate(
        {
            "class": args.operator_class,
            "dim": args.dim,
            "R_list": args.R_list,
            "samples_per_R": args.samples,
            "degree": args.degree,
            "iters": args.iters,
            "restarts": args.restarts,
            "seed": args.seed,
        }
    )
    resp = _dispatch(args, "/scan", req, routes.ScanResponse)
    _emit(resp.csv, args.out_path)
    return EXIT_OK


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(), host=args.host, port=args.port)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="annulus-bounds",
        description="Spectral-set bounds on the annulus 1/R < |z| < R",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="class membership of a matrix")
    p.add_argument("--R", type=float, required=True, help="outer radius (> 1)")
    p.add_argument("--tol", type=float, default=1e-12, help="numerical radius tolerance")
    _add_matrix_source(p)
    _add_common(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("search", help="lower-bound witness search")
    p.add_argument("--R", type=float, required=True)
    p.add_argument("--degree", type=int, default=2, help="exponent window [-degree, degree]")
    p.add_argument("--iters", type=int, default=400)
    p.add_argument("--restarts", type=int, default=8)
    _add_matrix_source(p)
    _add_common(p)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("bound", help="K upper-bound report (searches if no --function)")
    p.add_argument("--R", type=float, required=True)
    p.add_argument("--function", help="path to a [k, re, im] triples JSON file")
    p.add_argument("--degree", type=int, default=2)
    p.add_argument("--iters", type=int, default=400)
    p.add_argument("--restarts", type=int, default=8)
    _add_matrix_source(p)
    _add_common(p)
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("verify", help="run a self-verification suite (CSV output)")
    p.add_argument("--suite", choices=("kernels", "lemma", "sbound", "all"), default="all")
    p.add_argument("--R", type=float, default=2.0)
    p.add_argument("--dim", type=int, default=6)
    p.add_argument("--samples", type=int, default=20)
    p.add_argument("--tol", type=float, default=1e-6)
    _add_common(p)
    p.set_defaults(func=cmd_verify, seed=7)

    p = sub.add_parser("scan", help="ensemble scan over radii (CSV output)")
    p.add_argument("--class", dest="operator_class", choices=("quantum", "numerical"), required=True)
    p.add_argument("--dim", type=int, default=4)
    p.add_argument("--R-list", dest="R_list", type=_radius_list, required=True,
                   help="comma separated outer radii, e.g. 1.2,2,5")
    p.add_argument("--samples", type=int, default=3, help="samples per radius")
    p.add_argument("--degree", type=int, default=2)
    p.add_argument("--iters", type=int, default=400)
    p.add_argument("--restarts", type=int, default=8)
    _add_common(p)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except ValidationError as exc:
        first = exc.errors()[0]
        loc = ".".join(str(p) for p in first.get("loc", ()))
        print(f"error: invalid input ({loc}: {first.get('msg')})", file=sys.stderr)
        return EXIT_USAGE
    except AnnulusError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (OSError, json.JSONDecodeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
