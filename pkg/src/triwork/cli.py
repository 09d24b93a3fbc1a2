"""Command-line client for the verification service.

The CLI is a thin HTTP client: by default it dispatches requests to an
in-process instance of the service (through the full routing/validation
stack), and with --server it talks to a remote one.  Reports are
written as canonical JSON, byte-identical across runs for identical
inputs.

Exit codes: 0 success, 1 mathematical assertion failed, 2 numerical
certification failed, 3 malformed input or transport error.
"""
from __future__ import annotations

import argparse
import json
import sys

from .pipeline import EXIT_INPUT
from .serialize import dumps_canonical

VERIFY_ROUTES = {
    "params": "/verify/params",
    "diagram-h1": "/verify/diagram-h1",
    "bridge": "/verify/bridge",
    "cover": "/verify/cover",
    "geometry": "/verify/geometry",
    "cusp": "/verify/cusp",
    "psh": "/verify/psh",
    "reconstruct": "/verify/reconstruct",
}

#: subcommands that run with built-in defaults when no input file is given
OPTIONAL_INPUT = {"cusp", "psh", "geometry"}


def default_payload(subcommand: str, args) -> dict:
    if subcommand == "cusp":
        return {}
    if subcommand == "psh":
        return {"n_lines": 100, "coverage_samples": 100_000}
    if subcommand == "geometry":
        # one-disk linear family at the default scales
        M, R = 100.0, 10.0
        return {"M": M, "R": R, "graphs": [{
            "kind": "linear", "epsilon": 1.0 / M,
            "translation": [0.0, R, 0.0, R],
            "domain": [-1.0 / M, 1.0 / M, -1.0, 1.0],
        }]}
    raise ValueError(f"subcommand {subcommand} requires an input file")


def _post(args, route: str, payload: dict):
    """POST to the remote server or the in-process app."""
    if args.server:
        import httpx
        resp = httpx.post(args.server.rstrip("/") + route, json=payload,
                          timeout=300.0)
    else:
        from fastapi.testclient import TestClient
        from .service.app import app
        with TestClient(app, raise_server_exceptions=False) as client:
            resp = client.post(route, json=payload)
    return resp


def _finish(args, resp) -> int:
    if resp.status_code in (400, 422):
        detail = resp.json().get("detail")
        print("input rejected:", file=sys.stderr)
        if isinstance(detail, list):
            for err in detail:
                loc = ".".join(str(x) for x in err.get("loc", []))
                print(f"  at {loc}: {err.get('msg')}", file=sys.stderr)
        else:
            print(f"  {detail}", file=sys.stderr)
        return EXIT_INPUT
    if resp.status_code != 200:
        print(f"server error: {resp.status_code}", file=sys.stderr)
        return EXIT_INPUT
    report = resp.json()
    text = dumps_canonical(report)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return int(report.get("exit_code", 0))


def _load_json(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as e:
        print(f"input rejected: {e}", file=sys.stderr)
        return None


def cmd_stein_b4(args) -> int:
    payload = {}
    if args.config:
        payload = _load_json(args.config)
        if payload is None:
            return EXIT_INPUT
    # the output path is client business, not part of the request
    if isinstance(payload, dict) and not args.out:
        args.out = payload.pop("out", None)
    elif isinstance(payload, dict):
        payload.pop("out", None)
    if args.stabilizations is not None:
        payload["stabilizations"] = args.stabilizations
    if args.tol is not None:
        payload["tol"] = args.tol
    if args.seed is not None:
        payload["seed"] = args.seed
    return _finish(args, _post(args, "/stein-b4", payload))


def cmd_verify(args) -> int:
    route = VERIFY_ROUTES[args.subcommand]
    if args.input:
        payload = _load_json(args.input)
        if payload is None:
            return EXIT_INPUT
    elif args.subcommand in OPTIONAL_INPUT:
        payload = default_payload(args.subcommand, args)
    else:
        print(f"verify {args.subcommand} requires an input file",
              file=sys.stderr)
        return EXIT_INPUT
    if args.tol is not None and isinstance(payload, dict) \
            and args.subcommand in ("geometry", "psh"):
        payload["tol"] = args.tol
    if args.seed is not None and isinstance(payload, dict) \
            and args.subcommand in ("cusp", "psh"):
        payload["seed"] = args.seed
    return _finish(args, _post(args, route, payload))


def cmd_serve(args) -> int:
    import uvicorn
    uvicorn.run("triwork.service.app:app", host=args.host, port=args.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--server", default=None,
                        help="base URL of a running service; default runs "
                             "the service in-process")
    common.add_argument("--out", default=None, help="report output path "
                        "(default stdout)")
    common.add_argument("--tol", type=float, default=None,
                        help="override the numerical tolerance")
    common.add_argument("--seed", type=int, default=None,
                        help="sampling seed (affects sample sets only, "
                             "never certified counts)")

    parser = argparse.ArgumentParser(
        prog="triwork",
        description="trisection workbench: verification pipelines over "
                    "parameter calculus, branched covers and certified "
                    "bridge geometry")
    sub = parser.add_subparsers(dest="command", required=True)

    p_stein = sub.add_parser("stein-b4", parents=[common],
                             help="run the stabilized-ball Stein pipeline")
    p_stein.add_argument("--config", default=None,
                         help="pipeline config JSON")
    p_stein.add_argument("--stabilizations", type=int, nargs=3,
                         metavar=("N1", "N2", "N3"), default=None,
                         help="per-sector stabilization counts")
    p_stein.set_defaults(fn=cmd_stein_b4)

    p_verify = sub.add_parser("verify", parents=[common],
                              help="run one verification")
    p_verify.add_argument("subcommand", choices=sorted(VERIFY_ROUTES))
    p_verify.add_argument("input", nargs="?", default=None,
                          help="input JSON file (optional for cusp, psh, "
                               "geometry)")
    p_verify.set_defaults(fn=cmd_verify)

    p_serve = sub.add_parser("serve", help="run the HTTP service")
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--port", type=int, default=8000)
    p_serve.set_defaults(fn=cmd_serve)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
