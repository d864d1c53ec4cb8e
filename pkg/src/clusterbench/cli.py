"""Command-line front end: a thin HTTP client over the JSON service.

Every verb except `serve` talks to the FastAPI app through an in-process
ASGI transport (or to a running server via --url), so the CLI exercises
exactly the JSON surface the web UI consumes.  Exit codes: 0 success,
1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

import httpx


def _client(url: str | None) -> httpx.Client:
    if url:
        return httpx.Client(base_url=url, timeout=600.0)
    # in-process: drive the ASGI app directly through a sync test transport
    import warnings

    warnings.filterwarnings("ignore", category=DeprecationWarning)
    from starlette.testclient import TestClient

    from .service import create_app

    return TestClient(create_app(), raise_server_exceptions=False)


def _emit(data: dict, out: str | None) -> None:
    text = json.dumps(data, indent=2, sort_keys=True)
    if out:
        with open(out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _fail_on_error(resp: httpx.Response) -> dict:
    if resp.status_code >= 400:
        print(f"error ({resp.status_code}): {resp.text}", file=sys.stderr)
        raise SystemExit(2)
    return resp.json()


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="clusterbench",
        description="Exact-arithmetic workbench for quiver cluster algebras",
    )
    parser.add_argument("--url", help="base URL of a running service (default: in-process)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="build the level quiver for a Dynkin type")
    p.add_argument("family", choices=["A", "D", "E", "B", "C", "F", "G"])
    p.add_argument("rank", type=int)
    p.add_argument("level", type=int, nargs="?", default=1)
    p.add_argument("--out")

    p = sub.add_parser("mutate", help="reset a session and apply a mutation sequence")
    p.add_argument("family", choices=["A", "D", "E"])
    p.add_argument("rank", type=int)
    p.add_argument("level", type=int, nargs="?", default=1)
    p.add_argument("--principal", action="store_true")
    p.add_argument("--at", action="append", required=True,
                   help="vertex label or index; repeatable")
    p.add_argument("--out")

    p = sub.add_parser("enumerate", help="enumerate clusters and variables")
    p.add_argument("family", choices=["A", "D", "E"])
    p.add_argument("rank", type=int)
    p.add_argument("--level", type=int)
    p.add_argument("--principal", action="store_true")
    p.add_argument("--budget", type=int, default=10_000)
    p.add_argument("--out")

    p = sub.add_parser("autgroup", help="cluster-automorphism group of a finite type")
    p.add_argument("family", choices=["A", "D", "E"])
    p.add_argument("rank", type=int)
    p.add_argument("--budget", type=int, default=10_000)
    p.add_argument("--out")

    p = sub.add_parser("report", help="Pic/K0/Aut invariant report for (type, level)")
    p.add_argument("family", choices=["A", "D", "E"])
    p.add_argument("rank", type=int)
    p.add_argument("level", type=int, nargs="?", default=1)
    p.add_argument("--out")

    p = sub.add_parser("verify", help="symbolic verification of shipped identities")
    p.add_argument("target", choices=["all", "a2", "a3", "nagata"])
    p.add_argument("--a", default="2", help="Nagata parameter (rational)")
    p.add_argument("--out")

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--host", default="127.0.0.1")

    args = parser.parse_args(argv)

    if args.command == "serve":
        import uvicorn

        from .service import create_app

        uvicorn.run(create_app(), host=args.host, port=args.port)
        return 0

    with _client(args.url) as client:
        if args.command == "build":
            resp = client.post(
                "/api/build",
                json={"family": args.family, "rank": args.rank, "level": args.level},
            )
            _emit(_fail_on_error(resp), args.out)
            return 0

        if args.command == "mutate":
            resp = client.post(
                "/api/reset",
                json={
                    "family": args.family,
                    "rank": args.rank,
                    "level": args.level,
                    "principal": args.principal,
                },
            )
            _fail_on_error(resp)
            data = None
            for vertex in args.at:
                v: int | str = int(vertex) if vertex.lstrip("-").isdigit() else vertex
                resp = client.post("/api/mutate", json={"vertex": v})
                data = _fail_on_error(resp)
            _emit(data or {}, args.out)
            return 0

        if args.command == "enumerate":
            params: dict = {
                "family": args.family,
                "rank": args.rank,
                "principal": args.principal,
                "budget": args.budget,
            }
            if args.level is not None:
                params["level"] = args.level
            resp = client.get("/api/enumerate", params=params)
            _emit(_fail_on_error(resp), args.out)
            return 0

        if args.command == "autgroup":
            resp = client.get(
                "/api/autgroup",
                params={"family": args.family, "rank": args.rank, "budget": args.budget},
            )
            _emit(_fail_on_error(resp), args.out)
            return 0

        if args.command == "report":
            resp = client.get(
                "/api/invariant-report",
                params={"family": args.family, "rank": args.rank, "level": args.level},
            )
            _emit(_fail_on_error(resp), args.out)
            return 0

        if args.command == "verify":
            resp = client.post("/api/verify", json={"target": args.target, "a": args.a})
            data = _fail_on_error(resp)
            for check in data["checks"]:
                status = "pass" if check["passed"] else "FAIL"
                print(f"{status}  {check['check']}")
            return 0 if data["passed"] else 1

    return 2


if __name__ == "__main__":
    sys.exit(main())
