"""Thin command-line client for the blockperm service.

Every subcommand builds a JSON request and sends it over HTTP: to a
remote instance when ``--server`` is given, otherwise to an in-process
copy of the service via an ASGI transport, so no server needs to be
running.  Exit codes: 0 success, 1 domain error, 2 usage error.
"""

from __future__ import annotations

import argparse
import asyncio
import json
import sys
from typing import Callable, Optional

import httpx


def _int_list(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(t.strip()) for t in text.split(",")]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(
            f"expected comma-separated integers, got {text!r}"
        ) from exc


def _call(server: Optional[str], method: str, path: str, payload: Optional[dict]) -> tuple[int, object]:
    if server:
        with httpx.Client(base_url=server, timeout=None) as client:
            response = client.request(method, path, json=payload)
    else:
        from .service import app  # lazy: keeps --help snappy

        async def go() -> httpx.Response:
            transport = httpx.ASGITransport(app=app)
            async with httpx.AsyncClient(
                transport=transport, base_url="http://blockperm", timeout=None
            ) as client:
                return await client.request(method, path, json=payload)

        response = asyncio.run(go())
    try:
        return response.status_code, response.json()
    except ValueError:
        return response.status_code, response.text


def _finish(args: argparse.Namespace, status: int, body: object, render: Callable[[dict], None]) -> int:
    if status == 200:
        if args.json_out:
            print(json.dumps(body, indent=2))
        else:
            render(body)
        return 0
    if isinstance(body, dict):
        detail = body.get("detail", body)
    else:
        detail = body
    if not isinstance(detail, str):
        detail = json.dumps(detail)
    print(f"error: {detail}", file=sys.stderr)
    return 2 if status == 422 else 1


def _cmd_count(args: argparse.Namespace) -> int:
    if args.table:
        status, body = _call(
            args.server, "POST", "/count/table",
            {"comp": args.comp, "cap": args.cap},
        )
        return _finish(args, status, body, lambda b: print(b["csv"], end=""))
    status, body = _call(
        args.server, "POST", "/count",
        {"comp": args.comp, "k": args.k, "lis": args.lis, "cap": args.cap},
    )
    return _finish(args, status, body, lambda b: print(b["count"]))


def _cmd_enumerate(args: argparse.Namespace) -> int:
    status, body = _call(
        args.server, "POST", "/enumerate",
        {"comp": args.comp, "k": args.k, "lis": args.lis, "cap": args.cap},
    )

    def render(b: dict) -> None:
        for line in b["perms"]:
            print(line)

    return _finish(args, status, body, render)


def _cmd_map(args: argparse.Namespace) -> int:
    status, body = _call(
        args.server, "POST", "/map",
        {
            "name": args.name,
            "perm": args.perm,
            "index": args.index,
            "target": args.target,
            "k": args.k,
            "trace": args.trace,
        },
    )

    def render(b: dict) -> None:
        print(b["perm"])
        if args.trace:
            print(json.dumps(b.get("trace", []), indent=2))

    return _finish(args, status, body, render)


def _cmd_tableau(args: argparse.Namespace) -> int:
    status, body = _call(
        args.server, "POST", "/tableau/count",
        {"outer": args.outer, "inner": args.inner, "diagram": args.diagram},
    )

    def render(b: dict) -> None:
        print(b["count"])
        if args.diagram:
            print(b["diagram"])

    return _finish(args, status, body, render)


def _cmd_verify(args: argparse.Namespace) -> int:
    status, body = _call(
        args.server, "POST", "/verify",
        {"suite": args.suite, "max_size": args.max_size},
    )
    if status != 200:
        return _finish(args, status, body, lambda b: None)
    assert isinstance(body, dict)
    if args.json_out:
        print(json.dumps(body, indent=2))
        return 0 if body["passed"] else 1
    for check in body["checks"]:
        if check["ok"]:
            print(f"PASS {check['name']} [{check['seconds']}s] {check['detail']}")
        else:
            line = f"FAIL {check['name']}: {check['detail']}"
            if check.get("counterexample"):
                line += f" (counterexample: {check['counterexample']})"
            print(line)
    print(f"suite {body['suite']}: {'PASSED' if body['passed'] else 'FAILED'}")
    return 0 if body["passed"] else 1


def _cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    uvicorn.run("blockperm.service:app", host=args.host, port=args.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="blockperm",
        description="Block-ascending permutations: counts, bijections, tableaux.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--server", metavar="URL", default=None,
        help="base URL of a running service (default: run in-process)",
    )
    common.add_argument(
        "--json", dest="json_out", action="store_true",
        help="print the raw JSON response",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", parents=[common], help="count a permutation set")
    p.add_argument("--comp", type=_int_list, required=True, metavar="A1,A2,...")
    p.add_argument("--k", type=int, help="count permutations avoiding 12...(k+2)")
    p.add_argument("--lis", type=int, help="count permutations with this exact LIS length")
    p.add_argument("--cap", type=int, default=14, help="size cap (default 14)")
    p.add_argument("--table", action="store_true",
                   help="print the full per-h and per-k table as CSV")
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("enumerate", parents=[common],
                       help="list permutations, one per line, in canonical text")
    p.add_argument("--comp", type=_int_list, required=True, metavar="A1,A2,...")
    p.add_argument("--k", type=int, help="restrict to avoiding 12...(k+2)")
    p.add_argument("--lis", type=int, help="restrict to this exact LIS length")
    p.add_argument("--cap", type=int, default=14)
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("map", parents=[common], help="apply a bijection")
    p.add_argument(
        "name",
        choices=["w", "v", "swap", "sort", "transfer", "inject",
                 "insert-max", "delete-max"],
    )
    p.add_argument("--perm", required=True, help='e.g. "1|37|2458|6"')
    p.add_argument("--index", type=int, help="left block index for swap/transfer")
    p.add_argument("--target", type=_int_list, metavar="A1,A2,...",
                   help="target composition for sort/inject")
    p.add_argument("--k", type=int, help="pattern bound for insert-max/delete-max")
    p.add_argument("--trace", action="store_true",
                   help="also print the elementary-step trace as JSON")
    p.set_defaults(func=_cmd_map)

    p = sub.add_parser("tableau", parents=[common], help="Young tableau counts")
    tsub = p.add_subparsers(dest="tableau_command", required=True)
    tc = tsub.add_parser("count", parents=[common],
                         help="count standard fillings of a (skew) shape")
    tc.add_argument("--outer", type=_int_list, required=True, metavar="R1,R2,...")
    tc.add_argument("--inner", type=_int_list, default=[], metavar="R1,R2,...")
    tc.add_argument("--diagram", action="store_true", help="print an ASCII diagram")
    tc.set_defaults(func=_cmd_tableau)

    p = sub.add_parser("verify", parents=[common],
                       help="run an exhaustive verification suite")
    p.add_argument(
        "--suite", default="all",
        choices=["all", "w-v", "swap", "concavity", "catalan", "tableaux"],
    )
    p.add_argument("--max-size", type=int, default=9, dest="max_size")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("serve", parents=[common], help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(func=_cmd_serve)

    return parser


def _validate(parser: argparse.ArgumentParser, args: argparse.Namespace) -> None:
    if args.command == "count" and not args.table:
        if (args.k is None) == (args.lis is None):
            parser.error("count requires exactly one of --k and --lis")
    if args.command == "enumerate":
        if args.k is not None and args.lis is not None:
            parser.error("enumerate takes at most one of --k and --lis")
    if args.command == "map":
        if args.name in ("swap", "transfer") and args.index is None:
            parser.error(f"map {args.name} requires --index")
        if args.name in ("sort", "inject") and args.target is None:
            parser.error(f"map {args.name} requires --target")
        if args.name in ("insert-max", "delete-max") and args.k is None:
            parser.error(f"map {args.name} requires --k")


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        _validate(parser, args)
    except SystemExit as exc:
        return int(exc.code or 0)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
