"""Command line front end; a thin client over the same handlers as the service.

Exit codes: 0 success, 2 parse or validation failure, 3 inadmissible ideal
pair, 1 internal inconsistency.  Errors are printed to stdout as a single
JSON object {"error": {...}} so scripted callers parse one stream.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import api, report
from .errors import PrimspecError, ValidationError
from .graph import Graph, parse_graph
from .report import TailLabels
from .topology import PrimSpace

_EXIT = {"parse": 2, "validation": 2, "inadmissible": 3, "internal": 1}


def _comma_list(value: str) -> list[str]:
    return [part.strip() for part in value.split(",") if part.strip()]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="primspec",
        description="Primitive ideal space of a graph algebra, as graph combinatorics.",
    )
    sub = parser.add_subparsers(dest="cmd", required=True)

    def op(name: str, help_text: str, formats=("json",), labeled=False):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--graph", required=True, help="graph file, or - for stdin")
        if len(formats) > 1:
            p.add_argument("--format", choices=formats, default="json")
        if labeled:
            p.add_argument(
                "--label-by-root",
                action="store_true",
                help="name tails by a generating vertex instead of M1, M2, ...",
            )
        return p

    op("parse", "check a graph file and echo its JSON form", ("json", "dot", "text"))
    op("tails", "list the maximal tails", ("json", "text"), labeled=True)
    op("bv", "list the breaking vertices", ("json", "text"))
    op("hs", "list the hereditary saturated vertex sets", ("json", "dot", "text"))
    op("ideals", "list the gauge invariant ideal lattice", ("json", "dot", "text"))
    op("prim", "list the points of the primitive ideal space", ("json", "text"), labeled=True)

    p = op("closure", "close a subset of the space", ("json", "text"), labeled=True)
    p.add_argument(
        "--set",
        dest="subset",
        required=True,
        help="subset as JSON or as terms 'M2; bv:v; M1:arc:(0,1/2)'",
    )

    op("order", "specialization preorder between points", ("json", "dot", "text"), labeled=True)

    p = op("quotient", "graph presenting the quotient by an ideal", ("json", "dot", "text"))
    p.add_argument("--K", required=True, help="comma separated vertex set, may be empty")
    p.add_argument("--B", default="", help="comma separated breaking set")

    op("simple", "decide simplicity of the algebra", ("json", "text"))

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)

    return parser


def _read_graph(path: str) -> Graph:
    if path == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise ValidationError(f"cannot read graph file: {exc}") from exc
    return parse_graph(text)


def _emit(obj) -> None:
    print(json.dumps(obj, separators=(",", ":")))


def _graph_output(g: Graph, fmt: str, payload: dict) -> None:
    if fmt == "dot":
        sys.stdout.write(report.graph_dot(g))
    elif fmt == "text":
        sys.stdout.write(g.to_text())
    else:
        _emit(payload)


def _parse_subset_arg(raw: str):
    text = raw.strip()
    if text.startswith("{"):
        try:
            return json.loads(text)
        except json.JSONDecodeError as exc:
            raise ValidationError(f"invalid subset JSON: {exc}") from exc
    return text


def _run(args) -> int:
    if args.cmd == "serve":
        try:
            import uvicorn
        except ImportError:
            raise ValidationError("serving needs uvicorn; install primspec[serve]")
        from .app import app

        uvicorn.run(app, host=args.host, port=args.port)
        return 0

    g = _read_graph(args.graph)
    fmt = getattr(args, "format", "json")
    by_root = getattr(args, "label_by_root", False)

    if args.cmd == "parse":
        _graph_output(g, fmt, api.handle_parse(g))
    elif args.cmd == "tails":
        if fmt == "text":
            space = PrimSpace(g)
            sys.stdout.write(report.tails_text(space, TailLabels(space, by_root)))
        else:
            _emit(api.handle_tails(g, by_root))
    elif args.cmd == "bv":
        out = api.handle_bv(g)
        if fmt == "text":
            names = out["breaking_vertices"]
            print("\n".join(names) if names else "none")
        else:
            _emit(out)
    elif args.cmd == "hs":
        if fmt == "dot":
            sys.stdout.write(report.hs_dot(g))
        elif fmt == "text":
            for s in api.handle_hs(g)["sets"]:
                print("{" + ",".join(s) + "}")
        else:
            _emit(api.handle_hs(g))
    elif args.cmd == "ideals":
        if fmt == "dot":
            sys.stdout.write(report.ideals_dot(g))
        elif fmt == "text":
            for ideal in api.handle_ideals(g)["ideals"]:
                print("K={" + ",".join(ideal["K"]) + "} B={" + ",".join(ideal["B"]) + "}")
        else:
            _emit(api.handle_ideals(g))
    elif args.cmd == "prim":
        out = api.handle_prim(g, by_root)
        if fmt == "text":
            _print_prim_text(out)
        else:
            _emit(out)
    elif args.cmd == "closure":
        subset = _parse_subset_arg(args.subset)
        out = api.handle_closure(g, subset, by_root)
        if fmt == "text":
            space = PrimSpace(g)
            labels = TailLabels(space, by_root)
            if isinstance(subset, str):
                s = report.subset_from_inline(space, labels, subset)
            else:
                s = report.subset_from_json(space, labels, subset)
            sys.stdout.write(report.subset_text(space.closure(s), labels))
        else:
            _emit(out)
    elif args.cmd == "order":
        if fmt == "dot":
            space = PrimSpace(g)
            sys.stdout.write(report.order_dot(space, TailLabels(space, by_root)))
        elif fmt == "text":
            for pair in api.handle_order(g, by_root)["pairs"]:
                suffix = f" [{pair['match']}]" if "match" in pair else ""
                print(f"{pair['from']} -> {pair['to']}{suffix}")
        else:
            _emit(api.handle_order(g, by_root))
    elif args.cmd == "quotient":
        out = api.handle_quotient(g, _comma_list(args.K), _comma_list(args.B))
        _graph_output(Graph.from_json_obj(out["graph"]), fmt, out)
    elif args.cmd == "simple":
        out = api.handle_simple(g)
        if fmt == "text":
            print("simple" if out["simple"] else "not simple")
        else:
            _emit(out)
    else:  # pragma: no cover - argparse enforces choices
        raise ValidationError(f"unknown command {args.cmd!r}")
    return 0


def _print_prim_text(out: dict) -> None:
    def fmt_ideal(ideal: dict) -> str:
        return "K={" + ",".join(ideal["K"]) + "} B={" + ",".join(ideal["B"]) + "}"

    for entry in out["gamma"]:
        print(f"gamma {entry['tail']} {{{','.join(entry['vertices'])}}} {fmt_ideal(entry['ideal'])}")
    for entry in out["bv"]:
        print(f"bv {entry['vertex']} {fmt_ideal(entry['ideal'])}")
    for entry in out["tau"]:
        lower = fmt_ideal(entry["sandwich"]["lower"])
        upper = fmt_ideal(entry["sandwich"]["upper"])
        print(
            f"circle {entry['tail']} loop {'->'.join(entry['loop'])} "
            f"lower {lower} upper {upper}"
        )


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _run(args)
    except PrimspecError as exc:
        _emit({"error": exc.payload()})
        return _EXIT.get(exc.kind, 1)


if __name__ == "__main__":
    sys.exit(main())
