"""Command-line interface.

Subcommands: generate, verify, girth, bounds, catalog. All output is
deterministic (the catalog's runtime column aside); diagnostics go to
stderr. Exit codes: 0 success / verification pass, 1 verification
fail, 2 invalid input. ``-`` means stdin or stdout.
"""

from __future__ import annotations

import argparse
import sys
import time

from . import analysis, generators, labels, serialize
from .graph import GraphError, MixedGraph


def _read_graph(path: str) -> MixedGraph:
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    return serialize.from_json(text)


def _write(text: str, out: str) -> None:
    if out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _need(args, names: list[str], kind: str):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        flags = ", ".join(f"--{n}" for n in missing)
        raise ValueError(f"generate {kind} requires {flags}")


def _build_graph(args) -> MixedGraph:
    kind = args.kind
    if kind == "pg":
        _need(args, ["q"], kind)
        return generators.projective_incidence(args.q)
    if kind == "biaffine":
        _need(args, ["q"], kind)
        return generators.biaffine(args.q)
    if kind == "circulant":
        _need(args, ["q", "jumps"], kind)
        return generators.circulant(args.q, args.jumps)
    if kind == "bicirculant":
        _need(args, ["q"], kind)
        return generators.bipartite_circulant(args.q)
    if kind == "family":
        _need(args, ["q"], kind)
        return generators.family(args.q)
    if kind == "cage136":
        return generators.cage_136()
    if kind == "moore-tree":
        _need(args, ["r", "g"], kind)
        return generators.moore_tree(args.r, args.g)
    if kind == "witness":
        _need(args, ["z", "r", "g"], kind)
        return generators.lower_bound_witness(args.z, args.r, args.g)
    raise ValueError(f"unknown generator {kind!r}")


def _cmd_generate(args) -> int:
    graph = _build_graph(args)
    if args.format == "dot":
        _write(serialize.to_dot(graph), args.out)
    else:
        _write(serialize.to_json(graph), args.out)
    return 0


def _cmd_verify(args) -> int:
    graph = _read_graph(args.path)
    report = analysis.verify_zrg(graph, args.z, args.r, args.g)
    if report.ok:
        print(f"verify: PASS order={report.order} girth={report.girth}")
        return 0
    print(f"verify: FAIL order={report.order} {report.reason}")
    return 1


def _cmd_girth(args) -> int:
    graph = _read_graph(args.path)
    report = analysis.girth(graph)
    if report.girth is None:
        print("girth: acyclic")
    else:
        print(f"girth: {report.girth}")
        if args.witness:
            q = graph.field_order
            cycle = " ".join(labels.render(v, q) for v in report.witness)
            print(f"witness: {cycle}")
    return 0


def _cmd_bounds(args) -> int:
    report = analysis.bounds_report(args.z, args.r, args.g, args.q)
    print(f"moore: {report.moore}")
    print(f"ahm: {report.ahm}")
    print(f"mixed_lower: {report.mixed_lower}")
    print(f"assumes_conjecture: {'true' if report.assumes_conjecture else 'false'}")
    if report.family_upper is not None:
        print(f"family_upper: {report.family_upper}")
    return 0


def _catalog_rows(q_list):
    rows = []
    for q in q_list:
        params = generators.FamilyParams.from_q(q)
        graph = generators.family(q)
        start = time.perf_counter()
        report = analysis.verify_zrg(graph, params.z, params.r, 6)
        runtime_ms = int((time.perf_counter() - start) * 1000)
        bounds = analysis.bounds_report(params.z, params.r, 6, q)
        rows.append(
            {
                "q": q,
                "p": params.p,
                "z": params.z,
                "r": params.r,
                "order": graph.order,
                "girth_verified": report.ok,
                "family_upper": bounds.family_upper,
                "moore": bounds.moore,
                "ahm": bounds.ahm if params.z == 1 else None,
                "mixed_lower": bounds.mixed_lower,
                "verify_runtime_ms": runtime_ms,
            }
        )
    return rows


CSV_COLUMNS = [
    "q", "p", "z", "r", "order", "girth_verified",
    "family_upper", "moore", "ahm", "mixed_lower",
]


def _format_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def _cmd_catalog(args) -> int:
    rows = _catalog_rows(args.q_list)
    if args.format == "csv":
        lines = [",".join(CSV_COLUMNS)]
        for row in rows:
            lines.append(",".join(_format_cell(row[c]) for c in CSV_COLUMNS))
        _write("\n".join(lines) + "\n", args.out)
    else:
        columns = CSV_COLUMNS + ["verify_runtime_ms"]
        lines = [
            "| " + " | ".join(columns) + " |",
            "|" + "|".join("---" for _ in columns) + "|",
        ]
        for row in rows:
            cells = [_format_cell(row[c]) or "-" for c in columns]
            lines.append("| " + " | ".join(cells) + " |")
        _write("\n".join(lines) + "\n", args.out)
    return 0


def _int_list(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers: {text!r}")


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mixedcages",
        description="Construct and verify mixed graphs with prescribed degrees and girth.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="emit a graph as JSON or DOT")
    gen.add_argument(
        "kind",
        choices=[
            "pg", "biaffine", "circulant", "bicirculant",
            "family", "cage136", "moore-tree", "witness",
        ],
    )
    gen.add_argument("--q", type=int)
    gen.add_argument("--z", type=int)
    gen.add_argument("--r", type=int)
    gen.add_argument("--g", type=int)
    gen.add_argument("--jumps", type=_int_list)
    gen.add_argument("--format", choices=["dot", "json"], default="json")
    gen.add_argument("--out", default="-")
    gen.set_defaults(func=_cmd_generate)

    ver = sub.add_parser("verify", help="check [z,r]-regularity and exact girth")
    ver.add_argument("path")
    ver.add_argument("--z", type=int, required=True)
    ver.add_argument("--r", type=int, required=True)
    ver.add_argument("--g", type=int, required=True)
    ver.set_defaults(func=_cmd_verify)

    gir = sub.add_parser("girth", help="exact girth of a graph document")
    gir.add_argument("path")
    gir.add_argument("--witness", action="store_true")
    gir.set_defaults(func=_cmd_girth)

    bnd = sub.add_parser("bounds", help="order bounds for a parameter triple")
    bnd.add_argument("--z", type=int, required=True)
    bnd.add_argument("--r", type=int, required=True)
    bnd.add_argument("--g", type=int, required=True)
    bnd.add_argument("--q", type=int)
    bnd.set_defaults(func=_cmd_bounds)

    cat = sub.add_parser("catalog", help="verified family table for a list of primes")
    cat.add_argument("--q-list", dest="q_list", type=_int_list, required=True)
    cat.add_argument("--format", choices=["md", "csv"], default="md")
    cat.add_argument("--out", default="-")
    cat.set_defaults(func=_cmd_catalog)

    return parser


def cli_main(argv=None) -> int:
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except (GraphError, serialize.DocumentError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(cli_main())
