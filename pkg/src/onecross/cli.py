"""Command-line surface: construct, verify, bounds, table, oracle, export.

Exit codes: 0 success/pass/yes, 1 failure/no, 2 usage or parse error,
3 budget exhausted / unknown.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import asdict
from pathlib import Path

from . import bounds as bounds_mod
from . import constructions as cons
from .drawing import BipartiteGraph, DrawingError, Graph, validate
from .formats import (
    FormatError,
    document_to_drawing,
    drawing_to_document,
    dumps_document,
    export_dot,
    export_svg,
)
from .oracle import OracleError, is_one_planar

_FAMILIES = {
    "w3": lambda x, y: cons.w3_family(x, y),
    "b": lambda x, y: cons.b_family(x, y),
    "balanced": lambda x, y: cons.balanced(x),
    "near": lambda x, y: cons.near_balanced(x, y),
    "k36": lambda x, y: cons.k36_family(y),
}


def _cmd_construct(args: argparse.Namespace) -> int:
    x, y = args.x, args.y
    if args.family == "auto":
        best = cons.best_known(x, y)
        drawing, family = best.drawing, best.family
    else:
        if args.family == "balanced" and x != y:
            print("balanced family needs x == y", file=sys.stderr)
            return 2
        if args.family == "k36" and x != 3:
            print("the k36 family fixes x = 3", file=sys.stderr)
            return 2
        drawing = _FAMILIES[args.family](x, y)
        family = args.family
    report = validate(drawing)
    info = {
        "family": family,
        "x": report.x,
        "y": report.y,
        "n": report.vertices,
        "edges": report.edges,
        "crossings": report.crossings,
    }
    if args.out:
        provenance = {"generator": family, "params": {"x": x, "y": y}}
        Path(args.out).write_text(dumps_document(drawing_to_document(drawing, provenance)))
        info["out"] = args.out
    if args.json:
        print(json.dumps(info, sort_keys=True))
    else:
        print(f"family={family} n={info['n']} edges={info['edges']} "
              f"crossings={info['crossings']}")
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    try:
        doc = json.loads(Path(args.file).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        print(f"cannot read document: {exc}", file=sys.stderr)
        return 2
    try:
        drawing = document_to_drawing(doc)
    except FormatError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except DrawingError as exc:
        # Structured but invalid: emit a failing report.
        if args.json:
            print(json.dumps({"passed": False, "failures": [str(exc)]}))
        else:
            print(f"FAIL: {exc}")
        return 1
    report = validate(drawing)
    payload = {
        "passed": report.passed,
        "failures": list(report.failures),
        "x": report.x,
        "y": report.y,
        "n": report.vertices,
        "edges": report.edges,
        "crossings": report.crossings,
        "crossing_ceiling": report.crossing_ceiling,
        "exceeds_minimal_bound": report.exceeds_minimal_bound,
    }
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        status = "PASS" if report.passed else "FAIL"
        print(f"{status} n={report.vertices} edges={report.edges} "
              f"crossings={report.crossings}")
        for f in report.failures:
            print(f"  - {f}")
    return 0 if report.passed else 1


def _cmd_bounds(args: argparse.Namespace) -> int:
    sb = bounds_mod.size_bounds(args.x, args.y)
    if args.json:
        print(json.dumps(asdict(sb), sort_keys=True))
    elif args.csv:
        buf = io.StringIO()
        writer = csv.writer(buf)
        data = asdict(sb)
        writer.writerow(data.keys())
        writer.writerow(data.values())
        sys.stdout.write(buf.getvalue())
    else:
        for k, v in asdict(sb).items():
            print(f"{k}={v}")
    return 0


def _table_rows(xmax: int, ymax: int, conjecture: bool):
    for x in range(1, xmax + 1):
        for y in range(x, ymax + 1):
            if conjecture:
                if x < 3 or y < 6 * x - 12:
                    continue
                gap = bounds_mod.conjecture_gap(x, y)
                yield {
                    "x": x, "y": y,
                    "lower": gap.constructive_lower,
                    "conjectured_upper": gap.conjectured_upper,
                    "proven_upper": gap.proven_upper,
                    "open_interval": list(gap.open_interval),
                    "conjecture_tight": gap.conjecture_tight,
                }
            else:
                lo = bounds_mod.lower_bound(x, y)
                up = bounds_mod.upper_bound(x, y)
                yield {"x": x, "y": y, "lower": lo, "upper": up, "gap": up - lo}


def _cmd_table(args: argparse.Namespace) -> int:
    rows = list(_table_rows(args.xmax, args.ymax, args.conjecture))
    if args.json:
        print(json.dumps(rows))
    else:
        writer = csv.writer(sys.stdout)
        if rows:
            writer.writerow(rows[0].keys())
            for row in rows:
                writer.writerow(row.values())
    return 0


def _cmd_oracle(args: argparse.Namespace) -> int:
    if args.complete_bipartite:
        a, b = args.complete_bipartite
        blacks = list(range(a))
        whites = list(range(a, a + b))
        graph: Graph | BipartiteGraph = BipartiteGraph.make(
            blacks, whites, [(i, j) for i in blacks for j in whites])
    elif args.file:
        try:
            drawing = document_to_drawing(json.loads(Path(args.file).read_text()))
        except (OSError, json.JSONDecodeError, FormatError, DrawingError) as exc:
            print(f"cannot load graph: {exc}", file=sys.stderr)
            return 2
        graph = drawing.graph
    else:
        print("oracle needs FILE or --complete-bipartite", file=sys.stderr)
        return 2
    res = is_one_planar(graph, args.budget, timeout=args.timeout,
                        checkpoint=args.checkpoint)
    payload = {
        "verdict": res.verdict,
        "crossings": res.crossings,
        "assignments_tested": res.assignments_tested,
    }
    if args.out and res.drawing is not None:
        Path(args.out).write_text(dumps_document(drawing_to_document(res.drawing)))
        payload["out"] = args.out
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        extra = f" crossings={res.crossings}" if res.crossings is not None else ""
        print(f"{res.verdict}{extra} (assignments tested: {res.assignments_tested})")
    return {"yes": 0, "no": 1, "unknown": 3}[res.verdict]


def _cmd_export(args: argparse.Namespace) -> int:
    try:
        drawing = document_to_drawing(json.loads(Path(args.file).read_text()))
    except (OSError, json.JSONDecodeError, FormatError, DrawingError) as exc:
        print(f"cannot load drawing: {exc}", file=sys.stderr)
        return 2
    text = export_dot(drawing) if args.format == "dot" else export_svg(drawing)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="onecross",
        description="Extremal bipartite graphs drawable with one crossing per edge",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="generate a certified drawing")
    p.add_argument("--x", type=int, required=True)
    p.add_argument("--y", type=int, required=True)
    p.add_argument("--family", choices=["auto", *sorted(_FAMILIES)], default="auto")
    p.add_argument("--out", help="write the drawing document here")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("verify", help="validate a drawing document")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("bounds", help="bound evaluations for one size pair")
    p.add_argument("--x", type=int, required=True)
    p.add_argument("--y", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.add_argument("--csv", action="store_true")
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("table", help="lower/upper grid, optionally conjecture rows")
    p.add_argument("--xmax", type=int, required=True)
    p.add_argument("--ymax", type=int, required=True)
    p.add_argument("--conjecture", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("oracle", help="exhaustively decide 1-crossing drawability")
    p.add_argument("file", nargs="?")
    p.add_argument("--complete-bipartite", nargs=2, type=int, metavar=("A", "B"))
    p.add_argument("--budget", type=int, default=6)
    p.add_argument("--timeout", type=float)
    p.add_argument("--checkpoint")
    p.add_argument("--out", help="write the witness drawing here")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("export", help="render a drawing document")
    p.add_argument("file")
    p.add_argument("--format", choices=["dot", "svg"], required=True)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_export)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except (DrawingError, OracleError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
