"""Command-line front end: ``miuraflip <subcommand> ...``.

Exit codes: 0 on success, 1 when a check fails, 2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import forest as fr
from .coloring import coloring_to_mv, mv_to_coloring, parse_coloring
from .flipgraph import (
    StateCapExceeded,
    bfs_path,
    build_ofg,
    degree_distribution,
    diameter_bfs,
    export,
    state_label,
)
from .heights import diameter_formula, ofg_distance
from .miura import MiuraSpec, MVAssignment, enumerate_valid
from .report import all_passed, to_json, to_table
from .verify import run_verification

THREADS_ENV = "MIURAFLIP_THREADS"
BFS_LIMIT = 9


class UsageError(Exception):
    pass


def _default_threads() -> int:
    raw = os.environ.get(THREADS_ENV, "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _dumps(doc) -> str:
    return json.dumps(doc, indent=1) + "\n"


def _guard_bfs(args, n: int, m: int = 2) -> None:
    if m == 2 and n > BFS_LIMIT and not args.force:
        raise UsageError(f"BFS at n={n} is refused above n={BFS_LIMIT}; pass --force to run it anyway")


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def cmd_enumerate(args) -> tuple[int, str]:
    states = enumerate_valid(MiuraSpec(args.n))
    if args.count_only:
        return 0, f"{len(states)}\n"
    return 0, "".join(f"{s}\n" for s in states)


def cmd_stats(args) -> tuple[int, str]:
    g = build_ofg(MiuraSpec(args.n, args.m), workers=args.threads)
    doc = {
        "vertices": g.vertex_count,
        "edges": g.edge_count,
        "degrees": {str(d): c for d, c in degree_distribution(g).items()},
    }
    return 0, _dumps(doc)


def cmd_graph(args) -> tuple[int, str]:
    g = build_ofg(MiuraSpec(args.n, args.m), workers=args.threads)
    return 0, export(g, args.format)


def cmd_distance(args) -> tuple[int, str]:
    a = MVAssignment.from_string(args.source)
    b = MVAssignment.from_string(args.target)
    if a.n != b.n:
        raise UsageError("--from and --to must have the same length")
    for s in (a, b):
        mv_to_coloring(s)  # rejects invalid assignments
    doc = {"from": str(a), "to": str(b), "method": args.method}
    if args.method in ("formula", "both"):
        doc["formula"] = ofg_distance(a, b)
    if args.method in ("bfs", "both"):
        _guard_bfs(args, a.n)
        g = build_ofg(a.spec, workers=args.threads)
        idx = g.index()
        path = bfs_path(g, idx[a], idx[b])
        doc["bfs"] = len(path) - 1
        doc["witness"] = [state_label(g.states[i]) for i in path]
    doc["value"] = doc.get("formula", doc.get("bfs"))
    code = 1 if args.method == "both" and doc["formula"] != doc["bfs"] else 0
    return code, _dumps(doc)


def cmd_diameter(args) -> tuple[int, str]:
    n = args.n
    if n < 2:
        raise UsageError("diameter needs --n >= 2")
    doc = {"n": n, "method": args.method}
    code = 0
    if args.method in ("formula", "both"):
        try:
            doc["formula"] = diameter_formula(n)
        except RuntimeError as exc:
            doc["formula_error"] = str(exc)
            code = 1
    if args.method in ("bfs", "both"):
        _guard_bfs(args, n)
        g = build_ofg(MiuraSpec(n), workers=args.threads)
        d, (i, j) = diameter_bfs(g, workers=args.threads)
        doc["bfs"] = d
        doc["witness"] = [state_label(g.states[i]), state_label(g.states[j])]
    doc["value"] = doc.get("formula", doc.get("bfs"))
    if "formula" in doc and "bfs" in doc and doc["formula"] != doc["bfs"]:
        code = 1
    return code, _dumps(doc)


def cmd_forest(args) -> tuple[int, str]:
    tables = fr.generate_chi_d(args.generations)
    if args.emit == "csv":
        return 0, fr.to_csv(tables, n_from=1)
    if args.emit == "json":
        doc = [{"n": t.n, "degrees": {str(d): c for d, c in t.distribution().items()},
                "blue": {str(d): t.b(d) for d in t.labels() if t.b(d)}} for t in tables]
        return 0, _dumps(doc)
    n_max = len(tables)
    head = ["d"] + [f"n={n}" for n in range(1, n_max + 1)]
    rows = [[str(d)] + [str(x) for x in row] for d, row in zip(range(2, 2 * n_max + 1), fr.table_rows(tables, 1))]
    widths = [max(len(r[i]) for r in [head] + rows) for i in range(len(head))]
    lines = ["  ".join(c.rjust(w) for c, w in zip(r, widths)) for r in [head] + rows]
    return 0, "\n".join(lines) + "\n"


def cmd_verify(args) -> tuple[int, str]:
    checks = run_verification(args.n_max, seed=args.seed)
    text = to_json(checks) + "\n" if args.json else to_table(checks) + "\n"
    return (0 if all_passed(checks) else 1), text


def cmd_bijection(args) -> tuple[int, str]:
    if args.mv is not None:
        return 0, f"{mv_to_coloring(MVAssignment.from_string(args.mv))}\n"
    gamma = parse_coloring(args.coloring.replace("\\n", "\n"), canonicalize=args.canonicalize)
    if gamma.rows != 2:
        raise UsageError("bijection needs a 2-row coloring")
    return 0, f"{coloring_to_mv(gamma)}\n"


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="write output to this file instead of stdout")
    common.add_argument("--threads", type=_positive, default=_default_threads(),
                        help=f"worker threads (default ${THREADS_ENV} or 1)")
    common.add_argument("--force", action="store_true", help=f"allow BFS above n={BFS_LIMIT}")

    p = argparse.ArgumentParser(prog="miuraflip", description="Flip graphs of 2 x n Miura-ori MV assignments.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("enumerate", parents=[common], help="list valid MV assignments")
    s.add_argument("--n", type=_positive, required=True)
    s.add_argument("--count-only", action="store_true")
    s.set_defaults(func=cmd_enumerate)

    for name, func, helptext in (("stats", cmd_stats, "vertex, edge and degree counts"),
                                 ("graph", cmd_graph, "export the flip graph")):
        s = sub.add_parser(name, parents=[common], help=helptext)
        s.add_argument("--n", type=_positive, required=True)
        s.add_argument("--m", type=_positive, default=2, help="rows (default 2)")
        if name == "graph":
            s.add_argument("--format", choices=("dot", "json", "edges"), default="json")
        s.set_defaults(func=func)

    s = sub.add_parser("distance", parents=[common], help="flip distance between two assignments")
    s.add_argument("--from", dest="source", required=True)
    s.add_argument("--to", dest="target", required=True)
    s.add_argument("--method", choices=("formula", "bfs", "both"), default="formula")
    s.set_defaults(func=cmd_distance)

    s = sub.add_parser("diameter", parents=[common], help="diameter of OFG(M_2,n)")
    s.add_argument("--n", type=_positive, required=True)
    s.add_argument("--method", choices=("formula", "bfs", "both"), default="formula")
    s.set_defaults(func=cmd_diameter)

    s = sub.add_parser("forest", parents=[common], help="degree counts from the extension forest")
    s.add_argument("--generations", type=_positive, required=True)
    s.add_argument("--emit", choices=("table", "csv", "json"), default="table")
    s.set_defaults(func=cmd_forest)

    s = sub.add_parser("verify", parents=[common], help="run the claim suite")
    s.add_argument("--n-max", type=_positive, default=7)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--json", action="store_true", help="emit JSON instead of a table")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("bijection", parents=[common], help="convert between MV strings and colorings")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--mv")
    g.add_argument("--coloring", help="rows separated by '/' or newlines, e.g. 01/10")
    s.add_argument("--canonicalize", action="store_true", help="accept colorings with a non-zero top-left")
    s.set_defaults(func=cmd_bijection)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        code, text = args.func(args)
    except (UsageError, ValueError, IndexError, StateCapExceeded) as exc:
        print(f"miuraflip {args.command}: error: {exc}", file=sys.stderr)
        return 2
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
