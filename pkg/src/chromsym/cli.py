"""Command line interface: csf, pointed, expand, spectrum, census, verify, fgl.

Every command writes one JSON document to stdout.  Exit status is 0 on
success, 2 when a verification fails, 1 on a usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .graphs import (
    Hypergraph,
    RootedGraph,
    chordal_factorization,
    csf,
    is_acyclic,
    parse_graph,
    pointed_csf,
)
from .group_algebra import chordal_product, forest_product, hyperforest_product
from .irreps import SPECTRUM_MAX_N, spectrum_summary
from .series import FGL_MAX_DEGREE, PowerSeries, builtin_series, formal_group_law
from .suites import SUITES, census, run_suite
from .symfun import BASES, PointedSymFun, SymFun, positivity

ALL_BASES = (*BASES, "pointed-e", "pointed-schur")
EXIT_OK, EXIT_USAGE, EXIT_FAILED = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _load_json_arg(args) -> object:
    if getattr(args, "file", None):
        text = Path(args.file).read_text()
    elif getattr(args, "graph", None):
        text = args.graph
    else:
        raise UsageError("give --graph or --file")
    return text


def _graph(args):
    g = parse_graph(_load_json_arg(args))
    root = getattr(args, "root", None)
    if root is not None:
        base = g.graph if isinstance(g, RootedGraph) else g
        if isinstance(base, Hypergraph):
            raise UsageError("rooted hypergraphs are not supported")
        if not 1 <= root <= base.n:
            raise UsageError(f"root {root} outside 1..{base.n}")
        g = RootedGraph(base, root)
    return g


def _order(args, g):
    if not args.order:
        return None
    order = json.loads(args.order)
    return [tuple(e) for e in order]


def cmd_csf(args) -> tuple[dict, int]:
    g = _graph(args)
    if isinstance(g, RootedGraph):
        g = g.graph
    f = csf(g)
    basis = args.basis or "p"
    if basis not in BASES:
        raise UsageError("csf takes a basis among p, e, m, s")
    return positivity(f, basis).to_json(), EXIT_OK


def cmd_pointed(args) -> tuple[dict, int]:
    g = _graph(args)
    if not isinstance(g, RootedGraph):
        raise UsageError("pointed needs --root or a rooted graph")
    f = pointed_csf(g)
    if args.basis and args.basis != "p":
        return positivity(f, args.basis).to_json(), EXIT_OK
    return f.to_json(), EXIT_OK


def _symfun_from_file(data):
    if data.get("terms") and isinstance(data["terms"][0]["key"], dict):
        return PointedSymFun.from_json(data)
    return SymFun.from_json(data)


def cmd_expand(args) -> tuple[dict, int]:
    if args.basis is None:
        raise UsageError("expand needs --basis")
    text = _load_json_arg(args)
    data = json.loads(text) if text.strip().startswith("{") else None
    if data is not None and "terms" in data:
        f = _symfun_from_file(data)
    else:
        g = _graph(args)
        if isinstance(g, RootedGraph):
            f = pointed_csf(g)
        elif args.basis.startswith("pointed"):
            raise UsageError("pointed bases need --root")
        else:
            f = csf(g)
    if isinstance(f, SymFun) and args.basis.startswith("pointed"):
        raise UsageError("pointed bases need pointed input")
    return positivity(f, args.basis).to_json(), EXIT_OK


def operator_for(g, order=None):
    """(name, factored operator) for a forest, hyperforest, chordal graph or any graph."""
    if isinstance(g, RootedGraph):
        g = g.graph
    if isinstance(g, Hypergraph):
        if not is_acyclic(g)[0]:
            raise UsageError("hypergraph is not a hyperforest")
        return "hyperforest", hyperforest_product(g, order)
    if not g.is_simple():
        raise UsageError("spectrum needs a simple graph")
    if is_acyclic(g)[0]:
        return "forest", forest_product(g, order)
    if chordal_factorization(g, order) is not None:
        return "chordal", chordal_product(g, order)
    return "edge-product", forest_product(g, order)


def cmd_spectrum(args) -> tuple[dict, int]:
    g = _graph(args)
    name, alpha = operator_for(g, _order(args, g))
    summary = spectrum_summary(alpha, tolerance=args.tolerance, max_n=args.max_n or SPECTRUM_MAX_N)
    out = {"operator": name, "graph": (g.graph if isinstance(g, RootedGraph) else g).to_json()}
    out.update(summary.to_json())
    return out, EXIT_OK


def cmd_census(args) -> tuple[dict, int]:
    return census(args.max_n or 8, args.tolerance), EXIT_OK


def cmd_verify(args) -> tuple[dict, int]:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    reports = [
        run_suite(name, timing=args.timing, max_n=args.max_n, degree=args.degree, deep=args.deep, tolerance=args.tolerance)
        for name in names
    ]
    ok = all(r["ok"] for r in reports)
    out = reports[0] if len(reports) == 1 else {"suites": reports, "ok": ok}
    return out, EXIT_OK if ok else EXIT_FAILED


def _series_from_file(path: str, degree: int) -> PowerSeries:
    data = json.loads(Path(path).read_text())
    if "series" in data:
        return PowerSeries(data["series"]).truncate(degree)
    seq = [int(a) for a in data["sequence"]][:degree]
    return PowerSeries.from_sequence(seq, data.get("kind", "ogf")).truncate(degree)


def cmd_fgl(args) -> tuple[dict, int]:
    degree = args.degree or 5
    if degree > FGL_MAX_DEGREE:
        raise UsageError(f"degree limited to {FGL_MAX_DEGREE}")
    if args.file:
        f = _series_from_file(args.file, degree)
        label = args.file
    elif args.sequence:
        steps = json.loads(args.steps) if args.steps else None
        f = builtin_series(args.sequence, degree, steps)
        label = args.sequence
    else:
        raise UsageError("give --sequence or --file")
    law = formal_group_law(f, degree)
    report = positivity(law, args.basis or "s").to_json()
    report["sequence"] = label
    report["degree"] = degree
    return report, EXIT_OK


COMMANDS = {
    "csf": cmd_csf,
    "pointed": cmd_pointed,
    "expand": cmd_expand,
    "spectrum": cmd_spectrum,
    "census": cmd_census,
    "verify": cmd_verify,
    "fgl": cmd_fgl,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--graph", help="JSON graph or a family name such as P_4, K_3, C_5")
    common.add_argument("--file", help="read the graph, symmetric function or series JSON from a file")
    common.add_argument("--root", type=int)
    common.add_argument("--basis", choices=ALL_BASES)
    common.add_argument("--order", help="edge order as a JSON list of edges")
    common.add_argument("--tolerance", type=float, default=1e-9)
    common.add_argument("--max-n", type=int)
    common.add_argument("--degree", type=int)
    common.add_argument("--deep", action="store_true", help="include long-running optional items")
    common.add_argument("--json", action="store_true", help="compact single-line JSON")

    parser = _Parser(prog="chromsym", description="Chromatic symmetric functions and their group-algebra operators.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in COMMANDS:
        p = sub.add_parser(name, parents=[common])
        if name == "verify":
            p.add_argument("suite", choices=[*SUITES, "all"])
            p.add_argument("--timing", action="store_true", help="add wall-clock seconds to the report")
        if name == "fgl":
            p.add_argument("--sequence", help="built-in sequence name")
            p.add_argument("--steps", help="step set for L-admissible-paths as a JSON list")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        out, code = COMMANDS[args.command](args)
    except (UsageError, ValueError, KeyError, OSError) as exc:
        print(f"chromsym {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.json:
        print(json.dumps(out, separators=(",", ":")))
    else:
        print(json.dumps(out, indent=2))
    return code


if __name__ == "__main__":
    raise SystemExit(main())
