"""Command-line interface.

Four subcommands: analyze (structural report for input graphs), color
(exact or constructive colorings), verify (the exhaustive suites), and
gen (generators: Mycielski tower, closure samples, enumeration).

Reports are JSON on stdout, deterministic except for timing fields.
Exit codes: 0 success, 1 verification or certification failure, 2 bad
input or violated precondition, 3 size cap exceeded.  The environment
variable BULLCHROME_MAXN overrides the input-size cap for parsing.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time
from typing import Any

from .bounds import bound_approx, bound_repr, power_bound_holds
from .canon import CANON_CAP, canonical_form, enumerate_graphs
from .coloring import (
    CHI_CAP,
    chromatic_number,
    color_bullfree,
    color_nperfect,
)
from .errors import (
    CapExceededError,
    CertificationError,
    GraphFormatError,
    PreconditionError,
)
from .extremal import mycielski_graph, sample_cstar
from .graph import (
    MAX_VERTICES,
    Graph,
    emit_graph6,
    parse_edgelist,
    parse_graph6,
)
from .modular import is_prime, modular_decomposition
from .recognition import (
    T_CAP,
    clique_number,
    find_bull,
    find_triangle,
    is_n_perfect,
    is_perfect,
    t_parameter,
)
from .verify import SUITES, run_suite

_GRAPH6_CHARS = frozenset(chr(c) for c in range(63, 127))


def _version() -> str:
    from . import __version__

    return __version__


def _input_cap() -> int:
    raw = os.environ.get("BULLCHROME_MAXN")
    if raw is None:
        return MAX_VERTICES
    try:
        return int(raw)
    except ValueError:
        raise GraphFormatError(
            f"BULLCHROME_MAXN must be an integer, got {raw!r}", reason="range"
        ) from None


def _sniff_format(text: str) -> str:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise GraphFormatError("input is empty", reason="empty")
    if lines[0].startswith(">>graph6<<"):
        return "graph6"
    if all(" " not in ln and set(ln) <= _GRAPH6_CHARS for ln in lines):
        return "graph6"
    return "edgelist"


def _read_graphs(path: str, fmt: str) -> tuple[list[Graph], dict[str, Any]]:
    if path == "-":
        text = sys.stdin.read()
        shown = "<stdin>"
    else:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
        shown = path
    cap = _input_cap()
    if fmt == "auto":
        fmt = _sniff_format(text)
    if fmt == "graph6":
        graphs = [
            parse_graph6(ln.strip(), cap=cap)
            for ln in text.splitlines()
            if ln.strip()
        ]
        if not graphs:
            raise GraphFormatError("no graph6 lines in input", reason="empty")
    else:
        graphs = [parse_edgelist(text, cap=cap)]
    meta = {
        "path": shown,
        "format": fmt,
        "sha256": hashlib.sha256(text.encode("utf-8")).hexdigest(),
        "graphs": len(graphs),
    }
    return graphs, meta


def _graph_key(g: Graph) -> str:
    if g.n <= CANON_CAP:
        return canonical_form(g).hex()
    return hashlib.sha256(emit_graph6(g).encode("ascii")).hexdigest()


def _print_report(
    command: str, payload: dict[str, Any], t0: float, out: str | None = None
) -> None:
    report: dict[str, Any] = {"command": command, "version": _version()}
    report.update(payload)
    report["timing_ms"] = int(1000 * (time.time() - t0))
    if out is None:
        json.dump(report, sys.stdout, indent=2)
        sys.stdout.write("\n")
    else:
        with open(out, "w", encoding="utf-8") as fh:
            json.dump(report, fh, indent=2)
            fh.write("\n")


def _modular_summary(g: Graph) -> dict[str, Any]:
    if g.n == 0:
        return {"kind": "empty"}
    tree = modular_decomposition(g)
    prime_sizes: list[int] = []

    def walk(node) -> None:
        if node.kind == "prime" and node.quotient is not None:
            prime_sizes.append(node.quotient.n)
        for c in node.children:
            walk(c)

    walk(tree)
    return {
        "kind": tree.kind,
        "children": len(tree.children),
        "prime_quotient_sizes": sorted(prime_sizes),
    }


def cmd_analyze(args: argparse.Namespace) -> int:
    t0 = time.time()
    graphs, meta = _read_graphs(args.input, args.format)
    results = []
    for g in graphs:
        entry: dict[str, Any] = {
            "key": _graph_key(g),
            "n": g.n,
            "edges": g.edge_count(),
        }
        bull = find_bull(g)
        entry["bull_free"] = bull is None
        if bull is not None:
            entry["bull"] = list(bull)
        tri = find_triangle(g)
        entry["triangle_free"] = tri is None
        perf = is_perfect(g)
        entry["perfect"] = perf.holds
        if not perf.holds:
            entry["perfect_witness"] = perf.to_json()["witness"]
        nperf = is_n_perfect(g)
        entry["n_perfect"] = nperf.holds
        if not nperf.holds:
            entry["n_perfect_witness"] = nperf.to_json()["details"]
        entry["prime"] = is_prime(g)
        omega, _ = clique_number(g)
        entry["omega"] = omega
        if g.n <= args.chi_cap:
            entry["chi"] = chromatic_number(g, cap=args.chi_cap)[0]
        else:
            entry["chi"] = None
            entry["chi_skipped"] = f"n={g.n} over cap {args.chi_cap}"
        if g.n <= args.t_cap:
            entry["t"] = t_parameter(g, cap=args.t_cap)[0]
        else:
            entry["t"] = None
            entry["t_skipped"] = f"n={g.n} over cap {args.t_cap}"
        if not entry["bull_free"]:
            entry["bound_skipped"] = "not bull-free"
        elif entry["chi"] is None or entry["t"] is None:
            entry["bound_skipped"] = "chi or t not computed"
        else:
            entry["bound"] = {
                "formula": bound_repr(omega, entry["t"], 4, 13),
                "approx": bound_approx(omega, entry["t"], 4, 13),
                "holds": power_bound_holds(entry["chi"], omega, entry["t"], 4, 13),
            }
        entry["modular"] = _modular_summary(g)
        results.append(entry)
    results.sort(key=lambda e: e["key"])
    _print_report("analyze", {"input": meta, "results": results}, t0, args.out)
    return 0


def _dot_colored(g: Graph, assignment: tuple[int, ...], count: int) -> str:
    out = ["graph G {", "  node [style=filled];"]
    for v in range(g.n):
        hue = assignment[v] / max(count, 1)
        out.append(
            f'  {v} [label="{v}:{assignment[v]}", fillcolor="{hue:.3f} 0.45 0.95"];'
        )
    for u, v in g.edges():
        out.append(f"  {u} -- {v};")
    out.append("}")
    return "\n".join(out) + "\n"


def cmd_color(args: argparse.Namespace) -> int:
    t0 = time.time()
    graphs, meta = _read_graphs(args.input, args.format)
    if args.dot is not None and len(graphs) != 1:
        raise PreconditionError(
            f"--dot needs exactly one input graph, got {len(graphs)}"
        )
    results = []
    for g in graphs:
        entry: dict[str, Any] = {"key": _graph_key(g), "n": g.n, "mode": args.mode}
        if args.mode == "exact":
            chi, col = chromatic_number(g, cap=args.chi_cap)
            entry["count"] = chi
        else:
            if args.t is not None:
                t_val, t_source = args.t, "given"
            elif g.n <= T_CAP:
                t_val, _ = t_parameter(g)
                t_source = "exact"
            else:
                raise PreconditionError(
                    f"pass --t: exact t parameter capped at {T_CAP} vertices, "
                    f"got {g.n}"
                )
            if args.mode == "layered":
                nperf = is_n_perfect(g)
                if not nperf.holds:
                    raise PreconditionError(
                        "layered mode needs an N-perfect input",
                        witness=nperf.to_json(),
                    )
                col, acc = color_nperfect(g, t_val)
            else:
                col, acc = color_bullfree(g, t_val)
            entry["t"] = t_val
            entry["t_source"] = t_source
            entry["count"] = col.count
            entry["account"] = acc.to_json()
        col.verify(g)
        entry["assignment"] = list(col.assignment)
        results.append((g, col, entry))
    if args.dot is not None:
        g, col, _ = results[0]
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(_dot_colored(g, col.assignment, col.count))
    entries = sorted((e for _, _, e in results), key=lambda e: e["key"])
    _print_report("color", {"input": meta, "results": entries}, t0, args.out)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    t0 = time.time()
    names = [args.suite] if args.suite else sorted(SUITES)
    if args.t is not None and "bound" not in names:
        raise PreconditionError("--t applies to the bound suite only")
    reports = []
    all_pass = True
    for name in names:
        kwargs: dict[str, Any] = {}
        if args.max_n is not None:
            kwargs["nmax" if name == "phi" else "max_n"] = args.max_n
        if args.t is not None and name == "bound":
            kwargs["t"] = args.t
        rep = run_suite(name, jobs=args.jobs, **kwargs)
        reports.append(rep)
        all_pass = all_pass and rep["pass"]
    _print_report("verify", {"pass": all_pass, "results": reports}, t0, args.out)
    return 0 if all_pass else 1


def cmd_gen(args: argparse.Namespace) -> int:
    if args.kind == "mycielski":
        sys.stdout.write(emit_graph6(mycielski_graph(args.n)) + "\n")
        return 0
    if args.kind == "enum":
        from .verify import _bullfree_extend

        for g in enumerate_graphs(args.n, extend_filter=_bullfree_extend):
            sys.stdout.write(emit_graph6(g) + "\n")
        return 0
    # closure samples
    recipes = []
    for i in range(args.count):
        g, recipe, cert = sample_cstar(args.t, args.seed + i, args.budget)
        sys.stdout.write(emit_graph6(g) + "\n")
        recipes.append({"seed": args.seed + i, "cert": cert, "recipe": recipe.to_json()})
    if args.recipe_out is not None:
        with open(args.recipe_out, "w", encoding="utf-8") as fh:
            json.dump(recipes, fh, indent=2)
            fh.write("\n")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bullchrome",
        description="Exact analysis, coloring, and exhaustive verification "
        "for bull-free graphs.",
    )
    parser.add_argument("--version", action="version", version=_version())
    sub = parser.add_subparsers(dest="command", required=True)

    pa = sub.add_parser("analyze", help="structural report for input graphs")
    pa.add_argument("input", help="path to a graph file, or - for stdin")
    pa.add_argument(
        "--format", choices=("auto", "graph6", "edgelist"), default="auto"
    )
    pa.add_argument("--chi-cap", type=int, default=CHI_CAP)
    pa.add_argument("--t-cap", type=int, default=T_CAP)
    pa.add_argument("--out", default=None, help="write the JSON report here")
    pa.set_defaults(func=cmd_analyze)

    pc = sub.add_parser("color", help="color input graphs")
    pc.add_argument("input", help="path to a graph file, or - for stdin")
    pc.add_argument(
        "--format", choices=("auto", "graph6", "edgelist"), default="auto"
    )
    pc.add_argument(
        "--mode",
        choices=("exact", "layered", "compose"),
        default="compose",
        help="exact search, the layered colorer, or decompose-then-color",
    )
    pc.add_argument("--t", type=int, default=None, help="class parameter")
    pc.add_argument("--chi-cap", type=int, default=CHI_CAP)
    pc.add_argument("--dot", default=None, help="write a colored DOT file")
    pc.add_argument("--out", default=None, help="write the JSON report here")
    pc.set_defaults(func=cmd_color)

    pv = sub.add_parser("verify", help="run exhaustive verification suites")
    pv.add_argument("--suite", choices=tuple(sorted(SUITES)), default=None)
    pv.add_argument("--max-n", type=int, default=None)
    pv.add_argument(
        "--t",
        type=int,
        default=None,
        help="bound suite: fix the class parameter and restrict to members",
    )
    pv.add_argument("--jobs", type=int, default=1)
    pv.add_argument("--out", default=None, help="write the JSON report here")
    pv.set_defaults(func=cmd_verify)

    pg = sub.add_parser("gen", help="generate graphs as graph6 lines")
    pg.add_argument(
        "--kind", choices=("mycielski", "cstar", "enum"), required=True
    )
    pg.add_argument("-n", type=int, default=3, help="tower index or vertex count")
    pg.add_argument("--t", type=int, default=3, help="closure class parameter")
    pg.add_argument("--seed", type=int, default=0)
    pg.add_argument("--count", type=int, default=1)
    pg.add_argument("--budget", type=int, default=60)
    pg.add_argument("--recipe-out", default=None)
    pg.set_defaults(func=cmd_gen)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except GraphFormatError as e:
        print(f"input error: {e}", file=sys.stderr)
        return 2
    except PreconditionError as e:
        msg = f"precondition failed: {e}"
        if e.witness is not None:
            msg += f" (witness: {e.witness})"
        print(msg, file=sys.stderr)
        return 2
    except CapExceededError as e:
        print(f"cap exceeded: {e}", file=sys.stderr)
        return 3
    except CertificationError as e:
        print(f"certification failure: {e}", file=sys.stderr)
        return 1
    except OSError as e:
        print(f"io error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
