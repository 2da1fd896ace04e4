"""Command-line front end.

Subcommands: solve, construct, verify, generate, census, bounds.
Exit codes: 0 success, 1 usage error, 2 verification or bound violation,
3 budget exhausted.

IPF interchange format: a JSON object with a "graph6" string and an
"edges" list of [u, v] pairs (a construct certificate works directly,
since its "ipf" fragment carries the edges).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .bounds import census, ck_lower_report, rho_tree
from .constructive import (
    ConstructionError, ipf_23_with_2factor, ipf_blocktree, ipf_cubic,
    ipf_ham23,
)
from .families import FamilySpec, generate
from .graph import (
    Graph, Graph6Error, GraphError, parse_adjlist, parse_graph6,
    two_factor_search, write_adjlist, write_graph6,
)
from .ipf import Ipf, IpfError
from .solver import (
    DEFAULT_NODE_LIMIT, DEFAULT_TIME_LIMIT, EXHAUSTIVE_CAP, rho_exact,
    rho_exhaustive,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VIOLATION = 2
EXIT_BUDGET = 3


class CliError(Exception):
    def __init__(self, message: str, code: int = EXIT_USAGE):
        super().__init__(message)
        self.code = code


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}")


def _read_graph(args) -> Graph:
    text = _read_text(args.input).strip()
    if not text:
        raise CliError("empty input")
    try:
        if args.format == "graph6":
            return parse_graph6(text.splitlines()[0].strip())
        return parse_adjlist(text)
    except (Graph6Error, GraphError, ValueError) as exc:
        raise CliError(f"cannot parse input graph: {exc}")


def _emit(args, text: str) -> None:
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def _strip_timings(obj):
    if isinstance(obj, dict):
        return {k: _strip_timings(v) for k, v in obj.items()
                if k not in ("seconds",)}
    if isinstance(obj, list):
        return [_strip_timings(v) for v in obj]
    return obj


def _json_out(args, obj) -> str:
    if getattr(args, "stable", False):
        obj = _strip_timings(obj)
    return json.dumps(obj, indent=2, sort_keys=True)


def _default_time_budget() -> float:
    raw = os.environ.get("IPFKIT_BUDGET", "")
    if not raw:
        return DEFAULT_TIME_LIMIT
    try:
        return float(raw)
    except ValueError:
        raise CliError(f"IPFKIT_BUDGET must be a number, got {raw!r}")


def _cmd_solve(args) -> int:
    g = _read_graph(args)
    budget = args.budget if args.budget is not None else _default_time_budget()
    if args.exhaustive:
        if g.n > EXHAUSTIVE_CAP:
            raise CliError(
                f"exhaustive solver is capped at {EXHAUSTIVE_CAP} vertices")
        res = rho_exhaustive(g)
    else:
        res = rho_exact(g, node_limit=args.nodes, time_limit=budget)
    if args.json:
        payload = res.to_json_fragment()
        payload["graph6"] = write_graph6(g)
        _emit(args, _json_out(args, payload))
    else:
        lines = [f"n = {g.n}", f"rho = {res.rho}",
                 f"optimal = {res.optimal}", "paths:"]
        lines += ["  " + " ".join(map(str, p)) for p in res.witness.paths()]
        _emit(args, "\n".join(lines))
    return EXIT_OK if res.optimal else EXIT_BUDGET


def _cmd_construct(args) -> int:
    g = _read_graph(args)
    method = args.method
    if method == "auto":
        if g.is_cubic() and g.is_connected():
            method = "cubic"
        elif g.is_23_graph() and g.is_connected() \
                and two_factor_search(g, min_cycle_len=5,
                                      minimize_cycles=True) is not None:
            method = "2factor"
        elif g.n <= EXHAUSTIVE_CAP:
            method = "exact"
        else:
            raise CliError("no construction applies to this input", EXIT_VIOLATION)
    try:
        if method == "cubic":
            cert = ipf_cubic(g)
            payload = cert.to_json()
            ipf = cert.ipf
        else:
            if method == "ham23":
                ipf = ipf_ham23(g)
            elif method == "blocktree":
                ipf = ipf_blocktree(g)
            elif method == "2factor":
                f = two_factor_search(g, min_cycle_len=5, minimize_cycles=True)
                if f is None:
                    raise CliError("no suitable 2-factor found", EXIT_VIOLATION)
                ipf = ipf_23_with_2factor(g, f)
            elif method == "exact":
                ipf = rho_exhaustive(g).witness
            else:
                raise CliError(f"unknown method {method!r}")
            payload = {"graph6": write_graph6(g), "n": g.n,
                       "method": method, "ipf": ipf.to_json_fragment(),
                       "verified": True}
    except (ConstructionError, GraphError, IpfError) as exc:
        print(f"construction failed: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    if args.json:
        _emit(args, _json_out(args, payload))
    else:
        lines = [f"n = {g.n}", f"paths = {ipf.path_count}"]
        if "trace" in payload:
            lines.append("trace = " + " -> ".join(payload["trace"]))
        lines.append("paths:")
        lines += ["  " + " ".join(map(str, p)) for p in ipf.paths()]
        _emit(args, "\n".join(lines))
    return EXIT_OK


def _cmd_verify(args) -> int:
    text = _read_text(args.input)
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CliError(f"input is not JSON: {exc}")
    try:
        g = parse_graph6(doc["graph6"])
        edges = doc.get("edges")
        if edges is None:
            edges = doc["ipf"]["edges"]
        edges = [tuple(e) for e in edges]
    except (KeyError, TypeError, Graph6Error) as exc:
        raise CliError(f"malformed IPF document: {exc}")
    try:
        ipf = Ipf.from_edges(g, edges)
    except IpfError as exc:
        print(f"invalid IPF: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    expected = doc.get("ipf", {}).get("path_count", doc.get("path_count"))
    if expected is not None and expected != ipf.path_count:
        print(f"path count mismatch: document says {expected}, "
              f"edges give {ipf.path_count}", file=sys.stderr)
        return EXIT_VIOLATION
    if args.json:
        _emit(args, _json_out(args, {"valid": True,
                                     "path_count": ipf.path_count}))
    else:
        _emit(args, f"valid IPF with {ipf.path_count} paths")
    return EXIT_OK


def _parse_params(raw: str) -> dict:
    params = {}
    if not raw:
        return params
    for part in raw.split(","):
        if "=" not in part:
            raise CliError(f"parameter {part!r} is not key=value")
        key, val = part.split("=", 1)
        try:
            params[key.strip()] = int(val)
        except ValueError:
            # tuple-valued parameters like subdivided=0:2
            try:
                params[key.strip()] = tuple(int(x) for x in val.split(":"))
            except ValueError:
                raise CliError(f"parameter value {val!r} is not an integer "
                               "or colon-separated integers")
    return params


def _cmd_generate(args) -> int:
    spec = FamilySpec(args.family, _parse_params(args.params))
    try:
        g = generate(spec)
    except GraphError as exc:
        raise CliError(str(exc))
    out = write_graph6(g) if args.format == "graph6" else write_adjlist(g)
    if args.json:
        _emit(args, _json_out(args, {"family": args.family,
                                     "params": spec.params, "n": g.n,
                                     "edges": len(g.edges),
                                     "graph6": write_graph6(g)}))
    else:
        _emit(args, out)
    return EXIT_OK


def _cmd_census(args) -> int:
    text = _read_text(args.input)
    budget = args.budget if args.budget is not None else _default_time_budget()
    report = census(text.splitlines(), mode=args.mode, jobs=args.jobs,
                    node_limit=args.nodes, time_limit=budget)
    if args.json:
        _emit(args, _json_out(args, report.to_json()))
    else:
        lines = [f"graphs processed: {report.graphs_processed}",
                 f"skipped: {report.skipped}",
                 f"violations: {len(report.violations)}"]
        for n, r in sorted(report.n_to_max_rho.items()):
            lines.append(f"  max rho at n={n}: {r}")
        for err in report.errors:
            lines.append(f"  error: {err}")
        _emit(args, "\n".join(lines))
    if report.violations:
        return EXIT_VIOLATION
    if report.budget_exhausted:
        return EXIT_BUDGET
    return EXIT_OK


def _cmd_bounds(args) -> int:
    if args.ck is not None:
        rep = ck_lower_report(args.ck)
        if args.json:
            _emit(args, _json_out(args, rep.to_json()))
        else:
            _emit(args, str(rep.value))
        return EXIT_OK
    if args.tree:
        k, h = args.tree
        value = rho_tree(k, h)
        if args.json:
            _emit(args, _json_out(args, {"k": k, "h": h,
                                         "value": str(value),
                                         "formula": "tree_closed_form"}))
        else:
            _emit(args, str(value))
        return EXIT_OK
    raise CliError("bounds requires --ck K or --tree K H")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ipfkit",
        description="Induced path factors: exact solving, certified "
                    "construction, families, bounds and census runs.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_format=True):
        p.add_argument("--input", default="-",
                       help="input file, or - for stdin")
        if with_format:
            p.add_argument("--format", choices=("graph6", "adjlist"),
                           default="graph6")
        p.add_argument("--output", help="write output to this file")
        p.add_argument("--json", action="store_true",
                       help="emit JSON instead of a table")
        p.add_argument("--stable", action="store_true",
                       help="suppress timing fields in JSON output")

    p = sub.add_parser("solve", help="exact minimum IPF")
    common(p)
    p.add_argument("--exhaustive", action="store_true",
                   help="use the edge-subset oracle instead of the kernel")
    p.add_argument("--nodes", type=int, default=DEFAULT_NODE_LIMIT)
    p.add_argument("--budget", type=float, default=None,
                   help="time budget in seconds (default from IPFKIT_BUDGET)")
    p.set_defaults(fn=_cmd_solve)

    p = sub.add_parser("construct", help="certified IPF construction")
    common(p)
    p.add_argument("--method", default="auto",
                   choices=("cubic", "ham23", "blocktree", "2factor",
                            "exact", "auto"))
    p.set_defaults(fn=_cmd_construct)

    p = sub.add_parser("verify", help="check an IPF interchange document")
    common(p, with_format=False)
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("generate", help="emit a named family graph")
    common(p)
    p.add_argument("--family", required=True)
    p.add_argument("--params", default="",
                   help="comma-separated key=value integers, e.g. n=9 "
                        "(colon-separated tuples: subdivided=0:2)")
    p.set_defaults(fn=_cmd_generate)

    p = sub.add_parser("census", help="verify a graph6 stream")
    common(p, with_format=False)
    p.add_argument("--mode", default="both",
                   choices=("verify_theorem", "exact_rho", "both"))
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--nodes", type=int, default=DEFAULT_NODE_LIMIT)
    p.add_argument("--budget", type=float, default=None,
                   help="per-graph time budget in seconds")
    p.set_defaults(fn=_cmd_census)

    p = sub.add_parser("bounds", help="closed-form bound values")
    common(p, with_format=False)
    p.add_argument("--ck", type=int, help="lower bound for degree k")
    p.add_argument("--tree", type=int, nargs=2, metavar=("K", "H"),
                   help="perfect (K-1)-ary tree path count at height H")
    p.set_defaults(fn=_cmd_bounds)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.fn(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except (GraphError, IpfError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VIOLATION


if __name__ == "__main__":
    sys.exit(main())
