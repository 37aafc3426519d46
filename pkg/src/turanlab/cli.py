"""Command-line entry point: ``turanlab <subcommand> ...``.

Exit status is 0 on success, 1 on a usage or input error and 2 when a check
ran and failed.  JSON output is one object per line.
"""

from __future__ import annotations

import argparse
import inspect
import json
import re
import sys
import time
from datetime import datetime, timezone
from pathlib import Path

from .config import load_config
from .constructions import SPEC_BUILDERS, complete_bipartite, construction_spec
from .counting import Pattern, count_cycles, count_paths, count_walks, default_workers
from .forbidden import ForbiddenSet, is_free
from .graph import (Graph, GraphError, complete_graph, cycle_graph, path_graph, petersen_graph,
                    random_graph)
from .io import read_graph, write_graph
from .reductions import BIPARTITION, CYCLIC, estimate_retention
from .search import exact_extremal, table_csv
from .spectral import path_upper_bound_check, walk_chain_check
from .verify import SUITES, run_suite

EXIT_OK, EXIT_USAGE, EXIT_FAILED = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


# ---------------------------------------------------------------------------
# graph lookup

_NAMED = [
    (re.compile(r"petersen"), lambda m: petersen_graph()),
    (re.compile(r"k_?\{?(\d+),(\d+)\}?"), lambda m: complete_bipartite(int(m[1]), int(m[2]))),
    (re.compile(r"k(\d)(\d)"), lambda m: complete_bipartite(int(m[1]), int(m[2]))),
    (re.compile(r"k_?(\d+)"), lambda m: complete_graph(int(m[1]))),
    (re.compile(r"c_?(\d+)"), lambda m: cycle_graph(int(m[1]))),
    (re.compile(r"p_?(\d+)"), lambda m: path_graph(int(m[1]))),
]


def named_graph(name: str) -> Graph | None:
    """Built-in graphs: petersen, k_{a,b} (also k2,3 or k23), kN, cN, pN.

    A bare two-digit ``kab`` means K_{a,b}; write ``k_12`` for the complete graph.
    """
    key = name.lower()
    for pattern, build in _NAMED:
        m = pattern.fullmatch(key)
        if m:
            return build(m)
    return None


def resolve_graph(spec: str, fmt: str | None = None) -> Graph:
    """Read ``spec`` as a file if it exists, else as a built-in name (extension ignored)."""
    path = Path(spec)
    if path.is_file():
        if fmt is None:
            fmt = "graph6" if path.suffix in (".g6", ".graph6") else "edge-list"
        return read_graph(path, fmt)
    g = named_graph(path.stem if path.suffix in (".el", ".g6", ".graph6", ".txt") else spec)
    if g is None:
        raise UsageError(f"no such graph file or built-in name: {spec!r}")
    return g


def _emit(obj: dict) -> None:
    print(json.dumps(obj, sort_keys=True))


def _parse_params(items: list[str]) -> dict[str, int]:
    params = {}
    for item in items:
        key, sep, value = item.partition("=")
        if not sep:
            raise UsageError(f"--param expects key=value, got {item!r}")
        try:
            params[key.strip()] = int(value)
        except ValueError:
            raise UsageError(f"--param {key} must be an integer") from None
    return params


# ---------------------------------------------------------------------------
# subcommands

def cmd_construct(args) -> int:
    spec = construction_spec(args.name, **_parse_params(args.param))
    if args.spec:
        ok, detail = spec.check() if args.check else (True, None)
        out = spec.to_dict()
        if detail is not None:
            out["check"] = {"ok": ok, **detail}
        _emit(out)
        return EXIT_OK if ok else EXIT_FAILED
    sys.stdout.write(write_graph(spec.graph, args.format).decode())
    return EXIT_OK


def cmd_count(args) -> int:
    g = resolve_graph(args.graph, args.format)
    chosen = [(k, fn) for k, fn in ((args.cycle, count_cycles), (args.path, count_paths),
                                    (args.walk, count_walks)) if k is not None]
    if len(chosen) != 1:
        raise UsageError("give exactly one of --cycle, --path, --walk")
    k, fn = chosen[0]
    report = fn(g, k)
    print(report.to_json())
    return EXIT_OK


def cmd_forbid_check(args) -> int:
    g = resolve_graph(args.graph, args.format)
    res = is_free(g, ForbiddenSet.parse(args.lengths))
    if res.free:
        print("free")
        return EXIT_OK
    print(" ".join(map(str, res.witness)))
    return EXIT_FAILED


def cmd_reduce(args) -> int:
    if args.graph is not None:
        g = resolve_graph(args.graph, args.format)
    elif args.lemma == BIPARTITION:
        g = complete_bipartite(4, 4)
    else:
        g = complete_graph(args.classes or 5)
    if args.cycle is not None:
        length = args.cycle
    elif args.lemma == BIPARTITION:
        length = 4
    else:
        length = args.classes or 5
    est = estimate_retention(g, length, args.lemma, classes=args.classes,
                             trials=args.trials, seed=args.seed)
    print(est.to_json())
    return EXIT_OK


def cmd_spectral(args) -> int:
    g = resolve_graph(args.graph, args.format)
    tol = load_config(args.config)
    rep = walk_chain_check(g, args.l, eps=tol["walk.eps"], tol=tol["spectral.tol"])
    out = rep.to_dict()
    ok = bool(rep.chain_holds)
    if args.forbid is not None:
        c = args.forbid
        if c < 3:
            raise UsageError("--forbid takes a cycle length >= 3")
        free = is_free(g, {c}).free
        which, k = ("odd", (c - 1) // 2) if c % 2 else ("even", c // 2)
        bound = path_upper_bound_check(g, args.l, which, k)
        out["path_bound"] = {**bound.to_dict(), "free": free}
        if bound.asserted and free and not bound.holds:
            ok = False
    _emit(out)
    return EXIT_OK if ok else EXIT_FAILED


def cmd_search(args) -> int:
    target = Pattern.parse(args.target)
    forbidden = ForbiddenSet.parse(args.forbid)
    records = [exact_extremal(n, target, forbidden, args.method) for n in args.n]
    sys.stdout.write(table_csv(records))
    return EXIT_OK


_SCALAR_FLAGS = ("k", "l", "trials", "seed")


def _suite_params(name: str, args) -> dict:
    """Map the shared verify flags onto the parameters ``name`` accepts."""
    sig = inspect.signature(SUITES[name]).parameters
    params = {}
    for flag in _SCALAR_FLAGS:
        value = getattr(args, flag)
        if value is None:
            continue
        if flag in sig:
            params[flag] = value
        elif flag == "l" and "ls" in sig:
            params["ls"] = (value,)
        elif flag == "seed" and "seeds" in sig:
            params["seeds"] = (value,)
    if args.n is not None:
        if "ns" in sig:
            params["ns"] = tuple(args.n)
        elif "n" in sig:
            params["n"] = args.n[0]
        elif "max_n" in sig:
            params["max_n"] = args.n[0]
    if name == "oddgirth-identity" and args.l not in (None, 2):
        params["expected"] = None
    if "tol" in sig:
        params["tol"] = load_config(args.config)
    return params


def cmd_verify(args) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    if args.suite != "all" and args.suite not in SUITES:
        raise UsageError(f"unknown suite {args.suite!r}; choose from {sorted(SUITES)} or 'all'")
    ok = True
    csv_parts = []
    for name in names:
        suite = run_suite(name, **_suite_params(name, args))
        out = suite.to_dict()
        out["timestamp"] = datetime.now(timezone.utc).isoformat(timespec="seconds")
        _emit(out)
        csv_parts.append(suite.to_csv() if not csv_parts else suite.to_csv().split("\n", 1)[1])
        ok &= suite.passed
    if args.csv:
        Path(args.csv).write_text("".join(csv_parts))
    return EXIT_OK if ok else EXIT_FAILED


def cmd_bench(args) -> int:
    """Time the cycle and path counters on seeded G(n, p) graphs."""
    workers = args.workers if args.workers is not None else default_workers()
    for n in args.n:
        g = random_graph(n, args.p, args.seed)
        for name, fn in (("cycle", count_cycles), ("path", count_paths)):
            started = time.perf_counter()
            report = fn(g, args.k, workers=workers)
            _emit({"n": n, "m": g.m, "pattern": name, "k": args.k, "count": str(report.count),
                   "workers": workers, "seconds": round(time.perf_counter() - started, 4)})
    return EXIT_OK


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="turanlab", description="Exact counting and extremal checks for cycles and paths.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def graph_args(sp, required=True):
        sp.add_argument("--graph", required=required,
                        help="edge-list/graph6 file, or a built-in name (petersen, k_{2,3}, c5, k5, p4)")
        sp.add_argument("--format", choices=("edge-list", "graph6"), default=None,
                        help="file format (default: by extension, .g6 is graph6)")

    sp = sub.add_parser("construct", help="build a named construction")
    sp.add_argument("name", choices=sorted(SPEC_BUILDERS))
    sp.add_argument("--param", action="append", default=[], metavar="KEY=VALUE")
    sp.add_argument("--spec", action="store_true", help="print the construction spec as JSON")
    sp.add_argument("--check", action="store_true", help="with --spec, also verify it (exit 2 on failure)")
    sp.add_argument("--format", choices=("edge-list", "graph6"), default="edge-list")
    sp.set_defaults(func=cmd_construct)

    sp = sub.add_parser("count", help="count cycles, paths or walks")
    graph_args(sp)
    sp.add_argument("--cycle", type=int)
    sp.add_argument("--path", type=int)
    sp.add_argument("--walk", type=int)
    sp.set_defaults(func=cmd_count)

    sp = sub.add_parser("forbid-check", help="check that no cycle length in the set occurs")
    graph_args(sp)
    sp.add_argument("--lengths", required=True, help="e.g. 3-5,8")
    sp.set_defaults(func=cmd_forbid_check)

    sp = sub.add_parser("reduce", help="estimate cycle retention under a random partition")
    sp.add_argument("--lemma", choices=(BIPARTITION, CYCLIC), required=True)
    sp.add_argument("--classes", type=int)
    sp.add_argument("--trials", type=int, default=10_000)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--cycle", type=int, help="cycle length tracked (default 4, or the class count)")
    graph_args(sp, required=False)
    sp.set_defaults(func=cmd_reduce)

    sp = sub.add_parser("spectral", help="spectral radius and the walk/path chain")
    graph_args(sp)
    sp.add_argument("--l", type=int, required=True)
    sp.add_argument("--forbid", type=int, help="forbidden cycle length, selects the path bound")
    sp.add_argument("--config")
    sp.set_defaults(func=cmd_spectral)

    sp = sub.add_parser("search", help="exact ex(n, target, forbidden) for small n")
    sp.add_argument("--n", type=int, nargs="+", required=True)
    sp.add_argument("--target", required=True, help="cycle:K or path:K")
    sp.add_argument("--forbid", required=True, help="forbidden cycle lengths, e.g. 3,4")
    sp.add_argument("--method", choices=("naive", "pruned"), default="pruned")
    sp.set_defaults(func=cmd_search)

    sp = sub.add_parser("verify", help="run a verification suite (or all)")
    sp.add_argument("suite", help=f"one of {', '.join(SUITES)} or all")
    for flag in _SCALAR_FLAGS:
        sp.add_argument(f"--{flag}", type=int)
    sp.add_argument("--n", type=int, nargs="+")
    sp.add_argument("--csv", help="also write the case table to this CSV file")
    sp.add_argument("--config", help="tolerance overrides, key=value per line")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("bench", help="time the counting kernels")
    sp.add_argument("--n", type=int, nargs="+", default=[20, 30, 40])
    sp.add_argument("--p", type=float, default=0.3)
    sp.add_argument("--k", type=int, default=5)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--workers", type=int)
    sp.set_defaults(func=cmd_bench)
    return p


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, GraphError, ValueError, OSError) as exc:
        print(f"turanlab {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())
