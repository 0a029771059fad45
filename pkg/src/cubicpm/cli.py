"""Command-line entry point: ``cubicpm <command> ...`` prints a JSON report.

Exit codes: 0 success, 1 verification failure or size-limit abort, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction

from . import __version__
from .balanced import balanced_distribution, burl_certificate, fmt_fraction
from .bounds.constants import constant_system, minimal_ceps
from .bounds.kregular import kregular_construct
from .bounds.splitting import split_path
from .bounds.verdict import main2_verdict
from .burls import is_twig
from .errors import CubicPMError, InductionStuck, NoM3, SizeLimit
from .graph_core.cuts import connectivity_report, small_cuts
from .graph_core.fileio import format_graph, graph_digest, read_graph
from .graph_core.generators import generate
from .klee import klee_foliage
from .matching import matching_counts
from .structure.contraction import prune
from .structure.core import has_core
from .structure.decomposition import maximize_decomposition, refine_decomposition, trichotomy
from .structure.twigs import elementary_twigs
from .suites import SUITES, run_suite

SCHEMA = "cubicpm.report/1"


class UsageError(Exception):
    pass


def _ids(text: str) -> list:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"expected a rational like 1/3, got {text!r}") from None


def cmd_count(G, args):
    return matching_counts(G).to_json()


def cmd_cuts(G, args):
    out = connectivity_report(G).to_json()
    out["small_cuts"] = [c.to_json() for c in small_cuts(G, 3)]
    return out


def cmd_burl(G, args):
    X = _ids(args.set)
    cert = burl_certificate(G, X)
    out = {"set": sorted(X), "twig": is_twig(G, X), **cert.to_json()}
    if args.decimal:
        out["min_expected_decimal"] = f"{float(cert.min_expected):.12g}"
    return out


def cmd_balanced(G, args):
    X = _ids(args.set) if args.set else None
    d = balanced_distribution(G, X, target=_fraction(args.target))
    out = d.to_json()
    if args.decimal:
        out["weights_decimal"] = [f"{float(w):.12g}" for _, w in d.support]
    return out


def cmd_decompose(G, args):
    Y = [y.vertices for y in elementary_twigs(G, require_pruned=False)
         if G.n - len(y.vertices) > 1 and len(G.boundary(y.vertices)) in (2, 3)]
    d = maximize_decomposition(G, refine_decomposition(G, Y), Y)
    return {"Y": [sorted(y) for y in Y], "decomposition": d.to_json(G), "trichotomy": trichotomy(G, d, Y)}


def cmd_prune(G, args):
    r = prune(G)
    return {"contractions": r.contractions, "n": r.graph.n, "graph": format_graph(r.graph),
            "origin": [sorted(o) for o in r.origin], "log": [sorted(t) for t in r.log]}


def cmd_core(G, args):
    return has_core(G).to_json()


def cmd_split(G, args):
    p = _ids(args.path)
    if len(p) != 4:
        raise UsageError("--path needs four vertices a,b,c,d")
    return split_path(G, *p).to_json()


def cmd_verdict(G, args):
    return main2_verdict(G).to_json()


def cmd_klee(G, args):
    return klee_foliage(G, _ids(args.set)).to_json()


def cmd_kregular(G, args):
    return kregular_construct(G, args.k).to_json()


GRAPH_COMMANDS = {
    "count": cmd_count, "cuts": cmd_cuts, "burl": cmd_burl, "balanced": cmd_balanced,
    "decompose": cmd_decompose, "prune": cmd_prune, "core": cmd_core, "split": cmd_split,
    "verdict": cmd_verdict, "klee": cmd_klee, "kregular": cmd_kregular,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cubicpm", description=__doc__.splitlines()[0])
    p.add_argument("--no-timing", action="store_true", help="omit the timing field")
    p.add_argument("--decimal", action="store_true", help="add decimal enclosures next to exact values")
    sub = p.add_subparsers(dest="command", required=True)
    for name in GRAPH_COMMANDS:
        s = sub.add_parser(name)
        s.add_argument("file", help="graph file, or - for standard input")
        if name in ("burl", "klee"):
            s.add_argument("--set", required=True, help="comma-separated vertex ids")
        if name == "balanced":
            s.add_argument("--target", default="1/3")
            s.add_argument("--set", default=None)
        if name == "split":
            s.add_argument("--path", required=True, help="a,b,c,d")
        if name == "kregular":
            s.add_argument("--k", type=int, required=True)
    s = sub.add_parser("constants")
    s.add_argument("--c", type=int, default=None)
    s = sub.add_parser("generate")
    s.add_argument("name")
    s.add_argument("params", nargs="*")
    s = sub.add_parser("verify-lemmas")
    s.add_argument("--suite", choices=sorted(SUITES), default=None)
    return p


def _emit(command, digest, results, started, args, out):
    report = {"schema": SCHEMA, "command": command, "input_digest": digest, "results": results,
              "version": __version__}
    if not args.no_timing:
        report["timing"] = {"seconds": round(time.perf_counter() - started, 6)}
    out.write(json.dumps(report, indent=2, sort_keys=True, default=_default) + "\n")


def _default(o):
    if isinstance(o, Fraction):
        return fmt_fraction(o)
    if isinstance(o, (set, frozenset)):
        return sorted(o)
    raise TypeError(f"not serialisable: {type(o).__name__}")


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    started = time.perf_counter()
    try:
        if args.command == "generate":
            params = [int(x) if x.lstrip("-").isdigit() else x for x in args.params]
            out.write(format_graph(generate(args.name, *params)))
            return 0
        if args.command == "constants":
            c = args.c if args.c is not None else minimal_ceps()
            res = constant_system(c).to_json()
            res["minimal_c"] = minimal_ceps()
            _emit("constants", None, res, started, args, out)
            return 0 if res["all_hold"] else 1
        if args.command == "verify-lemmas":
            names = [args.suite] if args.suite else list(SUITES)
            results = [run_suite(n).to_json() for n in names]
            ok = all(r["passed"] for r in results)
            _emit("verify-lemmas", None, {"suites": results, "passed": ok}, started, args, out)
            return 0 if ok else 1
        G = read_graph(args.file, cubic=args.command != "kregular")
        res = GRAPH_COMMANDS[args.command](G, args)
        _emit(args.command, graph_digest(G), res, started, args, out)
        if args.command == "verdict" and not res["holds"]:
            return 1
        return 0
    except UsageError as exc:
        err.write(f"usage error: {exc}\n")
        return 2
    except SizeLimit as exc:
        err.write(f"size limit: {exc} (cap={exc.cap})\n")
        return 1
    except (InductionStuck, NoM3) as exc:
        err.write(f"verification failure: {exc}\n")
        if getattr(exc, "trace", None):
            err.write(json.dumps(exc.trace, default=_default) + "\n")
        return 1
    except (CubicPMError, OSError) as exc:
        err.write(f"error: {type(exc).__name__}: {exc}\n")
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
