"""Command-line interface.

Exit codes: 0 success, 1 a counterexample to the conjecture was found,
2 input error, 3 search budget exhausted or no verdict reachable.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
import time

from . import generators
from .decomposition import (
    Budget,
    BudgetExhausted,
    find_3_edge_colouring,
    find_cubic_tree_bipartite_complement,
    find_nowhere_zero_flow,
    find_tree_cycle_decomposition,
)
from .formats import GraphFormatError, emit_dot, emit_graph6, parse_edge_list, read_graph6_stream
from .graph import CubicGraph, GraphError, Split, SplitError, evaluate_split, verify_ban_linial
from .oracle import ORACLE_BOUND, brute_force_ban_linial, lemma_sweep
from .pipeline import DEFAULT_ORDER, REFUTED, SOLVED, auto_solve, certificate_dict
from .report import Report, split_dict

EXIT_OK, EXIT_REFUTED, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3


class InputError(Exception):
    pass


def _read_graph(args) -> CubicGraph:
    if args.graph:
        try:
            return generators.named(args.graph, args.seed)
        except ValueError as exc:
            raise InputError(str(exc)) from None
    text = sys.stdin.read() if args.input == "-" else open(args.input).read()
    try:
        if args.format == "edgelist":
            g = parse_edge_list(text)
        else:
            graphs = list(read_graph6_stream(text.splitlines()))
            if not graphs:
                raise InputError("no graph in input")
            g = graphs[0]
        return CubicGraph.from_graph(g)
    except (GraphFormatError, GraphError) as exc:
        raise InputError(str(exc)) from None


def _parse_x(text: str) -> list[int]:
    try:
        return [int(t) for t in text.replace(",", " ").split()]
    except ValueError:
        raise InputError(f"bad vertex list {text!r}") from None


def _emit(args, rep: Report, g: CubicGraph | None = None, s: Split | None = None) -> None:
    if args.out == "json":
        print(rep.to_json(indent=2))
    elif args.out == "dot":
        if g is None:
            raise InputError("DOT output needs a graph")
        print(emit_dot(g, s), end="")
    else:
        for key, value in rep.to_dict().items():
            if value not in (None, {}, []):
                print(f"{key}: {json.dumps(value, sort_keys=True) if isinstance(value, (dict, list)) else value}")


def cmd_check(args) -> int:
    g = _read_graph(args)
    try:
        s = Split.from_x(g.vertices(), _parse_x(args.x))
    except SplitError as exc:
        raise InputError(str(exc)) from None
    rep = evaluate_split(g, s)
    out = Report("check", emit_graph6(g), g.n, split=split_dict(s), report=rep.to_dict(),
                 verified=verify_ban_linial(g, s))
    _emit(args, out, g, s)
    return EXIT_OK


def cmd_solve(args) -> int:
    g = _read_graph(args)
    t0 = time.perf_counter()
    res = auto_solve(g, args.order.split(","), args.budget, args.max_n, args.epsilon)
    rep = Report("solve", emit_graph6(g), g.n, status=res.status, solver_path=res.path,
                 certificate=res.certificate, timing=time.perf_counter() - t0)
    if res.split is not None:
        rep.split = split_dict(res.split)
        rep.report = evaluate_split(g, res.split).to_dict()
        rep.verified = verify_ban_linial(g, res.split)
    if res.oracle is not None:
        rep.oracle = res.oracle.to_dict()
    _emit(args, rep, g, res.split)
    return {SOLVED: EXIT_OK, REFUTED: EXIT_REFUTED}.get(res.status, EXIT_BUDGET)


def cmd_decompose(args) -> int:
    g = _read_graph(args)
    found: dict = {}
    exhausted = []
    searches = {
        "colouring": lambda b: find_3_edge_colouring(g, b),
        "tree-cycle": lambda b: find_tree_cycle_decomposition(g, b),
        "tree-bipartite": lambda b: find_cubic_tree_bipartite_complement(g, b),
    }
    for kind, search in searches.items():
        try:
            cert = search(Budget(args.budget))
        except BudgetExhausted:
            exhausted.append(kind)
            continue
        found[kind] = None if cert is None else certificate_dict(kind, cert)
    flows = {}
    for k in range(3, 7):
        try:
            f = find_nowhere_zero_flow(g, k, Budget(args.budget))
        except BudgetExhausted:
            exhausted.append(f"flow-{k}")
            continue
        flows[str(k)] = None if f is None else f.to_dict()
        if f is not None:
            break
    found["flows"] = flows
    rep = Report("decompose", emit_graph6(g), g.n, certificate=found,
                 status="budget-exhausted" if exhausted else "ok",
                 extra={"exhausted": exhausted} if exhausted else {})
    _emit(args, rep, g)
    return EXIT_BUDGET if exhausted else EXIT_OK


def cmd_oracle(args) -> int:
    g = _read_graph(args)
    if g.n > args.max_n:
        raise InputError(f"graph has {g.n} vertices, oracle bound is {args.max_n}")
    t0 = time.perf_counter()
    res = brute_force_ban_linial(g, args.max_n)
    rep = Report("oracle", emit_graph6(g), g.n, oracle=res.to_dict(),
                 status="ok" if res.holds else "refuted", timing=time.perf_counter() - t0)
    if res.witness is not None:
        rep.split = split_dict(res.witness)
        rep.report = res.report.to_dict()
        rep.verified = verify_ban_linial(g, res.witness)
    _emit(args, rep, g, res.witness)
    return EXIT_OK if res.holds else EXIT_REFUTED


def cmd_sweep(args) -> int:
    t0 = time.perf_counter()
    sweep = lemma_sweep(args.max_n, args.rooted_max_n)
    data = sweep.to_dict()
    data["seconds"] = time.perf_counter() - t0
    if args.out == "json":
        print(json.dumps(data, indent=2, sort_keys=True))
    else:
        print(f"trees per size: {data['trees']}")
        print(f"unrooted cases: {sweep.unrooted_cases}, rooted cases: {sweep.rooted_cases}")
        print(f"failures: {len(sweep.failures)}")
        for f in sweep.failures:
            print(f"  {f}")
    return EXIT_OK if sweep.ok else EXIT_REFUTED


def survey_records(lines, order=DEFAULT_ORDER, budget=None, max_n=ORACLE_BOUND):
    """One record per graph6 line: conjecture status and the solver path used."""
    for index, g in enumerate(read_graph6_stream(lines)):
        try:
            cg = CubicGraph.from_graph(g)
        except GraphError as exc:
            yield {"index": index, "graph": emit_graph6(g), "n": g.n, "status": "invalid",
                   "error": str(exc)}
            continue
        res = auto_solve(cg, order, budget, max_n)
        rec = {"index": index, "graph": emit_graph6(cg), "n": cg.n, "status": res.status,
               "path": res.path}
        if res.split is not None:
            rec["imbalance"] = len(res.split.x) - len(res.split.y)
        if res.exhausted:
            rec["exhausted"] = list(res.exhausted)
        yield rec


def cmd_survey(args) -> int:
    source = sys.stdin if args.input == "-" else open(args.input)
    counts: dict[str, int] = {}
    paths: dict[str, int] = {}
    try:
        for rec in survey_records(source, args.order.split(","), args.budget, args.max_n):
            counts[rec["status"]] = counts.get(rec["status"], 0) + 1
            if rec.get("path"):
                paths[rec["path"]] = paths.get(rec["path"], 0) + 1
            if args.out == "json":
                print(json.dumps(rec, sort_keys=True))
            else:
                print(f"{rec['index']}\t{rec['graph']}\t{rec['status']}\t{rec.get('path') or '-'}")
    except GraphFormatError as exc:
        raise InputError(str(exc)) from None
    summary = {"summary": {"statuses": counts, "paths": paths,
                           "refutations": counts.get(REFUTED, 0)}}
    if args.out == "json":
        print(json.dumps(summary, sort_keys=True))
    else:
        print(f"# statuses {json.dumps(counts, sort_keys=True)} paths {json.dumps(paths, sort_keys=True)}")
    if counts.get(REFUTED):
        return EXIT_REFUTED
    if counts.get("invalid"):
        return EXIT_INPUT
    return EXIT_OK if set(counts) <= {SOLVED} else EXIT_BUDGET


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="banlinial",
                                description="Ban-Linial splits of cubic graphs.")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    def graph_args(sp, out_choices=("json", "dot", "text")):
        sp.add_argument("--graph", help="named graph: k4, k33, petersen, moebius_kantor, prism:M, random:N")
        sp.add_argument("--input", default="-", help="input file, '-' for stdin")
        sp.add_argument("--format", choices=("graph6", "edgelist"), default="graph6")
        sp.add_argument("--out", choices=out_choices, default="text")
        sp.add_argument("--seed", type=int, default=None)
        sp.add_argument("--budget", type=int, default=None, help="node cap per search")
        sp.add_argument("--max-n", type=int, default=ORACLE_BOUND, help="oracle vertex bound")

    sp = sub.add_parser("check", help="evaluate a split")
    graph_args(sp)
    sp.add_argument("--x", required=True, help="X-side vertices, comma separated")
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("solve", help="find and verify a Ban-Linial split")
    graph_args(sp)
    sp.add_argument("--order", default=",".join(DEFAULT_ORDER))
    sp.add_argument("--epsilon", type=int, choices=(1, -1), default=1)
    sp.set_defaults(func=cmd_solve)

    sp = sub.add_parser("decompose", help="run the certificate searches")
    graph_args(sp, ("json", "text"))
    sp.set_defaults(func=cmd_decompose)

    sp = sub.add_parser("oracle", help="exhaustive split counts")
    graph_args(sp)
    sp.set_defaults(func=cmd_oracle)

    sp = sub.add_parser("sweep", help="check both tree splitters on all small trees")
    sp.add_argument("--max-n", type=int, default=12)
    sp.add_argument("--rooted-max-n", type=int, default=10)
    sp.add_argument("--out", choices=("json", "text"), default="text")
    sp.set_defaults(func=cmd_sweep)

    sp = sub.add_parser("survey", help="solve every graph in a graph6 stream")
    sp.add_argument("--input", default="-")
    sp.add_argument("--out", choices=("json", "text"), default="text")
    sp.add_argument("--order", default=",".join(DEFAULT_ORDER))
    sp.add_argument("--budget", type=int, default=None)
    sp.add_argument("--max-n", type=int, default=ORACLE_BOUND)
    sp.set_defaults(func=cmd_survey)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING)
    try:
        return args.func(args)
    except (InputError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
