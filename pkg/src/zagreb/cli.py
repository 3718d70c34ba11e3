"""Command-line entry point.

Exit codes: 0 success, 1 a verification assertion failed, 2 bad input.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from typing import Sequence

from zagreb import constructions as C
from zagreb.books import class_weights, decompose_eval
from zagreb.counting import clique_number, count_subgraphs, is_connected
from zagreb.enumerate import Constraints, EnumerationError, enumerate_graphs
from zagreb.graph import Graph, GraphError, from_graph6
from zagreb.identities import verify_identities
from zagreb.indices import IndexSpecError, eval_index, fmt_rational, parse_index
from zagreb.search import Objective, SearchSpec, search
from zagreb.suites import (
    SUITES,
    SuiteError,
    asymptotic_report,
    asymptotic_row,
    verify_generalized_kite_min,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

INPUT_ERRORS = (GraphError, IndexSpecError, C.ConstructionError, EnumerationError, SuiteError, ValueError)


def default_threads() -> int:
    env = os.environ.get("ZAGREB_THREADS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def _emit(args, text: str) -> None:
    if getattr(args, "output", None):
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dump_json(payload) -> str:
    return json.dumps(payload, indent=2) + "\n"


def _write_json_file(path: str | None, payload) -> None:
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(_dump_json(payload))


def _read_graphs(args) -> list[Graph]:
    if args.graph:
        return [C.parse_pattern(args.graph)]
    if args.graph_file:
        with open(args.graph_file, encoding="utf-8") as fh:
            lines = fh.read().splitlines()
    else:
        lines = sys.stdin.read().splitlines()
    graphs = [from_graph6(line) for line in lines if line.strip()]
    if not graphs:
        raise GraphError("no graph given (use --graph, --graph-file or stdin)")
    return graphs


def _csv(rows: list[list]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerows(rows)
    return buf.getvalue()


# -- construct ---------------------------------------------------------------

def _build(args) -> Graph:
    name = args.name
    need = {
        "turan": ("n", "k"),
        "kite": ("n", "k"),
        "genkite": ("n", "H"),
        "quasiclique": ("n", "m"),
        "book": ("t", "p", "q"),
        "doublestar": ("p", "q"),
        "star": ("n",),
        "path": ("n",),
        "cycle": ("n",),
        "complete": ("n",),
        "bipartite": ("a", "b"),
        "polarity": ("q",),
    }[name]
    missing = [f for f in need if getattr(args, f) is None]
    if missing:
        raise C.ConstructionError(f"construct {name} needs --{' --'.join(missing)}")
    if name == "turan":
        return C.turan(args.n, args.k)
    if name == "kite":
        return C.kite(args.n, args.k)
    if name == "genkite":
        return C.generalized_kite(args.n, C.parse_pattern(args.H), args.attach)
    if name == "quasiclique":
        return C.quasi_clique(args.n, args.m)
    if name == "book":
        return C.book(args.t, args.p, args.q)
    if name == "doublestar":
        return C.double_star(args.p, args.q)
    if name == "bipartite":
        return C.complete_bipartite(args.a, args.b)
    if name == "polarity":
        return C.polarity_graph(args.q)
    return {"star": C.star, "path": C.path, "cycle": C.cycle, "complete": C.complete}[name](args.n)


def cmd_construct(args) -> int:
    g = _build(args)
    _emit(args, g.to_graph6() + "\n")
    if args.summary:
        print(
            f"n={g.n} m={g.m} degrees={sorted(g.degrees, reverse=True)} "
            f"clique_number={clique_number(g)} connected={is_connected(g)}",
            file=sys.stderr,
        )
    return EXIT_OK


# -- eval / weights / count --------------------------------------------------

def cmd_eval(args) -> int:
    defn = parse_index(args.index)
    graphs = _read_graphs(args)
    rows = []
    for g in graphs:
        val = eval_index(defn, g)
        if args.check_decomposition and defn.edge_poly is not None:
            if decompose_eval(defn, g) != val:
                print(f"decomposition mismatch on {g.to_graph6()}", file=sys.stderr)
                return EXIT_FAIL
        rows.append((g, val))
    if args.format == "json":
        _emit(args, _dump_json([{"graph6": g.to_graph6(), "index": defn.label, "value": fmt_rational(v)} for g, v in rows]))
    elif args.format == "csv":
        _emit(args, _csv([["graph6", "index", "value"]] + [[g.to_graph6(), defn.label, str(v)] for g, v in rows]))
    else:
        _emit(args, "".join(f"{v}\n" for _, v in rows))
    return EXIT_OK


def weight_rows(index_text: str) -> list[dict]:
    table = class_weights(parse_index(index_text))
    return [
        {"pattern": {"t": pat.t, "p": pat.p, "q": pat.q}, "graph6": pat.graph().to_graph6(), "weight": fmt_rational(w)}
        for pat, w in table.rows()
    ]


def cmd_weights(args) -> int:
    rows = weight_rows(args.index)
    if args.format == "json":
        _emit(args, _dump_json(rows))
    elif args.format == "csv":
        _emit(args, _csv([["t", "p", "q", "graph6", "weight"]] + [[r["pattern"]["t"], r["pattern"]["p"], r["pattern"]["q"], r["graph6"], r["weight"]] for r in rows]))
    else:
        lines = [f"B_{r['pattern']['t']}({r['pattern']['p']},{r['pattern']['q']})\t{r['graph6']}\t{r['weight']}" for r in rows]
        _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK


def cmd_count(args) -> int:
    h = C.parse_pattern(args.pattern)
    graphs = _read_graphs(args)
    counts = [(g, count_subgraphs(h, g)) for g in graphs]
    if args.format == "json":
        _emit(args, _dump_json([{"graph6": g.to_graph6(), "pattern": h.to_graph6(), "count": c} for g, c in counts]))
    else:
        _emit(args, "".join(f"{c}\n" for _, c in counts))
    return EXIT_OK


# -- enumerate / search ------------------------------------------------------

def _constraints(args) -> Constraints:
    return Constraints(
        connected=args.connected,
        forbid=tuple(C.parse_pattern(p) for p in args.forbid or []),
        clique_eq=args.clique_eq,
        clique_le=args.clique_le,
        contains=tuple(C.parse_pattern(p) for p in args.contains or []),
        edges=args.edges,
        triangle_free=args.triangle_free,
    )


def _objective(text: str) -> Objective:
    kind, _, rest = text.partition(":")
    if kind == "index" and rest:
        return Objective.of(parse_index(rest))
    if kind == "pattern" and rest:
        return Objective.of(C.parse_pattern(rest), name=rest)
    raise ValueError(f"objective must be index:<name> or pattern:<pattern>, got {text!r}")


def cmd_enumerate(args) -> int:
    mode = "labeled" if args.labeled else "iso-classes"
    lines = [g.to_graph6() for g in enumerate_graphs(args.n, _constraints(args), mode, allow_n8=args.allow_n8)]
    if args.count:
        _emit(args, f"{len(lines)}\n")
    else:
        _emit(args, "".join(s + "\n" for s in lines))
    return EXIT_OK


def cmd_search(args) -> int:
    spec = SearchSpec(args.n, _objective(args.objective), _constraints(args), args.direction, args.allow_n8)
    rep = search(spec, workers=args.threads)
    payload = rep.to_dict(include_elapsed=args.timing)
    _write_json_file(args.json, payload)
    if args.format == "json":
        _emit(args, _dump_json(payload))
    else:
        opt = "empty search space" if rep.empty else str(rep.optimum)
        lines = [f"optimum: {opt}", f"feasible: {rep.feasible_count} of {rep.enumerated_count} classes"]
        for w, name in zip(rep.witnesses, rep.witness_names):
            lines.append(f"witness: {w}" + (f"  ({name})" if name else ""))
        _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK


# -- verify / asymptotic -----------------------------------------------------

def _suite_csv(rep) -> str:
    rows = [["label", "params", "asserted", "passed", "expected", "optimum", "expected_witness", "witnesses"]]
    for c in rep.checks:
        d = c.to_dict()
        rows.append([d["label"], json.dumps(d["params"], sort_keys=True), d["asserted"], d["passed"], d["expected"], d["optimum"], d["expected_witness"], " ".join(d["witnesses"])])
    return _csv(rows)


def cmd_verify(args) -> int:
    suite = args.suite
    if suite == "identities":
        payload = verify_identities(args.nmax, trials=args.trials, seed=args.seed)
        _write_json_file(args.json, payload)
        if args.format == "json":
            _emit(args, _dump_json(payload))
        else:
            b = payload["b111_inequality"]
            s = payload["s12_identity"]
            lines = [
                f"b111 inequality: {'holds' if b['holds'] else 'FAILS'} on {b['checked']} graphs ({b['violations']} violations)",
                f"s12 identity (printed): {s['printed']['violations']} violations of {s['printed']['checked']}",
                f"s12 identity (P4 variant): {s['p4_variant']['violations']} violations of {s['p4_variant']['checked']}",
                f"s12 on bull: lhs {payload['s12_bull']['lhs']}, rhs {payload['s12_bull']['rhs_printed']}, P4-variant rhs {payload['s12_bull']['rhs_p4_variant']}",
                f"decomposition (exhaustive): {'holds' if payload['decomposition_exhaustive']['holds'] else 'FAILS'}",
                f"decomposition (random, seed {args.seed}): {'holds' if payload['decomposition_random']['holds'] else 'FAILS'}",
                f"mutation self-test undetected: {len(payload['mutation_undetected'])}",
                f"passed: {payload['passed']}",
            ]
            _emit(args, "\n".join(lines) + "\n")
        return EXIT_OK if payload["passed"] else EXIT_FAIL

    if suite.startswith("genkite:"):
        rep = verify_generalized_kite_min(C.parse_pattern(suite[len("genkite:"):]), args.nmax, args.threads, args.allow_n8)
    elif suite in SUITES:
        rep = SUITES[suite](args.nmax, workers=args.threads, allow_n8=args.allow_n8)
    else:
        raise SuiteError(f"unknown suite {suite!r}; choose from {', '.join(list(SUITES) + ['genkite:H', 'identities'])}")
    payload = rep.to_dict()
    _write_json_file(args.json, payload)
    if args.format == "json":
        _emit(args, _dump_json(payload))
    elif args.format == "csv":
        _emit(args, _suite_csv(rep))
    else:
        s = rep.summary()
        lines = [f"suite {s['suite']}: {'PASS' if s['passed'] else 'FAIL'} ({s['asserted']} asserted, {s['failed']} failed, {s['checks']} total)"]
        for c in rep.failures:
            lines.append(f"  FAIL {c.label} {json.dumps(c.params, sort_keys=True)}: {c.note}")
        _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK if rep.passed else EXIT_FAIL


def cmd_asymptotic(args) -> int:
    if args.case:
        rows = [asymptotic_row(args.case, k=args.k, n=args.n, q=args.q)]
    else:
        rows = asymptotic_report()
    data = [r.to_dict() for r in rows]
    if args.format == "json":
        _emit(args, _dump_json(data))
    elif args.format == "csv":
        _emit(args, _csv([["case", "params", "construction", "value", "leading_term", "ratio", "exact_ratio"]] + [[d["case"], json.dumps(d["params"], sort_keys=True), d["construction"], d["value"], d["leading_term"], repr(d["ratio"]), d["exact_ratio"]] for d in data]))
    else:
        _emit(args, "".join(f"({d['case']}) {json.dumps(d['params'], sort_keys=True)} {d['construction']}: {d['value']} / {d['leading_term']} = {d['ratio']:.6f}\n" for d in data))
    return EXIT_OK


# -- parser ------------------------------------------------------------------

def _common(p: argparse.ArgumentParser, formats=("text", "json", "csv")) -> None:
    p.add_argument("--format", choices=formats, default="text")
    p.add_argument("-o", "--output", help="write to this path instead of stdout")


def _graph_input(p: argparse.ArgumentParser) -> None:
    p.add_argument("--graph", help="graph6 string or pattern name; default: graph6 lines on stdin")
    p.add_argument("--graph-file", help="file with one graph6 string per line")


def _constraint_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--connected", action="store_true")
    p.add_argument("--triangle-free", action="store_true")
    p.add_argument("--forbid", action="append", metavar="PATTERN")
    p.add_argument("--contains", action="append", metavar="PATTERN")
    p.add_argument("--clique-eq", type=int)
    p.add_argument("--clique-le", type=int)
    p.add_argument("--edges", type=int)
    p.add_argument("--allow-n8", action="store_true", help="permit exhaustive runs at n = 8")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="zagreb", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="print a named construction as graph6")
    p.add_argument("name", choices=["turan", "kite", "genkite", "quasiclique", "book", "doublestar", "star", "path", "cycle", "complete", "bipartite", "polarity"])
    for f in ("n", "k", "m", "t", "p", "q", "a", "b"):
        p.add_argument(f"--{f}", type=int)
    p.add_argument("--H", help="pattern for genkite")
    p.add_argument("--attach", type=int, default=0)
    p.add_argument("--summary", action="store_true", help="degree/edge summary on stderr")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("eval", help="evaluate an index")
    p.add_argument("--index", required=True)
    p.add_argument("--check-decomposition", action="store_true")
    _graph_input(p)
    _common(p)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("weights", help="book class weights of an index")
    p.add_argument("--index", required=True)
    _common(p, ("json", "csv", "text"))
    p.set_defaults(func=cmd_weights, format="json")

    p = sub.add_parser("count", help="count copies of a pattern")
    p.add_argument("--pattern", required=True)
    _graph_input(p)
    _common(p, ("text", "json"))
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("enumerate", help="list graphs as graph6")
    _constraint_flags(p)
    p.add_argument("--labeled", action="store_true")
    p.add_argument("--count", action="store_true")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("search", help="exhaustive constrained optimization")
    _constraint_flags(p)
    p.add_argument("--objective", required=True, help="index:<name> or pattern:<pattern>")
    p.add_argument("--direction", choices=["max", "min"], default="max")
    p.add_argument("--threads", type=int, default=None)
    p.add_argument("--json", help="also write the JSON report here")
    p.add_argument("--timing", action="store_true", help="include elapsed seconds in JSON")
    _common(p, ("text", "json"))
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", help="xu | gentur | bipartite | kite | genkite:<H> | quasiclique | identities")
    p.add_argument("--nmax", type=int, default=7)
    p.add_argument("--threads", type=int, default=None)
    p.add_argument("--allow-n8", action="store_true")
    p.add_argument("--trials", type=int, default=500)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--json", help="also write the JSON report here")
    _common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("asymptotic", help="construction values against leading terms")
    p.add_argument("--case", choices=["ii", "iii", "iv"])
    p.add_argument("--k", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--q", type=int)
    _common(p)
    p.set_defaults(func=cmd_asymptotic)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "threads", 0) is None:
        args.threads = default_threads()
    try:
        return args.func(args)
    except INPUT_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BrokenPipeError:
        return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
