"""linquot command line.

    linquot graph --family h-n --n 7
    linquot ideal --family anticycle --n 6 --s 2
    linquot verify --family g-n --n 6 --s 2 --lex --criterion works
    linquot search --family g-n --n 7 --s 3 --strategy backtrack
    linquot compose --n 8 --s 3
    linquot reproduce --case lem-main-s3 --n 7
    linquot reproduce --case all

Exit codes: 0 confirmed / verified / found, 1 refuted / not linear /
no ordering exists, 2 search budget exhausted, 3 invalid input.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import _accel
from .compose import CompositePlan, HypothesisViolation, compose, paper_orderings
from .graphs import Graph, anticycle, cycle, edge_ideal, g_n, h_family, h_n, star_f
from .ideal import MonomialIdeal, power
from .quotients import OrderedGenerators, lex_order, verify
from .repro import BUDGET, CASES, CONFIRMED, INVALID, REFUTED, run_case
from .search import BUDGET_EXHAUSTED, FOUND, SearchConfig, find_ordering_cached

log = logging.getLogger("linquot")

FAMILIES = ("cycle", "anticycle", "star-f", "h-n", "g-n", "h-family")
DEFAULT_SEED = 0


class InputError(Exception):
    pass


def _graph_from_args(args) -> Graph:
    if getattr(args, "graph", None):
        return Graph.from_json(_load(args.graph))
    if not args.family:
        raise InputError("give --family (with --n) or a JSON input file")
    if args.n is None:
        raise InputError("--n is required with --family")
    builders = {"cycle": cycle, "anticycle": anticycle, "star-f": star_f, "h-n": h_n, "g-n": g_n}
    if args.family == "h-family":
        if args.a is None or args.b is None:
            raise InputError("--a and --b are required for h-family")
        return h_family(args.n, args.a, args.b)[0]
    return builders[args.family](args.n)


def _ideal_from_args(args) -> MonomialIdeal:
    if getattr(args, "ideal", None):
        return MonomialIdeal.from_json(_load(args.ideal))
    ideal = edge_ideal(_graph_from_args(args))
    return power(ideal, args.s or 1)


def _load(path) -> dict:
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc


def _search_config(args) -> SearchConfig:
    return SearchConfig(
        strategy=args.strategy,
        budget_nodes=args.budget_nodes,
        budget_seconds=args.budget_seconds,
        seed=args.seed,
        candidate_order=args.candidate_order,
    )


def _emit(payload: dict, args) -> None:
    text = json.dumps(payload, indent=None if args.compact else 2)
    if args.json_out:
        Path(args.json_out).write_text(text + "\n", encoding="utf-8")
    else:
        sys.stdout.write(text + "\n")


def cmd_graph(args) -> int:
    g = _graph_from_args(args)
    payload = g.to_json()
    if args.family == "h-family":
        _, perm = h_family(args.n, args.a, args.b)
        payload["permutation"] = [perm[k] for k in range(1, args.n + 1)]
    _emit(payload, args)
    return 0


def cmd_ideal(args) -> int:
    _emit(_ideal_from_args(args).to_json(), args)
    return 0


def cmd_verify(args) -> int:
    if args.order:
        og = OrderedGenerators.from_json(_load(args.order))
    else:
        if not args.lex:
            raise InputError("verify needs --order FILE, or an ideal plus --lex")
        og = lex_order(_ideal_from_args(args))
    cert = verify(og, args.criterion)
    log.info("%s criterion on %d generators: %s", args.criterion, len(og), cert.verdict)
    _emit({"ordering": og.to_json(), "certificate": cert.to_json()}, args)
    return 0 if cert.verdict else 1


def cmd_search(args) -> int:
    ideal = _ideal_from_args(args)
    res = find_ordering_cached(ideal, _search_config(args), args.cache_dir)
    log.info("search %s: %s after %d nodes (%.3fs) %s", args.strategy, res.status, res.nodes, res.seconds, res.reason)
    _emit(res.to_json(), args)
    if res.status == FOUND:
        return 0
    return 2 if res.status == BUDGET_EXHAUSTED else 1


def cmd_compose(args) -> int:
    if args.plan:
        plan = CompositePlan.from_json(_load(args.plan))
    else:
        if args.n is None or args.s is None:
            raise InputError("compose needs --plan FILE or --n and --s")
        try:
            plan = paper_orderings(args.n, args.s, _search_config(args), args.cache_dir)
        except RuntimeError as exc:
            log.error("%s", exc)
            return 2
    try:
        result = compose(plan)
    except HypothesisViolation as exc:
        log.error("%s", exc)
        _emit({"plan": plan.to_json(), "error": str(exc), "hypothesis": exc.hypothesis}, args)
        return 1
    _emit(result.to_json(plan), args)
    return 0 if result.certificate.verdict else 1


def cmd_reproduce(args) -> int:
    cases = CASES if args.case == "all" else (args.case,)
    reports = []
    worst = CONFIRMED
    for case in cases:
        rep = run_case(case, args.n, args.s, args.a, args.b, _search_config(args), args.cache_dir)
        status = {CONFIRMED: "confirmed", REFUTED: "REFUTED", BUDGET: "BUDGET", INVALID: "INVALID"}[rep.code]
        print(f"[{status}] {case}: {rep.claim} -- {rep.summary}", file=sys.stderr)
        reports.append(rep.to_json())
        worst = max(worst, rep.code)
    _emit(reports[0] if len(reports) == 1 else {"reports": reports}, args)
    return worst


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int)
    common.add_argument("--s", type=int)
    common.add_argument("--a", type=int)
    common.add_argument("--b", type=int)
    common.add_argument("--family", choices=FAMILIES)
    common.add_argument("--graph", metavar="PATH", help="graph JSON input")
    common.add_argument("--ideal", metavar="PATH", help="ideal JSON input")
    common.add_argument("--json-out", metavar="PATH")
    common.add_argument("--compact", action="store_true", help="single-line JSON")
    common.add_argument("--threads", type=int, default=0)
    common.add_argument("--seed", type=int, default=DEFAULT_SEED)
    common.add_argument("--strategy", choices=("greedy", "backtrack", "exhaustive"), default="backtrack")
    common.add_argument("--candidate-order", choices=("lex", "random"), default="lex")
    common.add_argument("--budget-nodes", type=int, default=10_000_000)
    common.add_argument("--budget-seconds", type=float, default=300.0)
    common.add_argument("--cache-dir", metavar="DIR", help="ordering cache (default: $LINQUOT_CACHE)")
    common.add_argument("-v", "--verbose", action="store_true")

    p = argparse.ArgumentParser(prog="linquot", description="Linear quotient orderings of monomial ideals.")
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("graph", parents=[common], help="build a graph").set_defaults(func=cmd_graph)
    sub.add_parser("ideal", parents=[common], help="edge ideal (power) of a graph").set_defaults(func=cmd_ideal)
    v = sub.add_parser("verify", parents=[common], help="check an ordering")
    v.add_argument("--order", metavar="PATH", help="ordering JSON {n, order}")
    v.add_argument("--lex", action="store_true", help="verify descending lex order of the ideal")
    v.add_argument("--criterion", choices=("colon", "works"), default="colon")
    v.set_defaults(func=cmd_verify)
    sub.add_parser("search", parents=[common], help="search for an ordering").set_defaults(func=cmd_search)
    c = sub.add_parser("compose", parents=[common], help="composite ordering of I_(H_n)^s")
    c.add_argument("--plan", metavar="PATH", help="plan JSON")
    c.set_defaults(func=cmd_compose)
    r = sub.add_parser("reproduce", parents=[common], help="run a named reproduction case")
    r.add_argument("--case", choices=CASES + ("all",), required=True)
    r.set_defaults(func=cmd_reproduce)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    _accel.set_threads(args.threads)
    try:
        return args.func(args)
    except (InputError, ValueError, KeyError, TypeError) as exc:
        print(f"linquot: invalid input: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
