"""Command line surface: parse graphs, run pipelines and oracles, emit reports.

Exit codes: 0 success, 1 infeasible or impossible (or oracle answer false),
2 invalid input, 3 undecided (budget exhausted).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import connectivity, lab, parity, pipelines
from .coloring import anstee_decomposition
from .errors import Infeasible, InvalidInput, Undecided
from .graphio import dump_report, factorization_report, parse_graph, serialize_graph
from .multigraph import Factorization, Multigraph
from .orientation import DEFAULT_BUDGET, ResidueMap, eulerian_orientation, mod_k_orientation


def _csv_ints(text: str) -> list:
    try:
        return [int(x) for x in text.split(",") if x.strip() != ""]
    except ValueError:
        raise InvalidInput(f"expected comma-separated integers, got {text!r}") from None


def _csv_floats(text: str) -> list:
    try:
        return [float(x) for x in text.split(",") if x.strip() != ""]
    except ValueError:
        raise InvalidInput(f"expected comma-separated reals, got {text!r}") from None


def _read_graph(path: str) -> Multigraph:
    try:
        with open(path) as fh:
            return parse_graph(fh.read())
    except OSError as exc:
        raise InvalidInput(f"cannot read {path}: {exc}") from None


def _parity_map(g: Multigraph, odd_vertices) -> tuple:
    f = [0] * g.n
    for v in odd_vertices:
        if not 0 <= v < g.n:
            raise InvalidInput(f"vertex {v} out of range")
        f[v] = 1
    return tuple(f)


def _emit(args, report: dict, text_lines):
    if args.format == "json":
        sys.stdout.write(dump_report(report))
    else:
        sys.stdout.write("\n".join(text_lines) + "\n")


def _audit_entries(g, fz, claims):
    return lab.verify(g, fz, claims).entries


def _subset_report(g: Multigraph, edge_ids, audit) -> tuple:
    """Package a single factor as a 2-part factorization (factor, complement)."""
    chosen = set(edge_ids)
    fz = Factorization(g, 2, [1 if eid in chosen else 2 for eid in range(g.m)])
    return fz, factorization_report(fz, audit)


def cmd_analyze(args):
    g = _read_graph(args.graph)
    rep = connectivity.analyze(g)
    lam = "inf" if rep.lam == float("inf") else rep.lam
    odd = "inf" if rep.odd_lam == float("inf") else rep.odd_lam
    if args.format == "json":
        sys.stdout.write(json.dumps(
            {"n": g.n, "m": g.m, "lambda": lam, "odd_lambda": odd, "tree_connectivity": rep.tree_conn},
            indent=2, sort_keys=True) + "\n")
    else:
        print(f"n = {g.n}, m = {g.m}")
        print(f"lambda = {lam}")
        print(f"odd lambda = {odd}")
        print(f"tree connectivity = {rep.tree_conn}")
    return 0


def cmd_orient(args):
    g = _read_graph(args.graph)
    if args.k is None:
        d = eulerian_orientation(g)
    else:
        if args.Z is not None:
            zset = frozenset(_csv_ints(args.Z))
            p = tuple(g.degree(v) % args.k if v in zset else 0 for v in range(g.n))
        elif args.z is not None:
            p = tuple(g.m % args.k if v == args.z else 0 for v in range(g.n))
        else:
            p = (0,) * g.n
        d = mod_k_orientation(g, ResidueMap(args.k, p), budget=args.budget)
    if args.format == "json":
        sys.stdout.write(json.dumps({"tails": list(d.tails)}, sort_keys=True) + "\n")
    else:
        for eid in range(g.m):
            print(f"{eid} {d.tails[eid]} {d.head(eid)}")
    return 0


def cmd_factor(args):
    g = _read_graph(args.graph)
    if args.mode == "equitable":
        req = pipelines.EquitableRequest(
            k=args.k,
            z=args.z,
            Z=frozenset(_csv_ints(args.Z)) if args.Z is not None else None,
            auto_find_Z=args.z is None and args.Z is None,
        )
        rep = pipelines.equitable_factorize(g, req, budget=args.budget)
        fz, warnings = rep.factorization, rep.warnings
        audit = _audit_entries(g, fz, ["deviation<1", "size±1"])
    elif args.mode == "parity":
        f = _parity_map(g, _csv_ints(args.f)) if args.f is not None else None
        rep = pipelines.parity_factorize(g, args.k, f=f, budget=args.budget)
        fz, warnings = rep.factorization, rep.warnings
        audit = _audit_entries(g, fz, ["deviation<2"])
        targets = f if f is not None else tuple(d % 2 for d in g.degrees)
        bad = sum(
            1 for degs in fz.all_factor_degrees() for v in range(g.n)
            if degs[v] % 2 != targets[v] % 2
        )
        audit.append(("parity", 0, bad, bad == 0))
    elif args.mode == "regular":
        if args.r_list is not None:
            fz = pipelines.regular_split(
                g, _csv_ints(args.r_list), args.k,
                bounded_mode=args.bounded, budget=args.budget,
            )
            warnings = []
            audit = []
        else:
            rep = pipelines.regular_factorize(g, args.k, budget=args.budget)
            fz, warnings = rep.factorization, rep.warnings
            audit = _audit_entries(g, fz, ["regular"])
    elif args.mode == "anstee":
        fz = anstee_decomposition(g, args.k)
        warnings = []
        audit = _audit_entries(g, fz, ["deviation<2", "size±1"])
    else:
        raise InvalidInput(f"unknown mode {args.mode!r}")
    for w in warnings:
        print(f"warning: {w}", file=sys.stderr)
    report = factorization_report(fz, audit)
    lines = [f"k = {fz.k}"]
    for i in range(1, fz.k + 1):
        lines.append(f"factor {i}: edges {fz.factor_edges(i)}")
    lines += [f"audit {c}: bound {b}, measured {m}, pass {p}" for c, b, m, p in audit]
    _emit(args, report, lines)
    return 0


def cmd_parity_factor(args):
    g = _read_graph(args.graph)
    if args.f is None or args.epsilon is None:
        raise InvalidInput("parity-factor requires --f and --epsilon")
    f = _parity_map(g, _csv_ints(args.f))
    side = None
    if args.z is not None:
        side = (args.z, "at_least" if args.side == "at-least" else "at_most")
    edge_ids = parity.epsilon_parity_factor(g, f, args.epsilon, z=side)
    degs = parity.factor_degrees(g, edge_ids)
    window = max(abs(degs[v] - args.epsilon * g.degree(v)) for v in range(g.n)) if g.n else 0.0
    bad = sum(1 for v in range(g.n) if degs[v] % 2 != f[v])
    audit = [("parity", 0, bad, bad == 0), ("eps-window", 2, window, window < 2)]
    fz, report = _subset_report(g, edge_ids, audit)
    lines = [f"factor edges: {sorted(edge_ids)}"]
    lines += [f"audit {c}: bound {b}, measured {m}, pass {p}" for c, b, m, p in audit]
    _emit(args, report, lines)
    return 0


def cmd_even_factor(args):
    g = _read_graph(args.graph)
    given = sum(x is not None for x in (args.epsilon, args.epsilons, args.k))
    if given != 1:
        raise InvalidInput("even-factor takes exactly one of --epsilon, --epsilons, --k")
    if args.epsilon is not None:
        edge_ids = parity.even_factor_eps(g, args.epsilon)
        degs = parity.factor_degrees(g, edge_ids)
        window = max((abs(degs[v] - args.epsilon * g.degree(v)) for v in range(g.n)), default=0.0)
        bad = sum(1 for v in range(g.n) if degs[v] % 2 != 0)
        audit = [("even", 0, bad, bad == 0), ("eps-window", 2, window, window < 2)]
        fz, report = _subset_report(g, edge_ids, audit)
        lines = [f"factor edges: {sorted(edge_ids)}"]
    elif args.k is not None:
        fz = parity.hilton_even_factorization(g, args.k)
        audit = _audit_entries(g, fz, ["even", "deviation<2"])
        report = factorization_report(fz, audit)
        lines = [f"factor {i}: edges {fz.factor_edges(i)}" for i in range(1, fz.k + 1)]
    else:
        eps_list = _csv_floats(args.epsilons)
        fz = parity.weighted_even_factorization(g, eps_list)
        dev = max(
            (abs(degs[v] - eps_list[i] * g.degree(v))
             for i, degs in enumerate(fz.all_factor_degrees()) for v in range(g.n)),
            default=0.0,
        )
        bad = sum(1 for degs in fz.all_factor_degrees() for v in range(g.n) if degs[v] % 2 != 0)
        audit = [("even", 0, bad, bad == 0), ("deviation<6", 6, dev, dev < 6)]
        report = factorization_report(fz, audit)
        lines = [f"factor {i}: edges {fz.factor_edges(i)}" for i in range(1, fz.k + 1)]
    lines += [f"audit {c}: bound {b}, measured {m}, pass {p}" for c, b, m, p in audit]
    _emit(args, report, lines)
    return 0


def cmd_verify(args):
    g = _read_graph(args.graph)
    try:
        with open(args.report) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InvalidInput(f"cannot read report {args.report}: {exc}") from None
    try:
        k = int(data["k"])
        factors = data["factors"]
        assignment = [0] * g.m
        for i, fac in enumerate(factors, start=1):
            for eid in fac["edges"]:
                if assignment[eid] != 0:
                    raise InvalidInput(f"edge {eid} appears in two factors")
                assignment[eid] = i
    except (KeyError, TypeError, IndexError) as exc:
        raise InvalidInput(f"malformed report: {exc}") from None
    if any(a == 0 for a in assignment):
        raise InvalidInput("factors do not cover every edge")
    fz = Factorization(g, k, assignment)
    claims = [c.strip() for c in args.claims.split(",") if c.strip()]
    rep = lab.verify(g, fz, claims)
    for claim, bound, measured, passed in rep.entries:
        print(f"{claim}: bound {bound}, measured {measured}, {'pass' if passed else 'FAIL'}")
    return 0 if rep.ok else 1


def cmd_gen(args):
    params = {}
    for key in ("n", "k", "r", "d", "c", "t"):
        val = getattr(args, key, None)
        if val is not None:
            params[key] = val
    if args.base is not None:
        params["base"] = _read_graph(args.base)
    g = lab.generate(args.family, params, seed=args.seed)
    sys.stdout.write(serialize_graph(g))
    return 0


def cmd_oracle(args):
    g = _read_graph(args.graph)
    if args.question == "equitable":
        if args.k is None:
            raise InvalidInput("oracle equitable requires --k")
        answer = lab.oracle(g, "equitable", jobs=args.jobs, k=args.k)
    elif args.question == "orientation":
        if args.k is None:
            raise InvalidInput("oracle orientation requires --k")
        if args.Z is not None:
            zset = frozenset(_csv_ints(args.Z))
            p = tuple(g.degree(v) % args.k if v in zset else 0 for v in range(g.n))
        elif args.z is not None:
            p = tuple(g.m % args.k if v == args.z else 0 for v in range(g.n))
        else:
            p = (0,) * g.n
        answer = lab.oracle(g, "orientation", jobs=args.jobs, p=p, k=args.k)
    elif args.question == "parity_gf":
        if args.f is None or args.epsilon is None:
            raise InvalidInput("oracle parity_gf requires --f and --epsilon")
        f = _parity_map(g, _csv_ints(args.f))
        g0, f0 = parity.epsilon_windows(g, f, args.epsilon)
        spec = parity.ParitySpec(f=f, g0=g0, f0=f0)
        answer = lab.oracle(g, "parity_gf", jobs=args.jobs, spec=spec)
    else:
        raise InvalidInput(f"unknown question {args.question!r}")
    print("true" if answer else "false")
    return 0 if answer else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eqfactor",
        description="Equitable and parity edge-factorizations of multigraphs.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def common(p, graph=True):
        if graph:
            p.add_argument("graph", help="graph file (text format)")
        p.add_argument("--format", choices=("json", "text"), default="json")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
        p.add_argument("--jobs", type=int, default=1)

    p = sub.add_parser("analyze", help="edge/odd/tree connectivity report")
    common(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("orient", help="Eulerian or mod-k residue orientation")
    common(p)
    p.add_argument("--k", type=int)
    p.add_argument("--z", type=int)
    p.add_argument("--Z")
    p.set_defaults(func=cmd_orient)

    p = sub.add_parser("factor", help="factorization pipelines")
    common(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--mode", choices=("equitable", "parity", "regular", "anstee"), default="equitable")
    p.add_argument("--z", type=int)
    p.add_argument("--Z")
    p.add_argument("--f", help="comma-separated odd-parity vertices (even-k parity mode)")
    p.add_argument("--r-list", dest="r_list")
    p.add_argument("--bounded", action="store_true", help="complete to a regular supergraph first")
    p.set_defaults(func=cmd_factor)

    p = sub.add_parser("parity-factor", help="epsilon-parity factor search")
    common(p)
    p.add_argument("--f", required=True, help="comma-separated odd-parity vertices")
    p.add_argument("--epsilon", type=float, required=True)
    p.add_argument("--z", type=int, help="vertex with a one-sided degree constraint")
    p.add_argument("--side", choices=("at-least", "at-most"), default="at-least")
    p.set_defaults(func=cmd_parity_factor)

    p = sub.add_parser("even-factor", help="even factor or even factorization")
    common(p)
    p.add_argument("--epsilon", type=float)
    p.add_argument("--epsilons", help="comma-separated weights summing to 1")
    p.add_argument("--k", type=int)
    p.set_defaults(func=cmd_even_factor)

    p = sub.add_parser("verify", help="audit a JSON report against its graph")
    common(p)
    p.add_argument("report", help="JSON factorization report")
    p.add_argument("--claims", default="deviation<1,size±1")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="seed-deterministic graph families")
    common(p, graph=False)
    p.add_argument("--family", required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--c", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--base", help="base graph file for the multiplied family")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("oracle", help="exhaustive ground-truth questions")
    common(p)
    p.add_argument("--question", required=True, choices=("equitable", "orientation", "parity_gf"))
    p.add_argument("--k", type=int)
    p.add_argument("--z", type=int)
    p.add_argument("--Z")
    p.add_argument("--f")
    p.add_argument("--epsilon", type=float)
    p.set_defaults(func=cmd_oracle)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except InvalidInput as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Infeasible as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return 1
    except Undecided as exc:
        print(f"undecided: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
