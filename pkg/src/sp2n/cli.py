"""Command line front end.

Exit codes: 0 success or suite pass, 1 verdict mismatch under --expect,
2 usage error, 3 suite failure.
"""

import argparse
import json
import sys

from .branching import (
    GUARANTEED_ONE,
    LinearWeight,
    exterior_factors,
    real_by_order_sl,
    real_by_order_su,
    real_element_verdict,
    restrict_to_c,
)
from .criteria import element_has_one, p88_guarantee, torus_trivial, unisingular
from .elements import (
    gamma_graph,
    omega_n_eigenvalue_orders,
    parse_element,
    singer_height,
    singer_index_element,
)
from .harness import SUITE_NAMES, run_suite
from .reps import ModuleKind, has_zero_weight, weight_set
from .tori import enumerate_shapes, parse_torus_label, singer_index, torus_order
from .weights import Weight, dominant_members, from_eps, parse_weight


def _weight_arg(text: str, rank: int) -> Weight:
    w = parse_weight(text)
    if not isinstance(w, Weight):
        w = from_eps(w)
    if w.rank != rank:
        raise ValueError(f"weight {text!r} has rank {w.rank}, expected {rank}")
    return w


def _emit(args, payload: dict, text_lines: list[str]) -> None:
    if getattr(args, "json", False):
        print(json.dumps(payload))
    else:
        for line in text_lines:
            print(line)


def _verdict_exit(args, decision: str) -> int:
    expect = getattr(args, "expect", None)
    if expect is not None and decision != expect:
        return 1
    return 0


def _cmd_si(args) -> int:
    value, witness = singer_height(args.n)
    payload = {"n": str(args.n), "si": str(value), "witness": [str(p) for p in sorted(witness)]}
    _emit(args, payload, [f"Si({args.n}) = {value}  witness parts: {sorted(witness)}"])
    return 0


def _cmd_tori(args) -> int:
    shapes = enumerate_shapes(args.n)
    payload = {
        "n": str(args.n),
        "tori": [
            {"label": str(sh), "order": str(torus_order(sh)), "singer_index": str(singer_index(sh))}
            for sh in shapes
        ],
    }
    lines = [f"{str(sh):>16}  order={torus_order(sh)}  singer_index={singer_index(sh)}" for sh in shapes]
    _emit(args, payload, lines)
    return 0


def _cmd_weights(args) -> int:
    w = _weight_arg(args.omega, args.n)
    kind = ModuleKind.WEYL if args.kind == "weyl" else ModuleKind.IRREDUCIBLE_2
    ws = weight_set(w, kind)
    dom = dominant_members(ws)
    zero = has_zero_weight(w, kind)
    payload = {
        "n": str(args.n),
        "omega": str(w),
        "kind": args.kind,
        "cardinality": str(len(ws)),
        "dominant_members": [str(m) for m in dom],
        "has_zero_weight": zero,
    }
    lines = [
        f"weights: {len(ws)}",
        "dominant members: " + "; ".join(str(m) for m in dom),
        f"zero weight: {'yes' if zero else 'no'}",
    ]
    _emit(args, payload, lines)
    return 0


def _cmd_unisingular(args) -> int:
    w = _weight_arg(args.omega, args.n)
    v = unisingular(w)
    _emit(args, v.to_dict(), [f"unisingular: {v.decision}  citations: {', '.join(v.citations)}"])
    return _verdict_exit(args, v.decision)


def _cmd_torus_trivial(args) -> int:
    w = _weight_arg(args.omega, args.n)
    shape = parse_torus_label(args.torus)
    v = torus_trivial(w, shape)
    _emit(args, v.to_dict(), [
        f"trivial constituent on {shape}: {v.decision}"
        f"  citations: {', '.join(v.citations)}  fallback: {v.fallback_used}"
    ])
    return _verdict_exit(args, v.decision)


def _cmd_element(args) -> int:
    g = parse_element(args.spec)
    graph = gamma_graph(g)
    w = _weight_arg(args.omega, g.rank)
    v = element_has_one(w, g)
    payload = {
        "element": str(g),
        "order": str(g.order),
        "gamma_edges": [[str(i), str(j)] for i, j in sorted(graph.edges)],
        "singular_vertices": [str(i) for i in graph.singular],
        "singer_index": str(singer_index_element(g)),
        "omega_n_eigenvalue_orders": [str(e) for e in sorted(omega_n_eigenvalue_orders(g))],
        "p88_guarantee": p88_guarantee(g),
        "omega": str(w),
        "verdict": v.to_dict(),
    }
    lines = [
        f"element {g}  order {g.order}",
        f"graph edges: {sorted(graph.edges)}  singular vertices: {list(graph.singular)}  Si(g)={singer_index_element(g)}",
        f"top-fundamental eigenvalue orders: {sorted(omega_n_eigenvalue_orders(g))}",
        f"prime-power guarantee via first+last fundamentals: {'yes' if payload['p88_guarantee'] else 'no'}",
        f"eigenvalue 1 on weight {w}: {v.decision}  citations: {', '.join(v.citations)}  fallback: {v.fallback_used}",
    ]
    _emit(args, payload, lines)
    return _verdict_exit(args, v.decision)


def _cmd_branch(args) -> int:
    lam = LinearWeight(tuple(int(p) for p in args.lam.split(",")))
    if lam.ambient != args.N:
        raise ValueError(f"lambda {args.lam!r} has ambient size {lam.ambient}, expected {args.N}")
    verdict = real_element_verdict(lam)
    restricted = restrict_to_c(lam) if args.N % 2 == 0 else None
    n = args.N // 2
    payload = {
        "N": str(args.N),
        "lambda": str(lam),
        "restriction": str(restricted) if restricted is not None else None,
        "real_element_status": verdict.status,
        "citations": list(verdict.citations),
        "exterior_factors": {
            str(k): [str(w) for w in sorted(exterior_factors(k, n), key=lambda w: w.coeffs)]
            for k in range(1, args.N)
        } if args.N % 2 == 0 else {},
    }
    lines = [f"real-element verdict: {verdict.status}  citations: {', '.join(verdict.citations)}"]
    if restricted is not None:
        lines.insert(0, f"restriction to the symplectic subgroup: {restricted}")
        for k in range(1, args.N):
            facs = sorted(exterior_factors(k, n), key=lambda w: w.coeffs)
            lines.append(f"exterior power {k}: factors " + "; ".join(str(w) for w in facs))
    _emit(args, payload, lines)
    return _verdict_exit(args, verdict.status)


def _cmd_real(args) -> int:
    fn = real_by_order_sl if args.group == "sl" else real_by_order_su
    result = fn(args.order, args.q)
    payload = {"group": args.group, "order": str(args.order), "q": str(args.q), "real": result}
    _emit(args, payload, [f"real by order condition: {'yes' if result else 'no'}"])
    return 0


def _cmd_verify(args) -> int:
    report = run_suite(args.suite, args.max_n, args.sweep_limit)
    print(report.to_json())
    if not report.passed:
        return 3
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sp2n", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("si", help="Singer height with witness")
    p.add_argument("n", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_si)

    p = sub.add_parser("tori", help="list torus classes with orders and Singer indices")
    p.add_argument("n", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_tori)

    p = sub.add_parser("weights", help="weight set of a module")
    p.add_argument("n", type=int)
    p.add_argument("omega")
    p.add_argument("--kind", choices=("irr2", "weyl"), default="irr2")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_weights)

    p = sub.add_parser("unisingular", help="eigenvalue 1 for every group element?")
    p.add_argument("n", type=int)
    p.add_argument("omega")
    p.add_argument("--json", action="store_true")
    p.add_argument("--expect", choices=("yes", "no"))
    p.set_defaults(fn=_cmd_unisingular)

    p = sub.add_parser("torus-trivial", help="trivial constituent on one torus class?")
    p.add_argument("n", type=int)
    p.add_argument("omega")
    p.add_argument("--torus", required=True, help='signed label, e.g. "-2" or "-1,1"')
    p.add_argument("--json", action="store_true")
    p.add_argument("--expect", choices=("yes", "no"))
    p.set_defaults(fn=_cmd_torus_trivial)

    p = sub.add_parser("element", help="per-element verdicts from block data")
    p.add_argument("spec", help='blocks "d:o:sign;..." e.g. "1:3:-;2:5:-"')
    p.add_argument("--omega", required=True)
    p.add_argument("--json", action="store_true")
    p.add_argument("--expect", choices=("yes", "no"))
    p.set_defaults(fn=_cmd_element)

    p = sub.add_parser("branch", help="restriction of a linear-group weight")
    p.add_argument("--N", type=int, required=True, help="ambient matrix size")
    p.add_argument("--lambda", dest="lam", required=True, help="comma-separated coefficients")
    p.add_argument("--json", action="store_true")
    p.add_argument("--expect", choices=(GUARANTEED_ONE, "possible-exception"))
    p.set_defaults(fn=_cmd_branch)

    p = sub.add_parser("real", help="realness-by-order predicates")
    p.add_argument("--group", choices=("sl", "su"), required=True)
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_real)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", choices=SUITE_NAMES, required=True)
    p.add_argument("--max-n", type=int, default=None)
    p.add_argument("--sweep-limit", type=int, default=None)
    p.set_defaults(fn=_cmd_verify)

    return parser


def cli_main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.fn(args)
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(cli_main())
