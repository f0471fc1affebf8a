"""Command-line front end.

One report object per invocation on stdout, diagnostics on stderr.  Exit
status: 0 on success or a verified/strict report, 1 when a verification
mismatches or a strict inequality fails, 2 on usage or input errors.  All
numeric output uses 12 significant digits; exact rationals print as "p/q".
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys

from .errors import InputError
from .hypergraph import (
    load_graph,
    max_complete_subgraph_order,
    to_json_dict,
)
from .lagrangian import eval_nonuniform, load_weighting, threshold
from .compression import left_compress
from .optimizer import OptimizerConfig, check_optimality, grid_oracle, maximize
from .theorems import (
    CONSTRUCTION_IDS,
    THEOREM_IDS,
    build_counterexample,
    catalog,
    verify,
)


def _sig12(v: float) -> float:
    return float(f"{v:.12g}")


def _fmt(v) -> str:
    if isinstance(v, float):
        return f"{v:.12g}"
    return str(v)


def _round_floats(obj):
    if isinstance(obj, float):
        return _sig12(obj)
    if isinstance(obj, dict):
        return {k: _round_floats(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_round_floats(v) for v in obj]
    return obj


def _emit_json(report: dict) -> None:
    print(json.dumps(_round_floats(report), sort_keys=True, indent=2))


def _emit_text(lines) -> None:
    for line in lines:
        print(line)


def _optimizer_config(args) -> OptimizerConfig:
    base = {}
    if getattr(args, "config", None):
        try:
            with open(args.config, "r", encoding="utf-8") as fh:
                base = json.load(fh)
        except OSError as exc:
            raise InputError(f"cannot read config file {args.config}: {exc.strerror}") from None
        except json.JSONDecodeError as exc:
            raise InputError(f"config file is not valid JSON: {exc}") from None
        if not isinstance(base, dict):
            raise InputError("config file must hold a JSON object")
    merged = dict(base)
    for key, flag in (
        ("restarts", args.restarts),
        ("seed", args.seed),
        ("max_iters", args.max_iters),
        ("tol", args.tol),
        ("threads", args.threads),
    ):
        if flag is not None:
            merged[key] = flag
    merged.setdefault("threads", os.cpu_count() or 1)
    return OptimizerConfig.from_json(merged)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hyperlag",
        description="Lagrangians of non-uniform hypergraphs: compute, verify, compress.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    opt = argparse.ArgumentParser(add_help=False)
    opt.add_argument("--restarts", type=int, default=None, help="multi-start count (default 100)")
    opt.add_argument("--seed", type=int, default=None, help="random seed (default 0)")
    opt.add_argument("--tol", type=float, default=None, help="ascent stopping tolerance (default 1e-9)")
    opt.add_argument("--max-iters", type=int, default=None, help="iteration cap per start (default 10000)")
    opt.add_argument(
        "--threads", type=int, default=None, help="parallel restarts (default: available parallelism)"
    )
    opt.add_argument("--config", default=None, help="JSON file with optimizer settings (flags win)")

    jsonf = argparse.ArgumentParser(add_help=False)
    jsonf.add_argument("--json", action="store_true", help="emit a JSON report")

    p = sub.add_parser("compute", parents=[opt, jsonf], help="maximize the weighted Lagrangian of a graph")
    p.add_argument("graph", help="graph file (text or JSON)")
    p.add_argument("--weights", default=None, help="evaluate at this weighting file instead of maximizing")

    p = sub.add_parser("clique", parents=[jsonf], help="maximum complete subgraph order")
    p.add_argument("graph")
    p.add_argument("--types", default=None, help="comma-separated cardinalities (default: all present)")

    p = sub.add_parser("compress", parents=[jsonf], help="left-compress a graph to its fixpoint")
    p.add_argument("graph")

    p = sub.add_parser("verify", parents=[opt, jsonf], help="check a theorem's hypotheses and closed form")
    p.add_argument("theorem", choices=THEOREM_IDS)
    p.add_argument("graph")
    p.add_argument("--force", action="store_true", help="run the optimizer even when hypotheses fail")

    p = sub.add_parser("counterexample", parents=[jsonf], help="build a strict tightness instance")
    p.add_argument("construction", choices=CONSTRUCTION_IDS)
    p.add_argument("--t", type=int, default=None)
    p.add_argument("--s", type=int, default=None)
    p.add_argument("--n", type=int, default=None)

    p = sub.add_parser("oracle", parents=[jsonf], help="brute-force grid maximum")
    p.add_argument("graph")
    p.add_argument("--grid-m", type=int, default=50, help="grid resolution (default 50)")

    p = sub.add_parser("catalog", parents=[jsonf], help="list the implemented identities")
    p.add_argument("--r", type=int, default=None, help="also print the {1,r} threshold for this r")

    return parser


def _cmd_compute(args) -> int:
    H = load_graph(args.graph)
    if args.weights is not None:
        x = load_weighting(args.weights, H.n)
        value = eval_nonuniform(H, x)
        residual, violations = check_optimality(H, x)
        report = {
            "value": value,
            "x": [float(v) for v in x],
            "kkt_residual": residual,
            "cover_violations": [list(p) for p in violations],
        }
        lines = [f"value {_fmt(value)}"]
    else:
        cfg = _optimizer_config(args)
        res = maximize(H, cfg)
        report = {
            "value": res.value,
            "x": [float(v) for v in res.x],
            "support": list(res.support),
            "kkt_residual": res.kkt_residual,
            "cover_violations": [list(p) for p in res.cover_violations],
            "restarts_used": res.restarts_used,
        }
        lines = [
            f"value {_fmt(res.value)}",
            "support " + " ".join(str(v) for v in res.support),
            f"kkt_residual {_fmt(res.kkt_residual)}",
            f"restarts_used {res.restarts_used}",
        ]
    if len(H.R) == 1:
        (r,) = H.R
        uniform = report["value"] / float(math.factorial(r))
        report["uniform_value"] = uniform
        lines.insert(1, f"uniform_value {_fmt(uniform)}")
    if args.json:
        _emit_json(report)
    else:
        _emit_text(lines)
    return 0


def _cmd_clique(args) -> int:
    H = load_graph(args.graph)
    if args.types is None:
        types = sorted(H.R)
    else:
        try:
            types = [int(p) for p in args.types.split(",") if p.strip()]
        except ValueError:
            raise InputError(f"--types must be comma-separated integers, got {args.types!r}") from None
    order, witness = max_complete_subgraph_order(H, types)
    if args.json:
        _emit_json({"order": order, "witness": list(witness), "types": sorted(set(types))})
    else:
        print(f"order {order}, witness " + " ".join(str(v) for v in witness))
    return 0


def _cmd_compress(args) -> int:
    H = load_graph(args.graph)
    result, trace = left_compress(H)
    report = {
        "before": to_json_dict(H),
        "after": to_json_dict(result),
        "trace": {
            "steps": [{"i": i, "j": j, "edges_rewritten": c} for i, j, c in trace.steps],
            "initial_edge_counts": {str(r): c for r, c in trace.initial_edge_counts},
            "final_edge_counts": {str(r): c for r, c in trace.final_edge_counts},
            "sweeps": trace.sweeps,
        },
    }
    _emit_json(report)
    return 0


def _cmd_verify(args) -> int:
    H = load_graph(args.graph)
    cfg = _optimizer_config(args)
    report = verify(args.theorem, H, cfg, force=args.force)
    if args.json:
        _emit_json(report.to_json_dict())
    else:
        lines = [f"theorem {report.theorem_id}"]
        for h in report.hypotheses:
            state = "holds" if h.holds else "FAILS"
            lines.append(f"hypothesis {h.name}: {state} ({h.detail})")
        if report.expected is not None:
            lines.append(f"expected {_fmt(report.expected)}")
        if report.computed is not None:
            lines.append(f"computed {_fmt(report.computed)}")
        lines.append(f"verdict {report.verdict}")
        _emit_text(lines)
    return 0 if report.verdict == "verified" else 1


def _cmd_counterexample(args) -> int:
    params = {}
    if args.t is not None:
        params["t"] = args.t
    if args.s is not None:
        params["s"] = args.s
    if args.n is not None:
        params["n"] = args.n
    report = build_counterexample(args.construction, **params)
    if args.json:
        _emit_json(report.to_json_dict())
    else:
        _emit_text(
            [
                f"construction {report.construction_id}",
                f"lhs {report.lhs.numerator}/{report.lhs.denominator} ({_fmt(float(report.lhs))})",
                f"rhs {report.rhs.numerator}/{report.rhs.denominator} ({_fmt(float(report.rhs))})",
                f"margin {report.margin.numerator}/{report.margin.denominator}",
                f"strict {str(report.strict).lower()}",
            ]
        )
    return 0 if report.strict else 1


def _cmd_oracle(args) -> int:
    H = load_graph(args.graph)
    res = grid_oracle(H, args.grid_m)
    report = {
        "value": res.value,
        "x": [float(v) for v in res.x],
        "grid_resolution": res.grid_resolution,
        "lipschitz_bound": res.lipschitz_bound,
        "gap_bound": res.gap_bound,
    }
    if args.json:
        _emit_json(report)
    else:
        _emit_text(
            [
                f"value {_fmt(res.value)}",
                "x " + " ".join(_fmt(float(v)) for v in res.x),
                f"grid_resolution {res.grid_resolution}",
                f"gap_bound {_fmt(res.gap_bound)}",
            ]
        )
    return 0


def _cmd_catalog(args) -> int:
    entries = []
    for entry in catalog():
        d = {
            "theorem_id": entry.theorem_id,
            "summary": entry.summary,
            "hypothesis_names": list(entry.hypothesis_names),
            "formula": entry.formula,
        }
        if args.r is not None and entry.theorem_id == "onr":
            d["threshold"] = threshold(args.r)
        entries.append(d)
    if args.json:
        _emit_json({"theorems": entries})
    else:
        for d in entries:
            line = f"{d['theorem_id']}: {d['formula']} -- {d['summary']}"
            if "threshold" in d:
                line += f" [threshold({args.r}) = {d['threshold']}]"
            print(line)
    return 0


_DISPATCH = {
    "compute": _cmd_compute,
    "clique": _cmd_clique,
    "compress": _cmd_compress,
    "verify": _cmd_verify,
    "counterexample": _cmd_counterexample,
    "oracle": _cmd_oracle,
    "catalog": _cmd_catalog,
}


def run(argv: list[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _DISPATCH[args.verb](args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
