"""Command-line surface.

Subcommands: analyze, decompose, montecarlo, bounds, oracle, gen. Every
run emits a versioned JSON envelope {version, command, inputs, outputs,
seed}; rerunning with the same inputs and seed reproduces it byte for
byte. Exit codes: 0 success (certified where applicable), 2 valid but
uncertified decomposition, 1 error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import bounds as bounds_mod
from .decompose import (decompose_by_coloring, decompose_combined, decompose_lcr,
                        decompose_via_degree_partition, surviving_report)
from .generators import GeneratorSpec, alpha_of
from .graph import (Drawing, dump_drawing_json, dump_edge_list,
                    intersection_graph, load_drawing_json)
from .montecarlo import run_montecarlo
from .oracle import (dependency_scopes, exact_best_edge_partition, exact_best_labeling,
                     exact_conditional_survival, exact_survival_expectation)
from .svg import render_decomposition_svg, verify_svg
from .weights import WeightVector, optimal_weights, uniform_weights

ENVELOPE_VERSION = "kplanar/1"


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on usage errors; the exit-code contract reserves 2
    for valid-but-uncertified runs, so remap usage errors to 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except (ValueError, OSError, RuntimeError, AssertionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def _build_parser() -> _Parser:
    parser = _Parser(prog="kplanar", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("analyze", help="drawing statistics and applicable lower bounds")
    p.add_argument("drawing", help="drawing JSON file (bare or inside an envelope)")
    p.add_argument("--out", help="write the JSON envelope here (default: stdout)")
    p.set_defaults(handler=_cmd_analyze)

    p = sub.add_parser("decompose", help="split a drawing into k planes")
    p.add_argument("drawing")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--eps", type=float, default=0.05)
    p.add_argument("--mode", default="construction",
                   choices=["construction", "degree-partition", "coloring", "combined"])
    p.add_argument("--weights", default="optimal",
                   help="'optimal', 'uniform', or comma-separated probabilities")
    p.add_argument("--budget", type=int, default=2000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", help="write the JSON envelope here (default: stdout)")
    p.add_argument("--svg", help="render the decomposition to this SVG file")
    p.set_defaults(handler=_cmd_decompose)

    p = sub.add_parser("montecarlo", help="sample labelings and compare with bounds")
    p.add_argument("drawing")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--eps", type=float, default=0.05)
    p.add_argument("--trials", type=int, default=10000)
    p.add_argument("--weights", default="uniform")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", help="write the JSON envelope here (default: stdout)")
    p.set_defaults(handler=_cmd_montecarlo)

    p = sub.add_parser("bounds", help="table of all bounds applicable to the given parameters")
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--delta", type=int, help="max degree")
    p.add_argument("--L", type=int, help="local crossing number")
    p.add_argument("--C", type=int, help="total crossings")
    p.add_argument("--k", type=int)
    p.add_argument("--eps", type=float)
    p.add_argument("--alpha", type=float)
    p.add_argument("--log-base", type=float, default=None,
                   help="logarithm base for the threshold formulas (default: e)")
    p.add_argument("--out")
    p.set_defaults(handler=_cmd_bounds)

    p = sub.add_parser("oracle", help="exact brute-force values at desk scale")
    p.add_argument("drawing")
    p.add_argument("--mode", required=True,
                   choices=["labeling", "partition", "expectation", "conditional", "scopes"])
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--objective", default="max_g", choices=["max_g", "sum_g", "combined"])
    p.add_argument("--eps", type=float, default=None)
    p.add_argument("--weights", default="uniform")
    p.add_argument("--edge", type=int, help="edge id for conditional mode")
    p.add_argument("--i", type=int, help="label of the first endpoint")
    p.add_argument("--j", type=int, help="label of the second endpoint")
    p.add_argument("--out")
    p.set_defaults(handler=_cmd_oracle)

    p = sub.add_parser("gen", help="generate test instances")
    p.add_argument("--family", required=True,
                   choices=["convex-kn", "cyl-kn", "regularish", "geometric"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, default=4, help="target degree for random families")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(handler=_cmd_gen)
    return parser


def _cmd_analyze(args) -> int:
    drawing = _load_drawing(args.drawing)
    g = drawing.graph
    ig = intersection_graph(drawing)
    alpha = g.max_degree * g.n / (2 * g.m) if g.m else None
    outputs = {
        "n": g.n, "m": g.m, "max_degree": g.max_degree,
        "C": drawing.total_crossings, "L": drawing.local_crossing_number,
        "intersection_max_degree": ig.max_degree,
        "alpha": alpha,
        "planar": drawing.total_crossings == 0,
        "crossing_lower_bound": _jsonify(bounds_mod.crossing_lower_bound(g.m, g.n)) if g.n else None,
        "lcr_lower_bound": _jsonify(bounds_mod.lcr_lower_bound(g.m, g.n)) if g.n else None,
    }
    lines = [f"n={g.n} m={g.m} max_degree={g.max_degree}",
             f"C={drawing.total_crossings} L={drawing.local_crossing_number} "
             f"Delta(I)={ig.max_degree}"]
    if alpha is not None:
        lines.append(f"alpha={alpha:.4f}")
    if drawing.total_crossings == 0:
        lines.append("crossing-free drawing (planar as drawn)")
    for name in ("crossing_lower_bound", "lcr_lower_bound"):
        lines.append(f"{name}: {outputs[name]}")
    _emit(args, "analyze", {"drawing": args.drawing}, outputs, seed=None, summary=lines)
    return 0


def _cmd_decompose(args) -> int:
    drawing = _load_drawing(args.drawing)
    mode = args.mode
    weights_used: WeightVector | None = None
    if mode == "construction":
        weights_used = _parse_weights(args.weights, args.k)
        assignment, report = decompose_lcr(drawing, args.k, args.eps, weights_used,
                                           budget=args.budget, seed=args.seed)
    elif mode == "combined":
        assignment, report = decompose_combined(drawing, args.k, args.eps,
                                                budget=args.budget, seed=args.seed)
        weights_used = uniform_weights(args.k)
    elif mode == "degree-partition":
        assignment, report = decompose_via_degree_partition(
            drawing, args.k, args.eps, budget=args.budget, seed=args.seed)
    else:
        assignment = decompose_by_coloring(drawing)
        report = surviving_report(drawing, assignment, thresholds={"coplane_max": 0.0})
        report.certified = report.max_load == 0
    decomposition = {
        "k": assignment.k,
        "weights": [float(p) for p in weights_used.probabilities] if weights_used else None,
        "seed": args.seed,
        "planes": list(assignment.planes),
        "g": list(report.g),
        "C_i": list(report.plane_totals),
        "L_i": list(report.plane_maxima),
        "certified": bool(report.certified),
        "thresholds": report.thresholds,
    }
    outputs = {"mode": mode, "decomposition": decomposition}
    if args.svg:
        svg_text = render_decomposition_svg(drawing, assignment)
        verify_svg(drawing, assignment, report, svg_text)
        Path(args.svg).write_text(svg_text)
        outputs["svg"] = args.svg
    lines = [f"mode={mode} k={assignment.k} certified={report.certified}",
             f"max_load={report.max_load} total={report.total} thresholds={report.thresholds}"]
    _emit(args, "decompose",
          {"drawing": args.drawing, "k": args.k, "eps": args.eps, "mode": mode,
           "weights": args.weights, "budget": args.budget},
          outputs, seed=args.seed, summary=lines)
    return 0 if report.certified else 2


def _cmd_montecarlo(args) -> int:
    drawing = _load_drawing(args.drawing)
    weights = _parse_weights(args.weights, args.k)
    summary = run_montecarlo(drawing, weights, args.eps, args.trials, args.seed)
    outputs = {
        "trials": summary.trials,
        "mean_total": summary.mean_total,
        "var_total": summary.var_total,
        "exact_mean_total": _jsonify(summary.exact_mean_total),
        "z_mean": _jsonify(summary.z_mean),
        "edge_mean_g": list(summary.edge_mean_g),
        "edge_tail": list(summary.edge_tail),
        "tail_cutoff": summary.tail_cutoff,
        "tail_bound": summary.tail_bound,
        "tail_z": list(summary.tail_z) if summary.tail_z is not None else None,
    }
    lines = [f"trials={summary.trials} mean_total={summary.mean_total:.4f} "
             f"exact={summary.exact_mean_total} z={summary.z_mean}",
             f"tail_cutoff={summary.tail_cutoff} bound={summary.tail_bound} "
             f"max_tail={max(summary.edge_tail, default=0.0)}"]
    _emit(args, "montecarlo",
          {"drawing": args.drawing, "k": args.k, "eps": args.eps,
           "trials": args.trials, "weights": args.weights},
          outputs, seed=args.seed, summary=lines)
    return 0


def _cmd_bounds(args) -> int:
    import math
    base = args.log_base if args.log_base is not None else math.e
    out: dict = {}
    if args.m is not None and args.n is not None:
        out["crossing_lower_bound"] = _jsonify(bounds_mod.crossing_lower_bound(args.m, args.n))
        out["lcr_lower_bound"] = _jsonify(bounds_mod.lcr_lower_bound(args.m, args.n))
    if args.eps is not None and args.L is not None and args.delta is not None:
        out["mcdiarmid_edge_tail"] = bounds_mod.mcdiarmid_edge_tail(args.eps, args.L, args.delta)
    if args.L is not None and args.delta is not None:
        out["dependency_degree_bound"] = bounds_mod.dependency_degree_bound(args.L, args.delta)
        if args.m is not None:
            out["overload_free_probability"] = bounds_mod.overload_free_probability_bound(
                args.L, args.delta, args.m)
        if args.eps is not None and args.m is not None and args.L >= 1 and args.delta >= 1:
            inst = bounds_mod.LllInstance(
                q=bounds_mod.mcdiarmid_edge_tail(args.eps, args.L, args.delta),
                dep_degree=bounds_mod.dependency_degree_bound(args.L, args.delta),
                n_events=args.m)
            holds, lower = bounds_mod.lll_check(inst)
            out["lll_check"] = {"holds": holds, "success_lower_bound": lower}
    if args.eps is not None:
        if args.alpha is not None:
            out["beta_threshold_regular"] = _jsonify(
                bounds_mod.beta_threshold_regular(args.alpha, args.eps, log_base=base))
        if 0 < args.eps < 1:
            out["beta_threshold_irregular"] = bounds_mod.beta_threshold_irregular(
                args.eps, log_base=base)
    if args.n is not None and args.k is not None:
        kn = bounds_mod.kn_lower_bound(args.n, args.k)
        out["kn_lower_bound"] = {"value": _jsonify(kn.value), "ratio_floor": kn.ratio_floor}
    if None not in (args.alpha, args.eps, args.k, args.L, args.delta, args.m, args.n, args.C):
        gap = bounds_mod.combined_feasibility_gap(bounds_mod.RegimeParams(
            alpha=args.alpha, epsilon=args.eps, k=args.k, L=args.L,
            Delta=args.delta, m=args.m, n=args.n, C=args.C))
        out["combined_feasibility_gap"] = {"lhs": gap.lhs, "rhs": gap.rhs, "holds": gap.holds}
    if not out:
        raise ValueError("no bound is computable from the given parameters; "
                         "pass at least --n and --m")
    inputs = {key: getattr(args, key) for key in
              ("n", "m", "delta", "L", "C", "k", "eps", "alpha", "log_base")}
    _emit(args, "bounds", inputs, out, seed=None,
          summary=[f"{name}: {value}" for name, value in out.items()])
    return 0


def _cmd_oracle(args) -> int:
    drawing = _load_drawing(args.drawing)
    weights = _parse_weights(args.weights, args.k)
    if args.mode == "labeling":
        res = exact_best_labeling(drawing, args.k, args.objective, epsilon=args.eps)
        out = {"objective": _jsonify(res.objective), "witness": list(res.witness),
               "search_space": res.search_space, "exhaustive": res.exhaustive}
    elif args.mode == "partition":
        res = exact_best_edge_partition(drawing, args.k)
        out = {"objective": _jsonify(res.objective), "witness": list(res.witness),
               "search_space": res.search_space, "exhaustive": res.exhaustive}
    elif args.mode == "expectation":
        out = {"expectation": _jsonify(exact_survival_expectation(drawing, weights))}
    elif args.mode == "conditional":
        if args.edge is None or args.i is None or args.j is None:
            raise ValueError("conditional mode needs --edge, --i and --j")
        res = exact_conditional_survival(drawing, weights, args.edge, args.i, args.j)
        out = {
            "partner_probabilities": {str(e): _jsonify(p)
                                      for e, p in sorted(res.partner_probabilities.items())},
            "distribution": {str(s): _jsonify(p) for s, p in sorted(res.distribution.items())},
            "mean": _jsonify(res.mean),
        }
    else:
        rep = dependency_scopes(drawing)
        out = {"counts": list(rep.counts), "max_degree": rep.max_degree,
               "scopes": [sorted(s) for s in rep.scopes]}
    inputs = {"drawing": args.drawing, "mode": args.mode, "k": args.k,
              "objective": args.objective, "eps": args.eps, "weights": args.weights,
              "edge": args.edge, "i": args.i, "j": args.j}
    _emit(args, "oracle", inputs, out, seed=None,
          summary=[f"{key}: {value}" for key, value in out.items()])
    return 0


def _cmd_gen(args) -> int:
    params = {"n": args.n}
    if args.family in ("regularish", "geometric"):
        params["d"] = args.d
    spec = GeneratorSpec(args.family, params, args.seed)
    instance = spec.build()
    if isinstance(instance, Drawing):
        outputs = {"drawing": json.loads(dump_drawing_json(instance)),
                   "C": instance.total_crossings, "L": instance.local_crossing_number}
        lines = [f"family={args.family} n={args.n} C={instance.total_crossings} "
                 f"L={instance.local_crossing_number}"]
    else:
        outputs = {"graph_edge_list": dump_edge_list(instance),
                   "alpha": alpha_of(instance), "max_degree": instance.max_degree,
                   "m": instance.m}
        lines = [f"family={args.family} n={args.n} m={instance.m} "
                 f"alpha={alpha_of(instance):.4f}"]
    _emit(args, "gen", {"family": args.family, **params}, outputs,
          seed=args.seed, summary=lines)
    return 0


def _load_drawing(path: str) -> Drawing:
    text = Path(path).read_text()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"{path}: malformed JSON: {exc}") from None
    if isinstance(doc, dict) and doc.get("version") == ENVELOPE_VERSION:
        inner = doc.get("outputs", {}).get("drawing")
        if inner is None:
            raise ValueError(f"{path}: envelope has no outputs.drawing field")
        return load_drawing_json(json.dumps(inner))
    return load_drawing_json(text)


def _parse_weights(spec: str, k: int) -> WeightVector:
    if spec == "optimal":
        return optimal_weights(k)
    if spec == "uniform":
        return uniform_weights(k)
    try:
        probs = tuple(float(x) for x in spec.split(","))
    except ValueError:
        raise ValueError(f"--weights must be 'optimal', 'uniform' or comma-separated "
                         f"floats, got {spec!r}") from None
    if len(probs) != k:
        raise ValueError(f"--weights lists {len(probs)} probabilities but k={k}")
    return WeightVector.from_probabilities(probs)


def _jsonify(value):
    """Fractions become [numerator, denominator]; markers become objects."""
    if isinstance(value, Fraction):
        return [value.numerator, value.denominator]
    if isinstance(value, bounds_mod.HypothesisUnmet):
        return {"hypothesis_unmet": value.reason}
    return value


def _emit(args, command: str, inputs: dict, outputs: dict, seed,
          summary: list[str] | None = None) -> None:
    envelope = {"version": ENVELOPE_VERSION, "command": command,
                "inputs": inputs, "outputs": outputs, "seed": seed}
    text = json.dumps(envelope, sort_keys=True, indent=2) + "\n"
    if getattr(args, "out", None):
        Path(args.out).write_text(text)
        for line in summary or []:
            print(line)
    else:
        sys.stdout.write(text)


if __name__ == "__main__":
    sys.exit(main())
