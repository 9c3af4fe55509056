"""Command-line interface.

Subcommands::

    centrality             score the loaded graph
    greedy --k K           greedy removal search
    exact --k K            exhaustive removal search (work-limited)
    decision --k K --x X   does some removal set push fragility above x?
    emit-ip --k K          write LP-format optimization models
    baseline --strategy S --m M   remove top-M nodes of a centrality ranking
    curve                  removal curves for several strategies (CSV)
    bench                  wall-time benchmark per strategy and budget
    synth                  generate a synthetic graph as an edge list

Common flags: ``--graph`` (edge-list file), ``--no-strike`` (protected
labels), ``--format {text,json,csv}``, ``--manifest`` (reproducibility
record path).  Exit codes: 0 success, 1 input error, 2 infeasible or
work-limit exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings
from pathlib import Path

from .baselines import (betweenness_ranking, closeness_ranking, degree_ranking)
from .graph import fragile, network_degree_centrality
from .harness import (CSV_HEADER, ExperimentConfig, InfeasibleDensityError,
                      STRATEGIES, ZeroBaselineError, benchmark_runtime,
                      emit_csv, generate_synthetic, run_curves)
from .io import EdgeListError, RunManifest, emit_edge_list, parse_edge_list, \
    parse_no_strike
from .ip_model import build_fragility_ip, emit_lp, linearize, relax_bounds
from .solvers import (DEFAULT_WORK_LIMIT, WorkLimitExceeded, exact_opt,
                      fragility_decision, greedy_fragile)

_RANKERS = {
    "degree": degree_ranking,
    "closeness": closeness_ranking,
    "betweenness": betweenness_ranking,
}


class _CliInputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """argparse with exit code 1 on usage errors (2 is reserved)."""

    def error(self, message):  # noqa: D102
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _build_parser() -> _Parser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--graph", help="edge-list file")
    common.add_argument("--no-strike", dest="no_strike",
                        help="file of protected node labels, one per line")
    common.add_argument("--format", choices=("text", "json", "csv"),
                        default="text", help="output format (default text)")
    common.add_argument("--manifest", help="write the run manifest to this path")

    parser = _Parser(prog="fragility",
                     description="node-removal planning for network centralization")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("centrality", parents=[common],
                       help="degree centralization of the graph")
    p.set_defaults(handler=_cmd_centrality)

    p = sub.add_parser("greedy", parents=[common], help="greedy removal search")
    p.add_argument("--k", type=int, required=True, help="removal budget")
    p.set_defaults(handler=_cmd_greedy)

    p = sub.add_parser("exact", parents=[common], help="exhaustive removal search")
    p.add_argument("--k", type=int, required=True, help="removal budget")
    p.add_argument("--work-limit", type=int, default=DEFAULT_WORK_LIMIT,
                   help=f"max subsets to enumerate (default {DEFAULT_WORK_LIMIT})")
    p.set_defaults(handler=_cmd_exact)

    p = sub.add_parser("decision", parents=[common],
                       help="threshold decision on the exact optimum")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--x", type=float, required=True, help="fragility threshold")
    p.add_argument("--work-limit", type=int, default=DEFAULT_WORK_LIMIT)
    p.set_defaults(handler=_cmd_decision)

    p = sub.add_parser("emit-ip", parents=[common],
                       help="write LP-format optimization models")
    p.add_argument("--k", type=int, required=True)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--linearize-i", type=int, metavar="I",
                       help="emit the single model fixing the removal count at I")
    group.add_argument("--all-i", action="store_true",
                       help="emit one model per removal count 1..k")
    p.add_argument("--relax", action="store_true",
                   help="continuous [0,1] domains for X and Z")
    p.add_argument("--out", help="output path for --linearize-i (default stdout)")
    p.add_argument("--out-dir", help="output directory for --all-i")
    p.add_argument("--prefix", default="model", help="file prefix for --all-i")
    p.set_defaults(handler=_cmd_emit_ip)

    p = sub.add_parser("baseline", parents=[common],
                       help="static centrality-ranking removal")
    p.add_argument("--strategy", choices=sorted(_RANKERS), required=True)
    p.add_argument("--m", type=int, required=True, help="how many nodes to remove")
    p.set_defaults(handler=_cmd_baseline)

    p = sub.add_parser("curve", parents=[common],
                       help="removal curves for several strategies")
    p.add_argument("--strategies", default=",".join(STRATEGIES),
                   help="comma-separated subset of: " + ", ".join(STRATEGIES))
    p.add_argument("--max-fraction", type=float, default=0.12)
    p.add_argument("--step", type=int, default=1)
    p.add_argument("--out", help="CSV output path (default stdout)")
    p.set_defaults(handler=_cmd_curve)

    p = sub.add_parser("bench", parents=[common],
                       help="median wall time per strategy and budget")
    p.add_argument("--strategies", default=",".join(STRATEGIES))
    p.add_argument("--budgets", default="1,5,10",
                   help="comma-separated removal budgets (default 1,5,10)")
    p.set_defaults(handler=_cmd_bench)

    p = sub.add_parser("synth", parents=[common],
                       help="generate a synthetic graph as an edge list")
    p.add_argument("--kind", choices=("scale-free", "random", "star-of-stars"),
                   required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, help="target edge count")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", help="edge-list output path (default stdout)")
    p.set_defaults(handler=_cmd_synth)

    return parser


# ----- shared helpers ------------------------------------------------------

def _load_graph(args):
    if not args.graph:
        raise _CliInputError("this command requires --graph")
    try:
        text = Path(args.graph).read_text(encoding="utf-8")
    except OSError as exc:
        raise _CliInputError(f"cannot read graph file: {exc}") from None
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        graph = parse_edge_list(text)
    for w in caught:
        print(f"warning: {w.message}", file=sys.stderr)
    no_strike = frozenset()
    if args.no_strike:
        try:
            ns_text = Path(args.no_strike).read_text(encoding="utf-8")
        except OSError as exc:
            raise _CliInputError(f"cannot read no-strike file: {exc}") from None
        no_strike = parse_no_strike(ns_text, graph)
    return graph, no_strike


def _reject_csv(args, *allowed_commands):
    if args.format == "csv" and args.command not in allowed_commands:
        raise _CliInputError(
            "csv output is only available for the curve and bench commands")


def _manifest_for(args, parameters, outputs, seed=None) -> RunManifest:
    return RunManifest(
        command=args.command,
        parameters=parameters,
        graph_path=getattr(args, "graph", None),
        no_strike_path=getattr(args, "no_strike", None),
        seed=seed,
        outputs=tuple(outputs),
    )


def _finish(args, manifest: RunManifest) -> None:
    path = args.manifest
    if path is None and manifest.outputs:
        path = manifest.outputs[0] + ".manifest.json"
    if path:
        manifest.write(path)


def _emit(args, manifest: RunManifest, text_lines, payload) -> None:
    if args.format == "json":
        body = dict(payload)
        body["command"] = args.command
        body["manifest"] = json.loads(manifest.to_json())
        print(json.dumps(body, indent=2, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _solution_output(args, manifest, labels, solution, base):
    lines = [
        f"removed ({len(solution.removed)}): "
        + (" ".join(labels[i] for i in solution.removed) or "(none)"),
        f"baseline_fragility: {base:.6f}",
        f"final_fragility: {solution.final_fragility:.6f}",
        "trace: " + " ".join(f"{v:.6f}" for v in solution.trace),
    ]
    payload = {
        "removed": [labels[i] for i in solution.removed],
        "baseline_fragility": base,
        "final_fragility": solution.final_fragility,
        "trace": list(solution.trace),
    }
    _emit(args, manifest, lines, payload)


# ----- handlers ------------------------------------------------------------

def _cmd_centrality(args) -> int:
    _reject_csv(args)
    graph, _ = _load_graph(args)
    value = network_degree_centrality(graph)
    manifest = _manifest_for(args, {}, ())
    _emit(args, manifest, [f"{value:.6f}"], {"centrality": value})
    _finish(args, manifest)
    return 0


def _cmd_greedy(args) -> int:
    _reject_csv(args)
    graph, ns = _load_graph(args)
    solution = greedy_fragile(graph, ns, args.k)
    manifest = _manifest_for(args, {"k": args.k}, ())
    _solution_output(args, manifest, graph.labels, solution, solution.trace[0])
    _finish(args, manifest)
    return 0


def _cmd_exact(args) -> int:
    _reject_csv(args)
    graph, ns = _load_graph(args)
    solution = exact_opt(graph, ns, args.k, args.work_limit)
    manifest = _manifest_for(args, {"k": args.k, "work_limit": args.work_limit}, ())
    _solution_output(args, manifest, graph.labels, solution, solution.trace[0])
    _finish(args, manifest)
    return 0


def _cmd_decision(args) -> int:
    _reject_csv(args)
    graph, ns = _load_graph(args)
    answer = fragility_decision(graph, ns, args.k, args.x, args.work_limit)
    manifest = _manifest_for(args, {"k": args.k, "x": args.x}, ())
    _emit(args, manifest, ["true" if answer else "false"], {"decision": answer})
    _finish(args, manifest)
    return 0


def _cmd_emit_ip(args) -> int:
    _reject_csv(args)
    graph, ns = _load_graph(args)
    model = build_fragility_ip(graph, ns, args.k)
    if args.relax:
        model = relax_bounds(model)
    outputs: list[str] = []
    if args.all_i:
        if args.k < 1:
            raise _CliInputError("--all-i needs a budget of at least 1")
        out_dir = Path(args.out_dir or ".")
        out_dir.mkdir(parents=True, exist_ok=True)
        for i in range(1, args.k + 1):
            path = out_dir / f"{args.prefix}_i{i}.lp"
            path.write_text(emit_lp(linearize(model, i)), encoding="utf-8")
            outputs.append(str(path))
        manifest = _manifest_for(args, {"k": args.k, "relax": args.relax,
                                        "all_i": True}, outputs)
        _emit(args, manifest, [f"wrote {p}" for p in outputs],
              {"models": outputs})
    elif args.linearize_i is not None:
        text = emit_lp(linearize(model, args.linearize_i))
        if args.out:
            Path(args.out).write_text(text, encoding="utf-8")
            outputs.append(args.out)
            lines = [f"wrote {args.out}"]
        else:
            lines = [text.rstrip("\n")]
        manifest = _manifest_for(args, {"k": args.k, "relax": args.relax,
                                        "linearize_i": args.linearize_i}, outputs)
        _emit(args, manifest, lines, {"model": text, "path": args.out})
    else:
        raise _CliInputError(
            "the model objective is fractional: pass --linearize-i I for one "
            "removal count or --all-i for the whole 1..k family")
    _finish(args, manifest)
    return 0


def _cmd_baseline(args) -> int:
    _reject_csv(args)
    graph, ns = _load_graph(args)
    ranking = _RANKERS[args.strategy](graph, ns)
    if args.m < 0 or args.m > len(ranking.order):
        raise _CliInputError(
            f"--m must lie in 0..{len(ranking.order)} for this graph")
    removed = ranking.order[:args.m]
    base = fragile(graph, ())
    frag = fragile(graph, removed)
    manifest = _manifest_for(args, {"strategy": args.strategy, "m": args.m}, ())
    lines = [
        f"strategy: {args.strategy}",
        f"removed ({len(removed)}): "
        + (" ".join(graph.labels[i] for i in removed) or "(none)"),
        f"baseline_fragility: {base:.6f}",
        f"final_fragility: {frag:.6f}",
    ]
    payload = {
        "strategy": args.strategy,
        "removed": [graph.labels[i] for i in removed],
        "baseline_fragility": base,
        "final_fragility": frag,
    }
    _emit(args, manifest, lines, payload)
    _finish(args, manifest)
    return 0


def _parse_strategies(raw: str) -> tuple[str, ...]:
    names = tuple(s.strip() for s in raw.split(",") if s.strip())
    for s in names:
        if s not in STRATEGIES:
            raise _CliInputError(f"unknown strategy {s!r}")
    if not names:
        raise _CliInputError("no strategies selected")
    return names


def _cmd_curve(args) -> int:
    graph, ns = _load_graph(args)
    cfg = ExperimentConfig(strategies=_parse_strategies(args.strategies),
                           max_fraction=args.max_fraction, step=args.step)
    points = run_curves(graph, ns, cfg)
    text = emit_csv(points)
    outputs: list[str] = []
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
        outputs.append(args.out)
    manifest = _manifest_for(args, {"strategies": list(cfg.strategies),
                                    "max_fraction": cfg.max_fraction,
                                    "step": cfg.step}, outputs)
    if args.format == "json":
        payload = {"points": [
            {"strategy": p.strategy, "nodes_removed": p.nodes_removed,
             "fraction_removed": p.fraction_removed, "fragility": p.fragility,
             "percent_increase": p.percent_increase, "wall_time_s": p.wall_time}
            for p in points]}
        _emit(args, manifest, [], payload)
    elif not args.out:
        print(text, end="")
    else:
        print(f"wrote {args.out}")
    _finish(args, manifest)
    return 0


def _cmd_bench(args) -> int:
    graph, ns = _load_graph(args)
    strategies = _parse_strategies(args.strategies)
    try:
        budgets = [int(b) for b in args.budgets.split(",") if b.strip()]
    except ValueError:
        raise _CliInputError(f"bad --budgets value {args.budgets!r}") from None
    if not budgets:
        raise _CliInputError("no budgets given")
    rows = []
    for strategy in strategies:
        for budget, seconds in benchmark_runtime(graph, ns, strategy, budgets):
            rows.append((strategy, budget, seconds))
    manifest = _manifest_for(args, {"strategies": list(strategies),
                                    "budgets": budgets}, ())
    lines = ["strategy,budget,median_wall_time_s"]
    lines += [f"{s},{b},{t:.6f}" for s, b, t in rows]
    payload = {"measurements": [
        {"strategy": s, "budget": b, "median_wall_time_s": t}
        for s, b, t in rows]}
    _emit(args, manifest, lines, payload)
    _finish(args, manifest)
    return 0


def _cmd_synth(args) -> int:
    _reject_csv(args)
    graph = generate_synthetic(args.kind, args.n, args.m, args.seed)
    text = emit_edge_list(graph)
    outputs: list[str] = []
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
        outputs.append(args.out)
    manifest = _manifest_for(args, {"kind": args.kind, "n": args.n,
                                    "m": args.m}, outputs, seed=args.seed)
    if args.format == "json":
        _emit(args, manifest, [],
              {"nodes": graph.node_count, "edges": graph.edge_count,
               "path": args.out})
    elif args.out:
        print(f"wrote {args.out} ({graph.node_count} nodes, "
              f"{graph.edge_count} edges)")
    else:
        print(text, end="")
    _finish(args, manifest)
    return 0


# ----- entry points --------------------------------------------------------

def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1
    try:
        return args.handler(args)
    except _CliInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (WorkLimitExceeded, InfeasibleDensityError, ZeroBaselineError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (EdgeListError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def entry() -> None:  # console-script shim
    raise SystemExit(main())
