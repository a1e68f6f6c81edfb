"""Command-line frontend.

Text output is line oriented (`key = value`) so shell tests can grep it.
Exit codes: 0 success / bounds hold, 1 bound violation or table
mismatch, 2 usage or I/O error.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import harness
from .families import FAMILY_NAMES, FamilySpec, generate
from .graph import (GraphError, PartiallyDominatedGraph, bits, format_edge_list,
                    mask_of, parse_edge_list)
from .solver import (MemoLimitExceeded, Solver, SolverConfig, Turn,
                     VertexCapExceeded, domination_number)

# Desk-scale order caps per (base, edges added); the paper's full ranges
# sit behind --full because the memo table grows as 2^n.
DESK_CAPS = {("path", 2): 14, ("path", 3): 12, ("cycle", 2): 14, ("cycle", 3): 12}
FULL_CAPS = {("path", 2): 21, ("path", 3): 15, ("cycle", 2): 24, ("cycle", 3): 20}


class UsageError(Exception):
    pass


def _build_parser():
    p = argparse.ArgumentParser(prog="domgame",
                                description="Exact domination game toolkit")
    p.add_argument("--vertex-cap", type=int, default=None,
                   help="solver refusal threshold (env DOMGAME_CAP also works)")
    p.add_argument("--memo-limit", type=int, default=None)
    p.add_argument("--no-pruning", action="store_true")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--format", choices=("json", "csv", "text"), default="text")
    p.add_argument("--output", default=None, help="write report here instead of stdout")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", help="game value of a graph file")
    s.add_argument("file")
    s.add_argument("--dominated", default=None,
                   help="comma-separated pre-dominated vertex ids")
    s.add_argument("--start", choices=("dominator", "staller"),
                   default="dominator")

    s = sub.add_parser("gamma", help="domination number of a graph file")
    s.add_argument("file")

    s = sub.add_parser("family", help="generate a named family instance")
    s.add_argument("name", choices=FAMILY_NAMES)
    s.add_argument("params", nargs="*", help="key=value parameters")
    s.add_argument("--emit", default=None, help="write the edge list here")
    s.add_argument("--solve", action="store_true")

    s = sub.add_parser("sweep", help="solve a family over a parameter range")
    s.add_argument("name", choices=("tadpole", "two-tailed-tadpole",
                                    "hatted-cycle", "broken-ladder",
                                    "cycle-chord", "fx", "r-graph"))
    s.add_argument("--max-order", type=int, default=None)
    s.add_argument("--from", dest="lo", type=int, default=4)
    s.add_argument("--to", dest="hi", type=int, default=None)
    s.add_argument("--k-max", type=int, default=3)
    s.add_argument("--count", type=int, default=50)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--n", default=None, help="comma-separated n values")

    s = sub.add_parser("add-edges", help="enumerate edge additions to a path/cycle")
    s.add_argument("--base", choices=("path", "cycle"), required=True)
    s.add_argument("--n", type=int, default=None,
                   help="single order; omit to sweep 4..cap")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--full", action="store_true",
                   help="use the full published ranges (slow: memo is 2^n)")
    s.add_argument("--no-symmetry", action="store_true")

    sub.add_parser("verify-tables", help="regenerate the residue-case tables")

    s = sub.add_parser("check-r", help="equality evidence for R-graphs")
    s.add_argument("--max", type=int, required=True)

    s = sub.add_parser("props", help="seeded randomized property suite")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--trials", type=int, default=500)
    return p


def _config(args) -> SolverConfig:
    cfg = SolverConfig()
    env_cap = os.environ.get("DOMGAME_CAP")
    if env_cap is not None:
        try:
            cfg.vertex_cap = int(env_cap)
        except ValueError:
            raise UsageError(f"DOMGAME_CAP is not a decimal integer: {env_cap!r}")
    if args.vertex_cap is not None:
        cfg.vertex_cap = args.vertex_cap
    if args.memo_limit is not None:
        cfg.memo_limit = args.memo_limit
    cfg.pruning = not args.no_pruning
    return cfg


def _load(path: str) -> PartiallyDominatedGraph:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}")
    try:
        return parse_edge_list(text)
    except GraphError as exc:
        raise UsageError(f"malformed edge list in {path}: {exc}")


def _parse_dominated(spec: str, n: int) -> int:
    try:
        ids = [int(s) for s in spec.split(",") if s.strip() != ""]
    except ValueError:
        raise UsageError(f"bad --dominated list {spec!r}")
    if any(not 0 <= v < n for v in ids):
        raise UsageError(f"--dominated id out of range in {spec!r}")
    return mask_of(ids)


def _parse_params(items):
    params = {}
    for item in items:
        if "=" not in item:
            raise UsageError(f"parameter {item!r} is not key=value")
        key, _, val = item.partition("=")
        if key == "d":
            params[key] = [int(s) for s in val.split(",")]
        elif key == "w":
            params[key] = mask_of(int(s) for s in val.split(","))
        elif key == "x-file":
            params["x"] = _load(val).graph
        else:
            try:
                params[key] = int(val)
            except ValueError:
                raise UsageError(f"parameter {item!r} needs an integer value")
    return params


def _emit_report(report, args, out):
    if args.format == "json":
        text = report.to_json() + "\n"
    elif args.format == "csv":
        text = report.to_csv()
    else:
        lines = [f"experiment = {report.name}", f"ok = {report.ok}"]
        for k, v in sorted(report.parameters.items()):
            lines.append(f"{k} = {v}")
        if report.max_value is not None:
            lines.append(f"max_value = {report.max_value}")
        for note in report.notes:
            lines.append(f"note = {note}")
        for w in report.witnesses[:20]:
            lines.append(f"witness = {w}")
        lines.append(f"wall_time = {report.wall_time:.3f}")
        text = "\n".join(lines) + "\n"
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        out.write(text)
    return 0 if report.ok else 1


def _cmd_solve(args, cfg, out):
    pdg = _load(args.file)
    dominated = pdg.dominated
    if args.dominated is not None:
        # Explicit flag overrides the file's dominated: line.
        dominated = _parse_dominated(args.dominated, pdg.graph.n)
    turn = Turn.DOMINATOR if args.start == "dominator" else Turn.STALLER
    solver = Solver(pdg.graph, cfg)
    value = solver.game_value(dominated, turn)
    key = "gamma_g" if turn is Turn.DOMINATOR else "gamma_g_staller"
    out.write(f"{key} = {value}\n")
    if value:
        moves = solver.optimal_first_moves(dominated, turn)
        out.write("optimal_first_moves = "
                  + ",".join(str(v) for v in bits(moves)) + "\n")
    return 0


def _cmd_gamma(args, cfg, out):
    pdg = _load(args.file)
    out.write(f"gamma = {domination_number(pdg.graph, cfg.vertex_cap)}\n")
    return 0


def _cmd_family(args, cfg, out):
    try:
        spec = FamilySpec(args.name, _parse_params(args.params))
        lg = generate(spec)
    except GraphError as exc:
        raise UsageError(str(exc))
    out.write(f"family = {spec.describe()}\n")
    out.write(f"n = {lg.graph.n}\n")
    out.write(f"m = {lg.graph.edge_count}\n")
    if args.emit:
        with open(args.emit, "w", encoding="utf-8") as fh:
            fh.write(format_edge_list(lg.partial))
        out.write(f"emitted = {args.emit}\n")
    if args.solve:
        value = Solver(lg.graph, cfg).game_value(lg.dominated)
        out.write(f"gamma_g = {value}\n")
    return 0


def _cmd_sweep(args, cfg, out):
    name = args.name
    if name == "tadpole":
        specs = harness.tadpole_specs(args.max_order or 20)
    elif name == "two-tailed-tadpole":
        specs = harness.two_tailed_specs(args.max_order or 18)
    elif name == "hatted-cycle":
        specs = harness.hatted_cycle_specs(args.lo, args.hi or 21)
    elif name == "broken-ladder":
        specs = harness.broken_ladder_specs(args.k_max)
    elif name == "cycle-chord":
        specs = harness.cycle_chord_specs(args.max_order or 18)
    elif name == "fx":
        specs = harness.random_fx_specs(args.count, args.seed,
                                        args.max_order or 18)
    else:
        values = [int(s) for s in (args.n or "2,3,4").split(",")]
        specs = harness.r_graph_specs(values)
    report = harness.sweep_family(specs, config=cfg, workers=args.workers,
                                  name=f"sweep-{name}")
    return _emit_report(report, args, out)


def _cmd_add_edges(args, cfg, out):
    caps = FULL_CAPS if args.full else DESK_CAPS
    if args.n is not None:
        orders = [args.n]
    else:
        try:
            cap = caps[(args.base, args.k)]
        except KeyError:
            raise UsageError(f"no default range for base={args.base} k={args.k}; "
                             "pass --n explicitly")
        if args.full:
            out.write(f"warning = full range up to n={cap}; this can take hours\n")
        orders = list(range(4, cap + 1))
    status = 0
    for n in orders:
        report = harness.enumerate_edge_additions(
            args.base, n, args.k, config=cfg,
            symmetry=not args.no_symmetry, workers=args.workers)
        status = max(status, _emit_report(report, args, out))
    return status


def _cmd_verify_tables(args, cfg, out):
    return _emit_report(harness.verify_tables(), args, out)


def _cmd_check_r(args, cfg, out):
    report = harness.check_r_equality(args.max, config=cfg)
    return _emit_report(report, args, out)


def _cmd_props(args, cfg, out):
    report = harness.property_suite(args.seed, args.trials, config=cfg)
    return _emit_report(report, args, out)


_COMMANDS = {
    "solve": _cmd_solve,
    "gamma": _cmd_gamma,
    "family": _cmd_family,
    "sweep": _cmd_sweep,
    "add-edges": _cmd_add_edges,
    "verify-tables": _cmd_verify_tables,
    "check-r": _cmd_check_r,
    "props": _cmd_props,
}


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        cfg = _config(args)
        return _COMMANDS[args.command](args, cfg, out)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (GraphError, VertexCapExceeded, MemoLimitExceeded, ValueError,
            OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
