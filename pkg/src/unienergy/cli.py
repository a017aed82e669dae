"""Command-line entry point.

Exit codes: 0 success, 1 a mathematical counterexample was found, 2 usage or
input error. Floats are printed with 10 significant digits, integers in full.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path

from . import __version__
from .energy import EnergyValue, energy_coulson, energy_eigen
from .enumeration import MAX_N, enumerate_Un, run_to_csv, save_run, verify_girth_theorems, verify_main_theorem
from .errors import UnienergyError
from .families import NAMES, build
from .graph import LabeledGraph, format_graph, parse_graph, read_graphs
from .order import Relation, compare
from .polynomial import charpoly_det, charpoly_recursive
from .transforms import apply, find_anchors
from .verify import verify_paper

EXIT_OK, EXIT_COUNTEREXAMPLE, EXIT_USAGE = 0, 1, 2


@dataclass(frozen=True)
class RunConfig:
    tolerance: float
    size_budget: int
    output_format: str
    results_dir: Path | None
    jobs: int

    def __post_init__(self) -> None:
        if not self.tolerance > 0:
            raise ValueError(f"tolerance must be positive, got {self.tolerance}")
        if self.size_budget < 6:
            raise ValueError(f"size budget must be at least 6, got {self.size_budget}")
        if self.jobs < 1:
            raise ValueError(f"jobs must be at least 1, got {self.jobs}")


class UsageError(Exception):
    pass


def fmt_float(x: float) -> float:
    return float(f"{x:.10g}")


def _clean(obj):
    """Round every float to 10 significant digits for output."""
    if isinstance(obj, float):
        return fmt_float(obj)
    if isinstance(obj, dict):
        return {k: _clean(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_clean(v) for v in obj]
    return obj


def _env_float(name: str, default: float) -> float:
    raw = os.environ.get(name)
    return float(raw) if raw else default


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    return int(raw) if raw else default


def _common(p: argparse.ArgumentParser) -> None:
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="fmt", action="store_const", const="json", help="emit JSON")
    fmt.add_argument("--csv", dest="fmt", action="store_const", const="csv", help="emit CSV")
    p.add_argument("--tol", type=float, default=None, help="quadrature tolerance (default UNIENERGY_TOL or 1e-8)")
    p.add_argument("--max-n", type=int, default=None, help="size budget for enumeration")
    p.add_argument("--out", default=None, help="results directory")
    p.add_argument("--jobs", type=int, default=None, help="worker processes (default UNIENERGY_JOBS or 1)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="unienergy", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("charpoly", help="signed coefficients and b-sequence")
    p.add_argument("graph_file")
    p.add_argument("--method", choices=("recursive", "det"), default="recursive")
    _common(p)

    p = sub.add_parser("energy", help="graph energy")
    p.add_argument("graph_file", nargs="?")
    p.add_argument("--family")
    p.add_argument("--n", type=int)
    p.add_argument("--method", choices=("eig", "coulson", "both"), default="eig")
    _common(p)

    p = sub.add_parser("compare", help="quasi-order verdict for two graphs")
    p.add_argument("g1")
    p.add_argument("g2")
    _common(p)

    p = sub.add_parser("family", help="build a named graph")
    p.add_argument("--name", required=True, choices=NAMES)
    p.add_argument("--n", type=int)
    p.add_argument("--emit", choices=("graph", "charpoly", "energy"), default="graph")
    _common(p)

    p = sub.add_parser("transform", help="list or apply surgeries")
    p.add_argument("--kind", required=True, choices=("egt", "op1", "op2", "op3"))
    p.add_argument("graph_file")
    act = p.add_mutually_exclusive_group()
    act.add_argument("--list-anchors", action="store_true")
    act.add_argument("--apply", type=int, metavar="K", help="apply the K-th anchor (0-based)")
    _common(p)

    p = sub.add_parser("enumerate", help="enumerate U_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--verify", choices=("main", "girth", "all"))
    _common(p)

    p = sub.add_parser("verify-paper", help="run every check in order")
    _common(p)
    return parser


def _config(args) -> RunConfig:
    tol = args.tol if args.tol is not None else _env_float("UNIENERGY_TOL", 1e-8)
    jobs = args.jobs if args.jobs is not None else _env_int("UNIENERGY_JOBS", 1)
    budget = args.max_n if args.max_n is not None else (12 if args.command == "verify-paper" else MAX_N)
    try:
        return RunConfig(tol, budget, args.fmt or "text", Path(args.out) if args.out else None, jobs)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _one_graph(path: str) -> LabeledGraph:
    graphs = _graphs(path)
    if len(graphs) != 1:
        raise UsageError(f"{path}: expected exactly one graph, found {len(graphs)}")
    return graphs[0]


def _graphs(path: str) -> list[LabeledGraph]:
    if path == "-":
        lines = (s.strip() for s in sys.stdin)
        return [parse_graph(ln) for ln in lines if ln and not ln.startswith("#")]
    try:
        return read_graphs(path)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc


def _energy_json(e: EnergyValue) -> dict:
    return {"value": e.value, "method": e.method, "err": e.err_estimate}


def _emit(cfg: RunConfig, payload, text: str, csv_rows: list[list] | None = None) -> None:
    if cfg.output_format == "json":
        print(json.dumps(_clean(payload), indent=1, sort_keys=True))
    elif cfg.output_format == "csv" and csv_rows is not None:
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerows(_clean(csv_rows))
        sys.stdout.write(buf.getvalue())
    else:
        print(text)


# ---------------------------------------------------------------------------
# subcommands


def cmd_charpoly(args, cfg: RunConfig) -> int:
    items, rows, lines = [], [["graph", "a", "b"]], []
    for g in _graphs(args.graph_file):
        p = charpoly_det(g) if args.method == "det" else charpoly_recursive(g)
        b = [abs(c) for c in p.a]
        items.append({"graph": format_graph(g), "a": list(p.a), "b": b})
        rows.append([format_graph(g), " ".join(map(str, p.a)), " ".join(map(str, b))])
        lines.append(f"{format_graph(g)}\n  phi = {p}\n  b = {b}")
    _emit(cfg, {"results": items}, "\n".join(lines), rows)
    return EXIT_OK


def _energies(g: LabeledGraph, method: str, tol: float) -> list[EnergyValue]:
    out = []
    if method in ("eig", "both"):
        out.append(energy_eigen(g))
    if method in ("coulson", "both"):
        out.append(energy_coulson(g, tol=tol))
    return out


def cmd_energy(args, cfg: RunConfig) -> int:
    if args.family:
        if args.graph_file:
            raise UsageError("give either a graph file or --family, not both")
        g = build(args.family, args.n)
    elif args.graph_file:
        g = _one_graph(args.graph_file)
    else:
        raise UsageError("energy needs a graph file or --family NAME --n N")
    vals = _energies(g, args.method, cfg.tolerance)
    if len(vals) == 1:
        payload = _energy_json(vals[0])
    else:
        payload = {"results": [_energy_json(v) for v in vals], "agree": vals[0].agrees_with(vals[1], 1e-9)}
    text = "\n".join(f"{v.method}: {v.value:.10g} (err {v.err_estimate:.3g})" for v in vals)
    rows = [["method", "value", "err"]] + [[v.method, v.value, v.err_estimate] for v in vals]
    _emit(cfg, payload, text, rows)
    return EXIT_OK


def cmd_compare(args, cfg: RunConfig) -> int:
    g1, g2 = _one_graph(args.g1), _one_graph(args.g2)
    b1, b2 = charpoly_recursive(g1).b, charpoly_recursive(g2).b
    v = compare(b1, b2)
    e1, e2 = energy_eigen(g1).value, energy_eigen(g2).value
    payload = {
        "relation": v.relation.value, "witness_index": v.witness_index,
        "b1": list(b1), "b2": list(b2), "E1": e1, "E2": e2,
    }
    if v.second_index is not None:
        payload["second_index"] = v.second_index
    text = f"{v.relation.value} (witness {v.witness_index})\nE1 = {e1:.10g}\nE2 = {e2:.10g}"
    _emit(cfg, payload, text, [list(payload), list(payload.values())])
    return EXIT_OK


def cmd_family(args, cfg: RunConfig) -> int:
    g = build(args.name, args.n)
    if args.emit == "graph":
        _emit(cfg, {"name": args.name, "n": g.n, "graph": format_graph(g)}, format_graph(g))
    elif args.emit == "charpoly":
        p = charpoly_recursive(g)
        _emit(cfg, {"name": args.name, "n": g.n, "a": list(p.a), "b": [abs(c) for c in p.a]}, str(p))
    else:
        e = energy_eigen(g)
        _emit(cfg, _energy_json(e), f"{e.value:.10g}")
    return EXIT_OK


_KIND = {"egt": "EGT", "op1": "OpI", "op2": "OpII", "op3": "OpIII"}


def cmd_transform(args, cfg: RunConfig) -> int:
    g = _one_graph(args.graph_file)
    anchors = find_anchors(g, _KIND[args.kind])
    if args.apply is None:
        listing = [{"index": i, "kind": s.kind, "anchors": list(s.anchors)} for i, s in enumerate(anchors)]
        text = "\n".join(f"{i}: {s}" for i, s in enumerate(anchors)) or "no valid anchors"
        _emit(cfg, {"anchors": listing}, text)
        return EXIT_OK
    if not 0 <= args.apply < len(anchors):
        raise UsageError(f"--apply {args.apply} out of range; {len(anchors)} anchor(s) found")
    s = anchors[args.apply]
    h = apply(g, s)
    v = compare(charpoly_recursive(g).b, charpoly_recursive(h).b)
    payload = {"kind": s.kind, "anchors": list(s.anchors), "graph": format_graph(h), "relation": v.relation.value}
    _emit(cfg, payload, f"{format_graph(h)}\n{v.relation.value}")
    # every surgery is claimed to lower the b-sequence strictly
    return EXIT_OK if v.relation is Relation.DOMINATES_STRICTLY else EXIT_COUNTEREXAMPLE


def cmd_enumerate(args, cfg: RunConfig) -> int:
    if args.n > cfg.size_budget:
        raise UsageError(f"--n {args.n} exceeds the size budget {cfg.size_budget}")
    run = enumerate_Un(args.n, max_n=cfg.size_budget, jobs=cfg.jobs)
    reports = []
    if args.verify in ("main", "all"):
        reports.append(verify_main_theorem(args.n, run=run, max_n=cfg.size_budget))
    if args.verify in ("girth", "all"):
        reports.extend(verify_girth_theorems(args.n, run=run, max_n=cfg.size_budget))
    if cfg.results_dir is not None:
        save_run(run, cfg.results_dir, reports)
    if cfg.output_format == "csv":
        sys.stdout.write(run_to_csv(run))
    else:
        doc = run.to_json()
        doc["reports"] = [r.to_json() for r in reports]
        text = [f"U_{run.n}: {run.count} classes"] + [f"{r.theorem}: {r.verdict} ({r.checked} checked)" for r in reports]
        _emit(cfg, doc, "\n".join(text))
    return EXIT_OK if all(r.holds for r in reports) else EXIT_COUNTEREXAMPLE


def cmd_verify_paper(args, cfg: RunConfig) -> int:
    if cfg.size_budget > MAX_N:
        raise UsageError(f"--max-n is limited to {MAX_N}")
    report = verify_paper(cfg.size_budget, jobs=cfg.jobs)
    doc = report.to_json()
    if cfg.results_dir is not None:
        cfg.results_dir.mkdir(parents=True, exist_ok=True)
        (cfg.results_dir / "verify-paper.json").write_text(json.dumps(_clean(doc), indent=1, sort_keys=True) + "\n")
    lines = [f"{s.theorem}: {s.verdict} ({s.checked} checked)" for s in report.sections]
    rows = [["theorem", "verdict", "checked"]] + [[s.theorem, s.verdict, s.checked] for s in report.sections]
    _emit(cfg, doc, "\n".join(lines + [f"overall: {doc['verdict']}"]), rows)
    return EXIT_OK if report.holds else EXIT_COUNTEREXAMPLE


COMMANDS = {
    "charpoly": cmd_charpoly,
    "energy": cmd_energy,
    "compare": cmd_compare,
    "family": cmd_family,
    "transform": cmd_transform,
    "enumerate": cmd_enumerate,
    "verify-paper": cmd_verify_paper,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _config(args)
        return COMMANDS[args.command](args, cfg)
    except (UsageError, UnienergyError, KeyError) as exc:
        print(f"unienergy {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
