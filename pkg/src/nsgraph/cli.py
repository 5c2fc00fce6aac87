"""Command-line interface: ``nsgraph {approximate,indices,distance,validate}``.

Exit codes: 0 success, 1 usage error, 2 data error.
"""
from __future__ import annotations

import argparse
import logging
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import fast
from .anneal import SCHEMES, AnnealConfig, AnnealResult, Schedule, anneal
from .distance import spectral_distance, walk_distance
from .errors import NSGError
from .graphio import digest, load_edge_list, read_edge_list
from .oracle import oracle_indices
from .report import RunReport, index_table
from .sequences import (
    CompactCreationSequence,
    CreationSequence,
    compact_from_full,
    full_from_compact,
    normalize,
    realize,
)

log = logging.getLogger("nsgraph")

EXIT_USAGE = 1
EXIT_DATA = 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _add_sequence_args(p, edges=True):
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--compact", metavar="A", help="compact creation sequence, e.g. 1,2,1,1,5,2")
    g.add_argument("--bits", metavar="BITS", help="creation sequence bits (minimum representation unless --full)")
    if edges:
        g.add_argument("--edges", metavar="PATH", help="edge-list file of an arbitrary graph")
    p.add_argument("--full", action="store_true", help="--bits gives all n bits instead of the n-2 middle bits")


def _sequence_from_args(args) -> CompactCreationSequence:
    if args.compact is not None:
        return CompactCreationSequence.parse(args.compact)
    return compact_from_full(CreationSequence.from_string(args.bits, full=args.full))


# -- indices ----------------------------------------------------------------


def cmd_indices(args) -> int:
    human = args.format == "table"
    if getattr(args, "edges", None) is not None:
        mode = args.mode or "oracle"
        if mode != "oracle":
            raise NSGError("fast indices need a compact or creation sequence, not an arbitrary edge list")
        g = load_edge_list(args.edges).graph
        values = oracle_indices(g, strict=False)
        columns = {"oracle": values}
    else:
        a = _sequence_from_args(args)
        mode = args.mode or "fast"
        columns = {}
        if mode in ("fast", "both"):
            columns["fast"] = fast.all_indices(a)
        if mode in ("oracle", "both"):
            columns["oracle"] = oracle_indices(realize(a))
    text = index_table(columns, human=human)
    _emit(text, args.out)
    undefined = [k for col in columns.values() for k, v in col.items() if v is None]
    if undefined:
        log.error("undefined for this graph (disconnected or edgeless): %s", ", ".join(undefined))
        return EXIT_DATA
    return 0


def _emit(text, out):
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


# -- distance ---------------------------------------------------------------


def cmd_distance(args) -> int:
    g1 = load_edge_list(args.first).graph
    g2 = load_edge_list(args.second).graph
    fn = walk_distance if args.metric == "walk" else spectral_distance
    print(f"{fn(g1, g2):.6f}")
    return 0


# -- validate ---------------------------------------------------------------


def cmd_validate(args) -> int:
    if args.raw is not None:
        raw = [int(tok) for tok in args.raw.split(",") if tok.strip()]
        a = normalize(raw)
    else:
        a = _sequence_from_args(args)
    c = full_from_compact(a)
    print(f"compact: {a}")
    print(f"creation: {c.full_string()}")
    print(f"minimum: {c.minimum_representation()}")
    print(f"n: {a.n}")
    print(f"r: {a.r}")
    print(f"edges: {fast.edge_count(a)}")
    return 0


# -- approximate ------------------------------------------------------------


def approximate(text: str, config: AnnealConfig) -> tuple[RunReport, AnnealResult]:
    """Anneal toward the graph in edge-list ``text``; return the report and raw result."""
    parsed = read_edge_list(text)
    g = parsed.graph
    start = time.perf_counter()
    result = anneal(g, config)
    elapsed = time.perf_counter() - start
    sched = config.schedule
    report = RunReport(
        input_digest=digest(text),
        input_vertices=g.n,
        input_edges=g.m,
        vertex_labels=parsed.labels,
        config={
            "distance": config.distance,
            "perturbation": config.scheme,
            "t0": sched.t0,
            "t1": sched.t1,
            "steps": sched.steps,
            "seed": config.seed,
            "window": config.window_size,
        },
        best_compact=str(result.best),
        best_energy=result.best_energy,
        final_compact=str(result.final),
        final_energy=result.final_energy,
        initial_compact=str(result.initial),
        original_indices=oracle_indices(g, strict=False),
        nsg_indices=fast.all_indices(result.best),
        wall_time=elapsed,
    )
    return report, result


def write_run(out: Path, report: RunReport, result) -> None:
    out.mkdir(parents=True, exist_ok=True)
    (out / "report.csv").write_text(report.to_csv())
    (out / "indices.csv").write_text(report.indices_csv())
    (out / "timeline.csv").write_text(result.timeline.to_csv())
    (out / "timing.csv").write_text(f"field,value\nwall_time_s,{report.wall_time!r}\n")


def _run_one(text, config, out):
    report, result = approximate(text, config)
    if out is not None:
        write_run(out, report, result)
    return report


def cmd_approximate(args) -> int:
    text = Path(args.graph).read_text()
    read_edge_list(text)  # fail fast on malformed input
    schedule = Schedule(args.t0, args.t1, args.steps)
    out = Path(args.out) if args.out else None
    seeds = list(range(args.seed, args.seed + args.batch))
    configs = [AnnealConfig(args.perturbation, args.distance, schedule, s, args.window) for s in seeds]
    if len(configs) == 1:
        reports = [_run_one(text, configs[0], out)]
    else:
        outs = [out / f"seed-{s}" if out else None for s in seeds]
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            reports = list(pool.map(_run_one, [text] * len(configs), configs, outs))
    for rep in reports:
        print(rep.summary())
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="nsgraph", description="Nested split graph approximation and fast graph indices.")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    ap = sub.add_parser("approximate", help="anneal toward the NSG closest to a graph")
    ap.add_argument("graph", help="edge-list file")
    ap.add_argument("--distance", choices=("walk", "spectral"), default="spectral")
    ap.add_argument("--perturbation", choices=SCHEMES, default="hamming")
    ap.add_argument("--t0", type=float, default=1e2)
    ap.add_argument("--t1", type=float, default=1e-7)
    ap.add_argument("--steps", type=int, default=1_000_000)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--window", type=int, default=None, help="telemetry window in steps (default steps/100)")
    ap.add_argument("--batch", type=int, default=1, help="run this many consecutive seeds in parallel")
    ap.add_argument("--jobs", type=int, default=None, help="worker processes for --batch")
    ap.add_argument("--out", help="directory for report.csv, indices.csv, timeline.csv")
    ap.set_defaults(func=cmd_approximate)

    ip = sub.add_parser("indices", help="compute the nine graph indices")
    _add_sequence_args(ip)
    ip.add_argument("--mode", choices=("fast", "oracle", "both"), default=None)
    ip.add_argument("--format", choices=("table", "csv"), default="table")
    ip.add_argument("--out", help="write to this file instead of stdout")
    ip.set_defaults(func=cmd_indices)

    dp = sub.add_parser("distance", help="distance between two graphs of equal order")
    dp.add_argument("first")
    dp.add_argument("second")
    dp.add_argument("--metric", choices=("walk", "spectral"), default="spectral")
    dp.set_defaults(func=cmd_distance)

    vp = sub.add_parser("validate", help="check a sequence and print its canonical forms")
    g = vp.add_mutually_exclusive_group(required=True)
    g.add_argument("--compact", metavar="A")
    g.add_argument("--bits", metavar="BITS")
    g.add_argument("--raw", metavar="CELLS", help="cell sizes that may include zeros; normalised first")
    vp.add_argument("--full", action="store_true")
    vp.set_defaults(func=cmd_validate)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # --help and usage errors
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(name)s: %(levelname)s: %(message)s")
    try:
        return args.func(args)
    except (NSGError, OSError, ValueError) as exc:
        log.error("%s", exc)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
