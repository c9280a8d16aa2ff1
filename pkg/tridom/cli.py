'''
python -m tridom gen --kind enumerate --n 6 --seed 0 -o hexagons.jsonl
python -m tridom --jobs 4 solve --mode semipaired -i hexagons.jsonl --verify
python -m tridom exact -i k4.ntri
python -m tridom render -i k4.ntri -o k4.svg --set '[[0, 1]]'
python -m tridom bench --suite small
'''

import argparse
import json
import logging
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Any

from .base import CaseCoverage
from .config import SolverConfig, load_config, parse_overrides
from .errors import FormatError, TridomError, VerificationFailed
from .exact_oracle import check_paired, check_semipaired, exact_report, is_dominating, paired_bound, semipaired_bound
from .family_f import is_in_family_f
from .generators import (
    GENERATOR_KINDS,
    SplitMix64,
    case_fixtures,
    enumerate_mops,
    family_f_landings,
    generate,
    irreducible_corpus,
    random_near_triangulation,
)
from .graph_core import NearTriangulation
from .ntri_io import parse_set, read_instances, write_manifest
from .paired_solver import PAIRED_CASES, PairedSolver
from .render import render_svg
from .semipaired_solver import FAMILY_SITES, SEMIPAIRED_CASES, SemipairedSolver

logger = logging.getLogger(__name__)

LOG_FORMAT = "%(asctime)s - %(levelname)s - %(message)s"
BENCH_SUITES = {
    # exhaustive MOP orders, random corpus size, random n_max
    "small": (range(4, 10), 40, 30),
    "full": (range(4, 13), 10000, 60),
}


def parse_arguments(argv: list[str] | None = None) -> argparse.Namespace:
    parser = argparse.ArgumentParser(prog="tridom", description="Paired and semipaired domination in near-triangulations")
    parser.add_argument("--jobs", type=int, default=1, help="Worker processes for per-instance commands")
    parser.add_argument("--pretty", action="store_true", help="Print a table instead of JSON lines")
    parser.add_argument("--log-level", type=str, default="WARNING", choices=["DEBUG", "INFO", "WARNING", "ERROR"], help="Logging level")
    parser.add_argument("--config", action="append", default=[], metavar="KEY=VALUE", help="Override a SolverConfig field")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="Write a corpus manifest")
    gen.add_argument("--kind", type=str, required=True, choices=GENERATOR_KINDS)
    gen.add_argument("--n", type=int, default=None, help="Order (upper order bound for irreducible)")
    gen.add_argument("--m", type=int, default=0, help="Interior vertices for --kind ntri")
    gen.add_argument("--count", type=int, default=1)
    gen.add_argument("--seed", type=int, required=True)
    gen.add_argument("-o", type=str, required=True, dest="output")

    solve = sub.add_parser("solve", help="Run a constructive solver")
    solve.add_argument("--mode", type=str, required=True, choices=["paired", "semipaired"])
    solve.add_argument("-i", type=str, required=True, dest="input")
    solve.add_argument("-o", type=str, default=None, dest="output")
    solve.add_argument("--verify", action="store_true", help="Check every result and its size bound")

    exact = sub.add_parser("exact", help="Brute-force domination numbers")
    exact.add_argument("-i", type=str, required=True, dest="input")
    exact.add_argument("--cap", type=int, default=None)

    verify = sub.add_parser("verify", help="Check a user-supplied set")
    verify.add_argument("-i", type=str, required=True, dest="input")
    verify.add_argument("--set", type=str, required=True, dest="pairs")

    render = sub.add_parser("render", help="Draw an instance as SVG")
    render.add_argument("-i", type=str, required=True, dest="input")
    render.add_argument("-o", type=str, required=True, dest="output")
    render.add_argument("--set", type=str, default=None, dest="pairs")

    bench = sub.add_parser("bench", help="Runtime and case coverage over a built-in corpus")
    bench.add_argument("--suite", type=str, default="small", choices=sorted(BENCH_SUITES))
    return parser.parse_args(argv)


def _emit(records: list[dict[str, Any]], pretty: bool, output: str | None = None) -> None:
    if pretty:
        columns = [key for key in records[0] if not isinstance(records[0][key], (list, dict))] if records else []
        rows = [[str(record.get(key, "")) for key in columns] for record in records]
        widths = [max([len(key)] + [len(row[i]) for row in rows]) for i, key in enumerate(columns)]
        lines = ["  ".join(key.ljust(w) for key, w in zip(columns, widths))]
        lines += ["  ".join(cell.ljust(w) for cell, w in zip(row, widths)) for row in rows]
    else:
        lines = [json.dumps(record) for record in records]
    text = "".join(line + "\n" for line in lines)
    if output:
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)


def _parallel(fn, tasks: list, jobs: int) -> list:
    if jobs <= 1 or len(tasks) <= 1:
        return [fn(task) for task in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, tasks))


def _solve_one(task: tuple[int, NearTriangulation, str, bool, SolverConfig]) -> dict[str, Any]:
    index, g, mode, verify, config = task
    coverage = CaseCoverage()
    solver = PairedSolver(config, coverage) if mode == "paired" else SemipairedSolver(config, coverage)
    bound = paired_bound(g.n) if mode == "paired" else semipaired_bound(g.n)
    start = time.perf_counter()
    try:
        result = solver.solve(g)
    except TridomError as exc:
        return {"index": index, "n": g.n, "m": g.m, "exit_code": exc.exit_code, **exc.to_json()}
    record = {
        "index": index,
        "n": g.n,
        "m": g.m,
        "mode": mode,
        "size": result.size,
        "bound": bound,
        "seconds": round(time.perf_counter() - start, 6),
        "pairs": result.named(g.labels),
        "coverage": coverage.as_dict(),
    }
    if verify:
        check = check_paired if mode == "paired" else check_semipaired
        problems = check(g, result.pairs)
        if result.size > bound:
            problems.append(f"size {result.size} exceeds the bound {bound}")
        record["verified"] = not problems
        if problems:
            record["problems"] = problems
            record["exit_code"] = VerificationFailed.exit_code
    return record


def _exact_one(task: tuple[int, NearTriangulation, int | None, SolverConfig]) -> dict[str, Any]:
    index, g, cap, config = task
    try:
        return exact_report(g, cap, config, index).model_dump()
    except TridomError as exc:
        return {"index": index, "n": g.n, "exit_code": exc.exit_code, **exc.to_json()}


def _worst_exit(records: list[dict[str, Any]]) -> int:
    codes = [record.get("exit_code", 0) for record in records]
    for record in records:
        if "error" in record:
            print(json.dumps({key: record[key] for key in ("index", "error", "message", "details") if key in record}), file=sys.stderr)
    return max(codes, default=0)


def cmd_gen(args: argparse.Namespace, config: SolverConfig) -> int:
    items = generate(args.kind, n=args.n, m=args.m, count=args.count, seed=args.seed, config=config)
    for item in items:
        item.meta.update({"n": args.n, "m": args.m, "count": args.count})
    write_manifest(args.output, items)
    logger.info("wrote %d instances to %s", len(items), args.output)
    _emit([{"kind": args.kind, "written": len(items), "path": args.output}], args.pretty)
    return 0


def cmd_solve(args: argparse.Namespace, config: SolverConfig) -> int:
    items = read_instances(args.input)
    tasks = [(i, item.graph, args.mode, args.verify, config) for i, item in enumerate(items)]
    records = _parallel(_solve_one, tasks, args.jobs)
    _emit([r for r in records if "error" not in r], args.pretty, args.output)
    return _worst_exit(records)


def cmd_exact(args: argparse.Namespace, config: SolverConfig) -> int:
    items = read_instances(args.input)
    records = _parallel(_exact_one, [(i, item.graph, args.cap, config) for i, item in enumerate(items)], args.jobs)
    _emit([r for r in records if "error" not in r], args.pretty)
    return _worst_exit(records)


def verify_pairs(g: NearTriangulation, pairs: list[tuple[int, int]], mode: str | None = None) -> dict[str, Any]:
    """Every predicate on a user-supplied set, plus whether it passes for ``mode``."""
    paired, semipaired = check_paired(g, pairs), check_semipaired(g, pairs)
    size = 2 * len(pairs)
    report = {
        "mode": mode,
        "size": size,
        "dominating": is_dominating(g, {v for p in pairs for v in p if v in g.rotation}),
        "paired": not paired,
        "semipaired": not semipaired,
        "within_paired_bound": size <= paired_bound(g.n),
        "within_semipaired_bound": size <= semipaired_bound(g.n),
        "problems": paired if mode == "paired" else semipaired,
    }
    report["ok"] = report["paired"] if mode == "paired" else report["semipaired"]
    return report


def cmd_verify(args: argparse.Namespace, config: SolverConfig) -> int:
    mode, pairs = parse_set(args.pairs)
    items = read_instances(args.input)
    records = [{"index": i, **verify_pairs(item.graph, pairs, mode)} for i, item in enumerate(items)]
    _emit(records, args.pretty)
    failed = [r["index"] for r in records if not r["ok"]]
    if failed:
        raise VerificationFailed("set fails its predicates", instances=failed)
    return 0


def cmd_render(args: argparse.Namespace, config: SolverConfig) -> int:
    items = read_instances(args.input)
    if len(items) != 1:
        raise FormatError(f"render takes a single instance, got {len(items)}", count=len(items))
    pairs = parse_set(args.pairs)[1] if args.pairs else []
    item = items[0]
    Path(args.output).write_text(render_svg(item.graph, pairs, item.coords, config))
    return 0


def bench_corpus(suite: str, seed: int = 2024) -> list[NearTriangulation]:
    orders, count, n_max = BENCH_SUITES[suite]
    corpus = [g for n in orders for g in enumerate_mops(n)]
    corpus += list(case_fixtures(seed).values())
    corpus += list(family_f_landings().values())
    corpus += irreducible_corpus(count // 2, seed, n_max=n_max)
    rng = SplitMix64(seed)
    for _ in range(count - count // 2):
        n = 5 + rng.below(n_max - 4)
        corpus.append(random_near_triangulation(n, rng.below(n - 2), rng))
    return corpus


def cmd_bench(args: argparse.Namespace, config: SolverConfig) -> int:
    corpus = bench_corpus(args.suite)
    summary: dict[str, Any] = {"suite": args.suite, "instances": len(corpus)}
    failures = 0
    for mode, expected in (("paired", PAIRED_CASES), ("semipaired", SEMIPAIRED_CASES + FAMILY_SITES)):
        tasks = [(i, g, mode, True, config) for i, g in enumerate(corpus) if mode == "paired" or (g.n >= 5 and not is_in_family_f(g))]
        start = time.perf_counter()
        records = _parallel(_solve_one, tasks, args.jobs)
        coverage = CaseCoverage()
        for record in records:
            coverage.update(record.get("coverage", {}))
        bad = [r["index"] for r in records if r.get("exit_code", 0)]
        failures += len(bad)
        summary[mode] = {
            "seconds": round(time.perf_counter() - start, 3),
            "solved": len(records) - len(bad),
            "failed": bad,
            "histogram": coverage.as_dict(),
            "uncovered": coverage.missing(expected),
        }
        logger.info("%s: %d instances in %.2fs", mode, len(records), summary[mode]["seconds"])
    _emit([summary], False)
    if failures or summary["paired"]["uncovered"] or summary["semipaired"]["uncovered"]:
        raise VerificationFailed(
            "bench found failures or uncovered cases",
            failures=failures,
            uncovered={mode: summary[mode]["uncovered"] for mode in ("paired", "semipaired")},
        )
    return 0


COMMANDS = {
    "gen": cmd_gen,
    "solve": cmd_solve,
    "exact": cmd_exact,
    "verify": cmd_verify,
    "render": cmd_render,
    "bench": cmd_bench,
}


def main(argv: list[str] | None = None) -> int:
    args = parse_arguments(argv)
    logging.basicConfig(level=getattr(logging, args.log_level), format=LOG_FORMAT)
    try:
        config = load_config(**parse_overrides(args.config))
        return COMMANDS[args.command](args, config)
    except TridomError as exc:
        print(json.dumps(exc.to_json()), file=sys.stderr)
        return exc.exit_code
