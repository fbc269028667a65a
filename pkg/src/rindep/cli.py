"""Command-line interface: solve, witness-check, cowitness, splitter, bench, gen, schema."""
from __future__ import annotations

import argparse
import csv
import io as _io
import json
import logging
import os
import statistics
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Any

from . import oracle
from .cowitness import build_cowitness
from .errors import BudgetExceeded, InputError, InternalInvariantError, NonSparseInputError, RindepError
from .generators import FamilySpec, default_seed, generate
from .graph import is_r_independent, vset
from .io import ParsedGraph, format_edge_list, read_edge_list, read_vertex_list
from .solvers import SolveOutcome, solve_direct, solve_ladder
from .splitter import DEFAULT_STRATEGY, SplitterStrategy, play_splitter_game
from .witness import check_witness

log = logging.getLogger("rindep")

EXIT_OK, EXIT_INPUT, EXIT_INTERNAL, EXIT_BUDGET = 0, 2, 3, 4
ALGORITHMS = ("ladder", "direct", "brute")
VERIFY_LEVELS = ("none", "fast", "oracle")

_label = {"anyOf": [{"type": "integer"}, {"type": "string"}]}
_opt_int = {"type": ["integer", "null"]}
RESULT_SCHEMA: dict[str, Any] = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "ResultRecord",
    "type": "object",
    "required": ["decision", "vertices", "stats", "config", "verification", "graph"],
    "additionalProperties": False,
    "properties": {
        "decision": {"enum": ["independent", "no-solution"]},
        "vertices": {"type": "array", "items": _label},
        "stats": {
            "type": "object",
            "required": ["rounds", "witness_size", "cowitness_size", "splitter_depth",
                         "distinct_profiles", "wall_time_ms"],
            "properties": {
                "rounds": _opt_int,
                "witness_size": _opt_int,
                "cowitness_size": _opt_int,
                "splitter_depth": _opt_int,
                "distinct_profiles": _opt_int,
                "wall_time_ms": {"type": "number", "minimum": 0},
            },
        },
        "config": {
            "type": "object",
            "required": ["input", "r", "k", "algorithm", "strategy", "seed", "verify"],
            "properties": {
                "input": {"type": "string"},
                "r": {"type": "integer", "minimum": 1},
                "k": {"type": "integer", "minimum": 1},
                "algorithm": {"enum": list(ALGORITHMS)},
                "strategy": {"enum": [s.value for s in SplitterStrategy]},
                "seed": {"type": "integer"},
                "verify": {"enum": list(VERIFY_LEVELS)},
            },
        },
        "verification": {"enum": ["skipped", "passed"]},
        "graph": {
            "type": "object",
            "required": ["n", "m"],
            "properties": {"n": {"type": "integer"}, "m": {"type": "integer"}},
        },
    },
}


@dataclass
class RunConfig:
    input: str  # a file path, or a generator spec when ``generated`` is set
    r: int
    k: int
    algorithm: str = "ladder"
    strategy: str = DEFAULT_STRATEGY.value
    seed: int = field(default_factory=default_seed)
    verify: str = "fast"
    generated: bool = False

    def __post_init__(self) -> None:
        if self.algorithm not in ALGORITHMS:
            raise InputError(f"unknown algorithm {self.algorithm!r}")
        if self.verify not in VERIFY_LEVELS:
            raise InputError(f"unknown verification level {self.verify!r}")
        if self.strategy not in {s.value for s in SplitterStrategy}:
            raise InputError(f"unknown splitter strategy {self.strategy!r}")
        if self.r < 1 or self.k < 1:
            raise InputError(f"need r >= 1 and k >= 1, got r={self.r}, k={self.k}")


def load_graph(source: str, generated: bool) -> ParsedGraph:
    if generated:
        g = generate(source)
        return ParsedGraph(g, tuple(range(g.n)))
    return read_edge_list(source)


def _sort_labels(labels) -> list:
    return sorted(labels, key=lambda x: (isinstance(x, str), x))


def _brute_outcome(g, r: int, k: int) -> SolveOutcome:
    t0 = time.perf_counter()
    X = oracle.brute_independent(g, r, k)
    if X is not None:
        out = SolveOutcome("independent", X)
    else:
        # with no r-independent k-set every k-set is captured by its own members
        out = SolveOutcome("no-solution", vset(range(g.n)))
    out.stats = {"algorithm": "brute", "witness_size": 0 if X else g.n,
                 "wall_time": time.perf_counter() - t0}
    return out


def _verify(g, outcome: SolveOutcome, r: int, k: int, level: str) -> str:
    if level == "none":
        return "skipped"
    if outcome.independent:
        ok = len(outcome.vertices) == k and is_r_independent(g, outcome.vertices, r)
    else:
        ok = check_witness(g, outcome.vertices, r, k).is_witness
    if ok and level == "oracle":
        expected = oracle.brute_independent(g, r, k)
        ok = (expected is not None) == outcome.independent
        if ok and not outcome.independent:
            ok = oracle.brute_check_witness(g, outcome.vertices, r, k) is None
    if not ok:
        raise InternalInvariantError(f"{level} verification failed for decision {outcome.kind}")
    return "passed"


def run(config: RunConfig) -> dict[str, Any]:
    """Solve one instance and return a ResultRecord dict; errors propagate as RindepError."""
    pg = load_graph(config.input, config.generated)
    g = pg.graph
    if config.verify == "oracle":
        oracle._check(g, oracle.DEFAULT_BUDGET)
    t0 = time.perf_counter()
    if config.algorithm == "ladder":
        outcome, _ = solve_ladder(g, config.r, config.k)
    elif config.algorithm == "direct":
        outcome = solve_direct(g, config.r, config.k, config.strategy)
    else:
        outcome = _brute_outcome(g, config.r, config.k)
    wall = (time.perf_counter() - t0) * 1000.0
    status = _verify(g, outcome, config.r, config.k, config.verify)
    s = outcome.stats
    return {
        "decision": outcome.kind,
        "vertices": _sort_labels(pg.labels[v] for v in outcome.vertices),
        "stats": {
            "rounds": s.get("rounds"),
            "witness_size": s.get("witness_size"),
            "cowitness_size": s.get("cowitness_size"),
            "splitter_depth": s.get("cowitness_depth"),
            "distinct_profiles": s.get("distinct_profiles"),
            "wall_time_ms": round(wall, 3),
        },
        "config": {
            "input": config.input, "r": config.r, "k": config.k,
            "algorithm": config.algorithm, "strategy": config.strategy,
            "seed": config.seed, "verify": config.verify,
        },
        "verification": status,
        "graph": {"n": g.n, "m": g.m},
    }


def exit_code_for(exc: BaseException) -> int:
    if isinstance(exc, BudgetExceeded):
        return EXIT_BUDGET
    if isinstance(exc, (InputError, NonSparseInputError, OSError)):
        return EXIT_INPUT
    return EXIT_INTERNAL


def format_plain(record: dict[str, Any]) -> str:
    verts = " ".join(str(v) for v in record["vertices"])
    what = "set" if record["decision"] == "independent" else "witness"
    stats = " ".join(f"{k}={v}" for k, v in record["stats"].items() if v is not None)
    return f"{record['decision']} {what}: {verts}\n{stats}\nverification: {record['verification']}"


def dump_json(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True)


# ---------------------------------------------------------------- bench

BENCH_FIELDS = ("row", "graph", "family", "n", "m", "r", "k", "algo", "decision", "size",
                "rounds", "cowitness_size", "splitter_depth", "wall_time_ms", "verification", "error")


def parse_grid(text: str) -> dict[str, list]:
    """``r=1,2;k=2,3;algo=ladder,direct`` -> parameter lists (defaults r=2, k=3, algo=ladder)."""
    grid: dict[str, list] = {"r": [2], "k": [3], "algo": ["ladder"]}
    for part in filter(None, (p.strip() for p in text.split(";"))):
        key, eq, values = part.partition("=")
        key = key.strip()
        if not eq or key not in grid:
            raise InputError(f"bad grid entry {part!r}; expected r=..;k=..;algo=..")
        vals = [v.strip() for v in values.split(",") if v.strip()]
        if key in ("r", "k"):
            try:
                grid[key] = [int(v) for v in vals]
            except ValueError:
                raise InputError(f"non-integer value in grid entry {part!r}") from None
        else:
            bad = set(vals) - set(ALGORITHMS)
            if bad:
                raise InputError(f"unknown algorithm(s) {sorted(bad)} in grid")
            grid[key] = vals
    return grid


def read_corpus(path: str | Path) -> list[str]:
    """One generator spec or edge-list path per line; ``#`` comments allowed."""
    entries = []
    for line in Path(path).read_text().splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            entries.append(line)
    return entries


def _family(entry: str) -> str:
    head = entry.split(":", 1)[0].lower()
    try:
        FamilySpec.parse(entry)
        return head
    except InputError:
        return "file"


def _bench_row(task: tuple) -> dict[str, Any]:
    idx, entry, r, k, algo, strategy, verify = task
    row: dict[str, Any] = {f: None for f in BENCH_FIELDS}
    row.update(row=idx, graph=entry, family=_family(entry), r=r, k=k, algo=algo, error="")
    try:
        generated = Path(entry).is_file() is False
        cfg = RunConfig(entry, r, k, algo, strategy, verify=verify, generated=generated)
        rec = run(cfg)
        row.update(n=rec["graph"]["n"], m=rec["graph"]["m"], decision=rec["decision"],
                   size=len(rec["vertices"]), rounds=rec["stats"]["rounds"],
                   cowitness_size=rec["stats"]["cowitness_size"],
                   splitter_depth=rec["stats"]["splitter_depth"],
                   wall_time_ms=rec["stats"]["wall_time_ms"], verification=rec["verification"])
    except (RindepError, OSError, ValueError) as e:
        row["error"] = f"{type(e).__name__}: {e}"
    return row


def bench(entries: list[str], grid: dict[str, list], *, strategy: str = DEFAULT_STRATEGY.value,
          verify: str = "none", jobs: int = 1) -> tuple[list[dict], list[dict]]:
    """Run every (graph, r, k, algo) combination; returns (rows, per-family summary)."""
    tasks = []
    for entry in entries:
        for r in grid["r"]:
            for k in grid["k"]:
                for algo in grid["algo"]:
                    tasks.append((len(tasks), entry, r, k, algo, strategy, verify))
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_bench_row, tasks))
    else:
        rows = [_bench_row(t) for t in tasks]
    rows.sort(key=lambda row: row["row"])
    groups: dict[tuple, list[dict]] = {}
    for row in rows:
        groups.setdefault((row["family"], row["algo"]), []).append(row)
    summary = []
    for (fam, algo), members in sorted(groups.items()):
        times = [m["wall_time_ms"] for m in members if not m["error"]]
        summary.append({
            "family": fam, "algo": algo, "rows": len(members),
            "errors": sum(1 for m in members if m["error"]),
            "median_wall_time_ms": statistics.median(times) if times else None,
        })
    return rows, summary


def write_rows(rows: list[dict], out: str | None) -> None:
    if out and out.endswith(".csv"):
        buf = _io.StringIO()
        w = csv.DictWriter(buf, fieldnames=BENCH_FIELDS, lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
        text = buf.getvalue()
    else:
        text = "".join(dump_json(row) + "\n" for row in rows)
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------- argparse

def _add_input(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--input", help="edge-list file")
    src.add_argument("--gen", help="generator spec, e.g. cycle:6 or grid:3x4")


def _add_rk(p: argparse.ArgumentParser) -> None:
    p.add_argument("--r", type=int, required=True, help="radius r >= 1")
    p.add_argument("--k", type=int, required=True, help="set size k")


def build_parser() -> argparse.ArgumentParser:
    strategies = [s.value for s in SplitterStrategy]
    ap = argparse.ArgumentParser(prog="rindep", description="Distance-r independent set solvers.")
    ap.add_argument("-v", "--verbose", action="count", default=0)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="decide whether an r-independent k-set exists")
    _add_input(p)
    _add_rk(p)
    p.add_argument("--algo", choices=ALGORITHMS, default="ladder")
    p.add_argument("--strategy", choices=strategies, default=DEFAULT_STRATEGY.value)
    p.add_argument("--verify", choices=VERIFY_LEVELS, default="fast")
    p.add_argument("--format", choices=("json", "plain"), default="json")
    p.add_argument("--seed", type=int, default=None, help="RINDEP_SEED overrides this")

    p = sub.add_parser("witness-check", help="check whether a vertex set captures every k-set")
    _add_input(p)
    p.add_argument("--witness", required=True, help="file with whitespace-separated vertex labels")
    _add_rk(p)

    p = sub.add_parser("cowitness", help="build a (k, r)-cowitness for the whole vertex set")
    _add_input(p)
    _add_rk(p)
    p.add_argument("--strategy", choices=strategies, default=DEFAULT_STRATEGY.value)

    p = sub.add_parser("splitter", help="play the splitter game and report its depth")
    _add_input(p)
    p.add_argument("--r", type=int, required=True, help="game radius")
    p.add_argument("--strategy", choices=strategies, default=DEFAULT_STRATEGY.value)
    p.add_argument("--connector", default="max-eccentricity",
                   choices=("random", "max-eccentricity", "exhaustive-worst"))

    p = sub.add_parser("bench", help="run a corpus over a parameter grid")
    p.add_argument("--corpus", required=True, help="file with one generator spec or edge-list path per line")
    p.add_argument("--grid", default="", help="e.g. 'r=1,2;k=2,3;algo=ladder,direct'")
    p.add_argument("--out", default=None, help="output path (.csv for CSV, otherwise JSON lines)")
    p.add_argument("--strategy", choices=strategies, default=DEFAULT_STRATEGY.value)
    p.add_argument("--verify", choices=VERIFY_LEVELS, default="none")
    p.add_argument("--jobs", type=int, default=1)

    p = sub.add_parser("gen", help="write a generated graph as an edge list")
    p.add_argument("spec")
    p.add_argument("--out", default=None)

    sub.add_parser("schema", help="print the ResultRecord JSON schema")
    return ap


def _cmd_solve(a) -> int:
    seed = default_seed() if "RINDEP_SEED" in os.environ or a.seed is None else a.seed
    cfg = RunConfig(a.gen or a.input, a.r, a.k, a.algo, a.strategy, seed, a.verify, generated=bool(a.gen))
    rec = run(cfg)
    print(dump_json(rec) if a.format == "json" else format_plain(rec))
    return EXIT_OK


def _cmd_witness_check(a) -> int:
    pg = load_graph(a.gen or a.input, bool(a.gen))
    Q = pg.ids(read_vertex_list(a.witness))
    res = check_witness(pg.graph, Q, a.r, a.k)
    print(dump_json({
        "is_witness": res.is_witness,
        "uncaptured": _sort_labels(pg.labels[v] for v in res.X),
        "distinct_profiles": res.distinct_profiles,
    }))
    return EXIT_OK


def _cmd_cowitness(a) -> int:
    pg = load_graph(a.gen or a.input, bool(a.gen))
    cert = build_cowitness(pg.graph, range(pg.graph.n), a.r, a.k, a.strategy)
    print(dump_json({
        "cowitness": _sort_labels(pg.labels[v] for v in cert.Q),
        "size": len(cert.Q),
        "depth": cert.depth,
        "branches": cert.branches,
        "memo_hits": cert.memo_hits,
        "calls_per_level": list(cert.calls_per_level),
    }))
    return EXIT_OK


def _cmd_splitter(a) -> int:
    pg = load_graph(a.gen or a.input, bool(a.gen))
    tr = play_splitter_game(pg.graph, a.r, a.strategy, a.connector, seed=default_seed())
    print(dump_json({"radius": tr.radius, "depth": tr.depth,
                     "rounds": [asdict(rd) for rd in tr.rounds]}))
    return EXIT_OK


def _cmd_bench(a) -> int:
    try:
        entries = read_corpus(a.corpus)
    except OSError as e:
        raise InputError(f"cannot read corpus {a.corpus}: {e.strerror}") from None
    rows, summary = bench(entries, parse_grid(a.grid), strategy=a.strategy, verify=a.verify, jobs=a.jobs)
    write_rows(rows, a.out)
    for s in summary:
        med = "n/a" if s["median_wall_time_ms"] is None else f"{s['median_wall_time_ms']:.3f}"
        print(f"{s['family']:<8} {s['algo']:<7} rows={s['rows']} errors={s['errors']} "
              f"median_ms={med}", file=sys.stderr)
    return EXIT_OK


def _cmd_gen(a) -> int:
    text = format_edge_list(generate(a.spec))
    if a.out:
        Path(a.out).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _cmd_schema(a) -> int:
    print(json.dumps(RESULT_SCHEMA, indent=2, sort_keys=True))
    return EXIT_OK


COMMANDS = {
    "solve": _cmd_solve, "witness-check": _cmd_witness_check, "cowitness": _cmd_cowitness,
    "splitter": _cmd_splitter, "bench": _cmd_bench, "gen": _cmd_gen, "schema": _cmd_schema,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.WARNING - 10 * min(args.verbose, 2),
                        format="%(levelname)s: %(message)s")
    try:
        return COMMANDS[args.command](args)
    except (RindepError, OSError) as e:
        code = exit_code_for(e)
        print(f"error: {e}", file=sys.stderr)
        return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
