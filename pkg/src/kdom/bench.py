"""Batch benchmark harness: solver dispatch, verification, CSV reports."""
from __future__ import annotations

import csv
import json
from pathlib import Path
from time import perf_counter
from typing import Iterable, Sequence

from .coverage import is_k_dominating, is_minimal_k_dominating
from .digraph import Digraph
from .exact import exact_gamma_k
from .greedy import GreedyConfig, basic_greedy, deficiency_coverage_greedy, two_criteria_greedy
from .io import read_digraph
from .randomized import ProbabilityParam, RandomizedConfig, randomized_solve, resolve_parameter
from .report import CSV_HEADER, SolveReport

__all__ = ["VerificationError", "run_heuristic", "verify_report", "run_bench"]

# heuristics whose contract includes minimality of the returned set
MINIMAL_HEURISTICS = ("bg", "dcg", "tcg", "rand")


class VerificationError(RuntimeError):
    """A solution failed re-verification against its digraph."""


def run_heuristic(digraph: Digraph, heuristic: str, k: int, *, rng_seed: int = 0,
                  runs: int = 10, param: ProbabilityParam | None = None,
                  time_limit_s: float = 1800.0, instance: str = "") -> SolveReport:
    """Run one solver and wrap the outcome in a report.

    Wall time covers the solver call only, never I/O or verification.
    """
    if heuristic in ("bg", "dcg", "tcg"):
        cfg = GreedyConfig(k=k, rng_seed=rng_seed)
        solver = {"bg": basic_greedy, "dcg": deficiency_coverage_greedy,
                  "tcg": two_criteria_greedy}[heuristic]
        started = perf_counter()
        solution = solver(digraph, cfg)
        wall = perf_counter() - started
        params = {"rng_seed": rng_seed, "tie_break": cfg.tie_break}
        return SolveReport(heuristic=heuristic, k=k, instance=instance, params=params,
                           set_size=len(solution), solution=solution, wall_time_s=wall)
    if heuristic == "rand":
        cfg = RandomizedConfig(k=k, param=param or ProbabilityParam(), runs=runs,
                               rng_seed=rng_seed)
        report = randomized_solve(digraph, cfg, instance=instance)
        return report
    if heuristic == "exact":
        started = perf_counter()
        result = exact_gamma_k(digraph, k, time_limit_s)
        wall = perf_counter() - started
        status = "ok" if result.status == "optimal" else result.status
        return SolveReport(heuristic="exact", k=k, instance=instance,
                           params={"time_limit_s": time_limit_s},
                           set_size=result.size, solution=result.witness,
                           wall_time_s=wall, status=status)
    raise ValueError(f"unknown heuristic {heuristic!r}")


def verify_report(digraph: Digraph, report: SolveReport) -> None:
    """Re-check a report's solution; raises :class:`VerificationError`."""
    if report.set_size != len(report.solution):
        raise VerificationError(f"{report.instance}: set_size does not match solution")
    if not is_k_dominating(digraph, report.k, report.solution):
        raise VerificationError(
            f"{report.instance}: {report.heuristic} solution is not "
            f"{report.k}-dominating")
    if report.heuristic in MINIMAL_HEURISTICS:
        if not is_minimal_k_dominating(digraph, report.k, report.solution):
            raise VerificationError(
                f"{report.instance}: {report.heuristic} solution is not minimal")


def run_bench(instances: Sequence[str | Path], ks: Sequence[int],
              heuristics: Sequence[str], out_csv: str | Path, *,
              rng_seed: int = 0, runs: int = 10,
              param: ProbabilityParam | None = None,
              time_limit_s: float = 1800.0,
              include_timing: bool = True) -> list[dict]:
    """One verified CSV row per (instance, k, heuristic).

    Every solution is re-verified before anything is written; a failure
    aborts the whole run so no unverified row can reach the file.
    """
    rows: list[dict] = []
    for path in instances:
        digraph = read_digraph(path)
        name = Path(path).name
        for k in ks:
            for heuristic in heuristics:
                report = run_heuristic(digraph, heuristic, k, rng_seed=rng_seed,
                                       runs=runs, param=param,
                                       time_limit_s=time_limit_s, instance=name)
                verify_report(digraph, report)
                rows.append({
                    "instance": name,
                    "n": digraph.n,
                    "m": digraph.m,
                    "k": k,
                    "heuristic": heuristic,
                    "params": report.params_text(),
                    "size": report.set_size,
                    "time_s": repr(report.wall_time_s) if include_timing else "0.0",
                    "status": report.status,
                })
    with open(out_csv, "w", encoding="ascii", newline="") as handle:
        writer = csv.DictWriter(handle, fieldnames=CSV_HEADER, lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
    return rows


def load_bench_spec(path: str | Path) -> dict:
    """Read a benchmark description file (JSON)."""
    with open(path, "r", encoding="utf-8") as handle:
        spec = json.load(handle)
    for key in ("instances", "ks", "heuristics"):
        if key not in spec:
            raise ValueError(f"{path}: benchmark spec needs a {key!r} list")
    return spec
