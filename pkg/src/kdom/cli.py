"""Command-line front end.

Subcommands cover the whole pipeline: random-instance generation,
reachability-digraph construction, the four heuristics, the exact solver,
LP export, solution verification, degree statistics, and batch benchmarks.
Exit codes: 0 success, 1 input error, 2 verification failure, 3 the exact
solver hit its time limit and returned its incumbent.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .bench import VerificationError, load_bench_spec, run_bench, run_heuristic, verify_report
from .coverage import is_k_dominating, is_minimal_k_dominating
from .digraph import in_degree_stats
from .exact import export_lp
from .generate import ErConfig, generate_er
from .io import read_digraph, read_weighted, write_digraph
from .randomized import ProbabilityParam
from .reachability import ReachabilityParams, build_reachability
from .report import SolveReport, format_value

EXIT_OK = 0
EXIT_INPUT_ERROR = 1
EXIT_VERIFY_FAILED = 2
EXIT_TIMEOUT = 3

_PARAM_MODES = {"min": "min_in", "avg": "avg_in", "med": "med_in", "max": "max_in"}


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on bad usage; the contract here is exit 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        sys.exit(EXIT_INPUT_ERROR)


def _parse_param(text: str) -> ProbabilityParam:
    if text in _PARAM_MODES:
        return ProbabilityParam(mode=_PARAM_MODES[text])
    if text.startswith("x="):
        try:
            return ProbabilityParam(mode="explicit", explicit_x=float(text[2:]))
        except ValueError:
            raise ValueError(f"bad explicit parameter {text!r}") from None
    raise ValueError(f"--param must be min|avg|med|max|x=<real>, got {text!r}")


def _emit_report(report: SolveReport, out_json: str | None, no_timing: bool) -> None:
    if no_timing:
        report.wall_time_s = 0.0
    text = report.to_json()
    if out_json:
        Path(out_json).write_text(text, encoding="ascii")
    else:
        sys.stdout.write(text)


def _cmd_gen_er(args) -> int:
    digraph = generate_er(ErConfig(n=args.n, p_arc=args.p, rng_seed=args.seed))
    write_digraph(digraph, args.out)
    print(f"wrote {args.out}: n={digraph.n} m={digraph.m}")
    return EXIT_OK


def _cmd_build_reach(args) -> int:
    network = read_weighted(args.in_path)
    params = ReachabilityParams(radius_m=args.radius_m,
                                reverse_for_destinations=args.reverse)
    threads = args.threads if args.threads else (os.cpu_count() or 1)
    digraph = build_reachability(network, params, threads=threads)
    write_digraph(digraph, args.out)
    print(f"wrote {args.out}: n={digraph.n} m={digraph.m}")
    return EXIT_OK


def _cmd_solve(args) -> int:
    digraph = read_digraph(args.in_path)
    report = run_heuristic(digraph, args.heuristic, args.k, rng_seed=args.seed,
                           runs=args.runs, param=_parse_param(args.param),
                           instance=Path(args.in_path).name)
    verify_report(digraph, report)
    _emit_report(report, args.out_json, args.no_timing)
    return EXIT_OK


def _cmd_exact(args) -> int:
    digraph = read_digraph(args.in_path)
    report = run_heuristic(digraph, "exact", args.k,
                           time_limit_s=args.time_limit_s,
                           instance=Path(args.in_path).name)
    verify_report(digraph, report)
    _emit_report(report, args.out_json, args.no_timing)
    return EXIT_TIMEOUT if report.status == "timeout_best_known" else EXIT_OK


def _cmd_export_lp(args) -> int:
    digraph = read_digraph(args.in_path)
    summary = export_lp(digraph, args.k, args.out)
    print(f"wrote {args.out}: variables={summary.variables} "
          f"constraints={summary.constraints}")
    return EXIT_OK


def _load_vertex_set(path: str) -> tuple[list[int], str | None]:
    """A solution file: either a solve report (JSON) or whitespace ints."""
    text = Path(path).read_text(encoding="utf-8")
    stripped = text.lstrip()
    if stripped.startswith("{"):
        report = SolveReport.from_json(text)
        return [int(v) for v in report.solution], report.heuristic
    return [int(tok) for tok in text.split()], None


def _cmd_verify(args) -> int:
    digraph = read_digraph(args.in_path)
    vertices, heuristic = _load_vertex_set(args.set_path)
    if not is_k_dominating(digraph, args.k, vertices):
        print(f"FAIL: set of size {len(vertices)} is not {args.k}-dominating")
        return EXIT_VERIFY_FAILED
    if heuristic in ("bg", "dcg", "tcg", "rand"):
        if not is_minimal_k_dominating(digraph, args.k, vertices):
            print(f"FAIL: {heuristic} solution is not minimal")
            return EXIT_VERIFY_FAILED
    print(f"PASS: set of size {len(vertices)} is {args.k}-dominating")
    return EXIT_OK


def _cmd_stats(args) -> int:
    digraph = read_digraph(args.in_path)
    stats = in_degree_stats(digraph)
    print(f"n {digraph.n}")
    print(f"m {digraph.m}")
    print(f"min_in {stats.min_in}")
    print(f"avg_in {format_value(stats.avg_in)}")
    print(f"med_in {format_value(stats.med_in)}")
    print(f"max_in {stats.max_in}")
    return EXIT_OK


def _cmd_bench(args) -> int:
    spec = load_bench_spec(args.spec)
    param = _parse_param(spec.get("param", "min"))
    rows = run_bench(spec["instances"], spec["ks"], spec["heuristics"],
                     args.out_csv, rng_seed=spec.get("seed", 0),
                     runs=spec.get("runs", 10), param=param,
                     time_limit_s=spec.get("time_limit_s", 1800.0),
                     include_timing=not args.no_timing)
    print(f"wrote {args.out_csv}: {len(rows)} rows")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="kdom",
                     description="k-dominating sets in digraphs: generators, "
                                 "heuristics, exact solver, benchmarks")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen-er", help="generate a random digraph")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=float, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_gen_er)

    p = sub.add_parser("build-reach", help="reachability digraph from a weighted network")
    p.add_argument("--in", dest="in_path", required=True)
    p.add_argument("--radius-m", type=float, required=True)
    p.add_argument("--reverse", action="store_true",
                   help="flip arcs so dominating sets are destination sets")
    p.add_argument("--threads", type=int, default=0,
                   help="worker threads (default: all cores)")
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_build_reach)

    p = sub.add_parser("solve", help="run a heuristic")
    p.add_argument("--in", dest="in_path", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--heuristic", choices=["bg", "dcg", "tcg", "rand"], required=True)
    p.add_argument("--param", default="min", help="rand only: min|avg|med|max|x=<real>")
    p.add_argument("--runs", type=int, default=10, help="rand only: restarts")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out-json", default=None)
    p.add_argument("--no-timing", action="store_true",
                   help="record 0.0 wall time for byte-stable regression files")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("exact", help="branch-and-bound optimum (small digraphs)")
    p.add_argument("--in", dest="in_path", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--time-limit-s", type=float, default=1800.0)
    p.add_argument("--out-json", default=None)
    p.add_argument("--no-timing", action="store_true")
    p.set_defaults(func=_cmd_exact)

    p = sub.add_parser("export-lp", help="write the 0/1 program in LP format")
    p.add_argument("--in", dest="in_path", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_export_lp)

    p = sub.add_parser("verify", help="check a solution file against a digraph")
    p.add_argument("--in", dest="in_path", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--set", dest="set_path", required=True)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("bench", help="run a benchmark spec into a CSV table")
    p.add_argument("--spec", required=True)
    p.add_argument("--out-csv", required=True)
    p.add_argument("--no-timing", action="store_true")
    p.set_defaults(func=_cmd_bench)

    p = sub.add_parser("stats", help="print in-degree statistics")
    p.add_argument("--in", dest="in_path", required=True)
    p.set_defaults(func=_cmd_stats)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except VerificationError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_VERIFY_FAILED
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
