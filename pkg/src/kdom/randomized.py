"""Randomized search for k-dominating sets, seeded by a tuned probability.

A random initial set is drawn by independent per-vertex coin flips, the
two-criteria greedy completes it to a k-dominating set, and the reducer
prunes it to a minimal one.  The coin-flip probability comes from a
closed-form expression in an in-degree parameter x of the digraph; the
same expression, evaluated at the minimum in-degree, yields a proven
upper bound on the minimum size of a k-dominating set.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from time import perf_counter

import numpy as np

from .digraph import Digraph, in_degree_stats
from .greedy import GreedyConfig, complete_two_criteria, importance_table
from .report import SolveReport

__all__ = ["ProbabilityParam", "RandomizedConfig", "inclusion_probability",
           "domination_number_upper_bound", "resolve_parameter", "randomized_solve"]

PARAM_MODES = ("min_in", "avg_in", "med_in", "max_in", "explicit")


def _log_binomial(top: int, bottom: int) -> float:
    """log C(top, bottom); log-gamma form so huge in-degrees cannot overflow."""
    return (math.lgamma(top + 1) - math.lgamma(bottom + 1)
            - math.lgamma(top - bottom + 1))


def inclusion_probability(x: float, k: int) -> float:
    """Seeding probability p(x) = 1 - [C(⌊x⌋, k-1)·(x-k+2)]^(-1/(x-k+1)).

    x is an in-degree parameter of the digraph and must be at least k.
    Only the binomial's top index is floored; x enters the linear factor
    and the exponent as a real.  The result is always in (0, 1).
    """
    if k < 1:
        raise ValueError("multiplicity of domination k must be >= 1")
    if x < k:
        raise ValueError(f"in-degree parameter x={x} must be at least k={k}")
    log_base = _log_binomial(math.floor(x), k - 1) + math.log(x - k + 2.0)
    return 1.0 - math.exp(-log_base / (x - k + 1.0))


def domination_number_upper_bound(min_in_degree: int, k: int, n: int) -> float:
    """Upper bound on the minimum k-dominating set size of any digraph
    with the given minimum in-degree, valid for 1 <= k <= min_in_degree:

        n · (1 - d' / [C(δ, k-1)^(1/d') · (1+d')^(1+1/d')]),  d' = δ-k+1.
    """
    if k < 1:
        raise ValueError("multiplicity of domination k must be >= 1")
    if k > min_in_degree:
        raise ValueError(f"bound requires k <= minimum in-degree "
                         f"({k} > {min_in_degree})")
    dprime = min_in_degree - k + 1
    log_denom = (_log_binomial(min_in_degree, k - 1) / dprime
                 + (1.0 + 1.0 / dprime) * math.log(1.0 + dprime))
    return n * (1.0 - dprime / math.exp(log_denom))


@dataclass(frozen=True)
class ProbabilityParam:
    """Which in-degree statistic feeds the seeding probability.

    Whatever statistic is chosen, the resolved parameter is clamped into
    [k, max in-degree]: statistics below k are replaced by exactly k, and
    an explicit value cannot exceed the digraph's maximum in-degree.
    """

    mode: str = "min_in"
    explicit_x: float | None = None

    def __post_init__(self) -> None:
        if self.mode not in PARAM_MODES:
            raise ValueError(f"mode must be one of {PARAM_MODES}")
        if self.mode == "explicit" and self.explicit_x is None:
            raise ValueError("explicit mode needs explicit_x")


@dataclass(frozen=True)
class RandomizedConfig:
    k: int
    param: ProbabilityParam = field(default_factory=ProbabilityParam)
    runs: int = 10
    rng_seed: int = 0

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError("multiplicity of domination k must be >= 1")
        if self.runs < 1:
            raise ValueError("runs must be >= 1")
        if self.rng_seed < 0:
            raise ValueError("rng_seed must be non-negative")


def resolve_parameter(digraph: Digraph, k: int,
                      param: ProbabilityParam) -> tuple[float, float]:
    """Resolve the configured statistic on this digraph: (resolved x, p(x))."""
    stats = in_degree_stats(digraph)
    raw = {"min_in": float(stats.min_in),
           "avg_in": stats.avg_in,
           "med_in": stats.med_in,
           "max_in": float(stats.max_in),
           "explicit": float(param.explicit_x) if param.explicit_x is not None else 0.0,
           }[param.mode]
    resolved = min(max(raw, float(k)), float(max(stats.max_in, k)))
    return resolved, inclusion_probability(resolved, k)


def _draw_seed_vertices(rng: np.random.Generator, n: int, p: float) -> np.ndarray:
    return np.flatnonzero(rng.random(n) < p)


def _run_rng(rng_seed: int, run_index: int) -> np.random.Generator:
    # PCG64 stream per run, entropy = (rng_seed, run_index): platform-stable,
    # and the first R runs of a longer schedule repeat a shorter one exactly
    return np.random.default_rng(np.random.SeedSequence([rng_seed, run_index]))


def randomized_solve(digraph: Digraph, cfg: RandomizedConfig,
                     instance: str = "") -> SolveReport:
    """Best of ``cfg.runs`` randomized constructions (ties: lowest run index).

    Each run draws vertices independently with the resolved probability,
    completes the draw with the two-criteria greedy, and prunes the result
    to a minimal k-dominating set.
    """
    resolved_x, p = resolve_parameter(digraph, cfg.k, cfg.param)
    table = importance_table(digraph)
    greedy_cfg = GreedyConfig(k=cfg.k, tie_break="lowest_id")
    best: list[int] | None = None
    started = perf_counter()
    for run in range(cfg.runs):
        rng = _run_rng(cfg.rng_seed, run)
        seed_vertices = _draw_seed_vertices(rng, digraph.n, p)
        result = complete_two_criteria(digraph, greedy_cfg, seed_vertices, table)
        if best is None or len(result) < len(best):
            best = result
    wall = perf_counter() - started
    assert best is not None
    params = {"rng_seed": cfg.rng_seed, "runs": cfg.runs, "mode": cfg.param.mode,
              "resolved_x": resolved_x, "p": p}
    return SolveReport(heuristic="rand", k=cfg.k, instance=instance, params=params,
                       set_size=len(best), solution=best, wall_time_s=wall)
