"""Greedy construction of small k-dominating sets, plus a redundancy reducer.

Three constructive heuristics share one engine: each iteration scores every
vertex outside the working set X, adds the best scorer, and updates the
scores incrementally.  The basic variant scores by uncovered closed
out-neighbourhood; the other two score by the slot coverage number
(uncovered open out-neighbourhood plus the vertex's own coverage
deficiency) and differ only in tie handling.  All three finish by pruning
the construction to a minimal set with :func:`minimal_subset`.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

import numpy as np

from .coverage import CoverageState, is_k_dominating
from .digraph import Digraph

__all__ = ["GreedyConfig", "importance_table", "basic_greedy",
           "deficiency_coverage_greedy", "two_criteria_greedy", "minimal_subset"]

TIE_BREAKS = ("lowest_id", "random")


@dataclass(frozen=True)
class GreedyConfig:
    """Shared solver knobs.

    ``rng_seed`` drives the deficiency-coverage heuristic's random choice
    among equal-score candidates; ``tie_break`` governs the two-criteria
    heuristic's residual tie after both scores (lowest id by default).
    """

    k: int
    rng_seed: int = 0
    tie_break: str = "lowest_id"

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError("multiplicity of domination k must be >= 1")
        if self.rng_seed < 0:
            raise ValueError("rng_seed must be non-negative")
        if self.tie_break not in TIE_BREAKS:
            raise ValueError(f"tie_break must be one of {TIE_BREAKS}")


def importance_table(digraph: Digraph) -> np.ndarray:
    """Per-vertex sum of in-degrees over the vertex's out-neighbours.

    A high value flags a vertex whose out-neighbours are all easy to cover
    through other in-neighbours, which makes the vertex itself a good pick.
    """
    weights = digraph.in_degrees[digraph.arc_targets()].astype(np.float64)
    table = np.bincount(digraph.arc_sources(), weights=weights, minlength=digraph.n)
    return table.astype(np.int64)


# ---- shared construction engine ------------------------------------------

def _initial_gains(state: CoverageState, closed: bool) -> np.ndarray:
    digraph = state.digraph
    src = digraph.arc_sources()
    dst = digraph.arc_targets()
    gain = np.bincount(src[~state.covered[dst]], minlength=digraph.n).astype(np.int64)
    if closed:
        gain += (~state.covered) & (~state.in_x)
    else:
        gain += np.maximum(0, state.k - state.hits) * ~state.in_x
    return gain


def _construct(digraph: Digraph, k: int, pick: Callable[[np.ndarray, np.ndarray], int],
               *, closed: bool, seed_vertices: Iterable[int] = ()) -> CoverageState:
    """Grow X from ``seed_vertices`` until every vertex is k-covered."""
    state = CoverageState(digraph, k, seed_vertices)
    gain = _initial_gains(state, closed)
    active = ~state.in_x
    while not state.all_covered:
        v = pick(gain, active)
        active[v] = False
        out = digraph.out_neighbors(v)
        if closed:
            drop = None
        else:
            # one deficiency slot is filled per not-yet-k-covered out-neighbour
            drop = out[(state.hits[out] < k) & ~state.in_x[out]]
        newly = state.add_vertex(v)
        if drop is not None and drop.size:
            gain[drop] -= 1
        if newly.size:
            # a vertex turning k-covered leaves every in-neighbour's
            # uncovered out-neighbourhood at once
            pieces = [digraph.in_neighbors(int(c)) for c in newly]
            nbrs = pieces[0] if len(pieces) == 1 else np.concatenate(pieces)
            if nbrs.size:
                gain -= np.bincount(nbrs, minlength=digraph.n)
            if closed:
                gain[newly] -= 1
    return state


def _pick_lowest(gain: np.ndarray, active: np.ndarray) -> int:
    return int(np.argmax(np.where(active, gain, -1)))


def _random_picker(rng: np.random.Generator) -> Callable[[np.ndarray, np.ndarray], int]:
    def pick(gain: np.ndarray, active: np.ndarray) -> int:
        masked = np.where(active, gain, -1)
        ties = np.flatnonzero(masked == masked.max())
        return int(ties[rng.integers(ties.size)])
    return pick


def _importance_picker(table: np.ndarray, tie_break: str,
                       rng: np.random.Generator | None) -> Callable[[np.ndarray, np.ndarray], int]:
    def pick(gain: np.ndarray, active: np.ndarray) -> int:
        masked = np.where(active, gain, -1)
        ties = np.flatnonzero(masked == masked.max())
        if ties.size > 1:
            scores = table[ties]
            ties = ties[scores == scores.max()]
        if ties.size == 1 or tie_break == "lowest_id":
            return int(ties[0])
        assert rng is not None
        return int(ties[rng.integers(ties.size)])
    return pick


# ---- the public heuristics -------------------------------------------------

def basic_greedy(digraph: Digraph, cfg: GreedyConfig) -> list[int]:
    """Grow by largest uncovered closed out-neighbourhood, then prune.

    Deterministic: equal scores resolve to the lowest vertex id.
    """
    state = _construct(digraph, cfg.k, _pick_lowest, closed=True)
    return minimal_subset(digraph, cfg.k, state.members())


def deficiency_coverage_greedy(digraph: Digraph, cfg: GreedyConfig) -> list[int]:
    """Grow by largest slot coverage number, random among ties, then prune."""
    rng = np.random.default_rng(np.random.SeedSequence(cfg.rng_seed))
    state = _construct(digraph, cfg.k, _random_picker(rng), closed=False)
    return minimal_subset(digraph, cfg.k, state.members())


def two_criteria_greedy(digraph: Digraph, cfg: GreedyConfig) -> list[int]:
    """Slot coverage number first, importance table as the tie-breaker."""
    return complete_two_criteria(digraph, cfg, ())


def complete_two_criteria(digraph: Digraph, cfg: GreedyConfig,
                          seed_vertices: Iterable[int],
                          table: np.ndarray | None = None) -> list[int]:
    """Two-criteria construction started from an existing partial set.

    This is the completion step of the randomized solver; with an empty
    seed it is exactly :func:`two_criteria_greedy`.
    """
    if table is None:
        table = importance_table(digraph)
    rng = None
    if cfg.tie_break == "random":
        rng = np.random.default_rng(np.random.SeedSequence(cfg.rng_seed))
    pick = _importance_picker(table, cfg.tie_break, rng)
    state = _construct(digraph, cfg.k, pick, closed=False, seed_vertices=seed_vertices)
    return minimal_subset(digraph, cfg.k, state.members())


def minimal_subset(digraph: Digraph, k: int, vertices: Iterable[int]) -> list[int]:
    """Prune a k-dominating set to a minimal one.

    Candidates leave in non-decreasing order of their out-reach beyond the
    original set (|N⁺(v) \\ X|, computed once up front; ties by lowest id);
    a candidate is dropped iff the remainder still k-dominates.
    """
    members = sorted({int(v) for v in vertices})
    if not is_k_dominating(digraph, k, members):
        raise ValueError("the given set is not k-dominating")
    state = CoverageState(digraph, k, members)
    outside_original = ~state.in_x  # frozen snapshot of the input set
    reach = {v: int(np.count_nonzero(outside_original[digraph.out_neighbors(v)]))
             for v in members}
    for v in sorted(members, key=lambda v: (reach[v], v)):
        if state.hits[v] < k:
            continue
        out = digraph.out_neighbors(v)
        if np.all(state.in_x[out] | (state.hits[out] > k)):
            state.remove_vertex(v)
    return state.members()
