"""Independent oracles used to check the package's fast paths.

Everything here is written from the definitions, with plain loops and no
shared code with the implementation: bitmask brute force for minimum
k-dominating sets, literal coverage recounts, Floyd-Warshall for all-pairs
distances, and high-precision formula evaluation via mpmath.
"""
from __future__ import annotations

from itertools import combinations

import mpmath
import numpy as np

from kdom import Digraph


def naive_hits(digraph: Digraph, members: set[int]) -> list[int]:
    """|N^-(v) ∩ X| for every v, recounted from scratch."""
    counts = [0] * digraph.n
    for v in range(digraph.n):
        counts[v] = sum(1 for u in digraph.in_neighbors(v) if int(u) in members)
    return counts


def naive_covered(digraph: Digraph, k: int, members: set[int]) -> set[int]:
    hits = naive_hits(digraph, members)
    return {v for v in range(digraph.n) if v in members or hits[v] >= k}


def naive_is_k_dominating(digraph: Digraph, k: int, members: set[int]) -> bool:
    return naive_covered(digraph, k, members) == set(range(digraph.n))


def naive_is_minimal(digraph: Digraph, k: int, members: set[int]) -> bool:
    if not naive_is_k_dominating(digraph, k, members):
        raise ValueError("not k-dominating")
    return all(not naive_is_k_dominating(digraph, k, members - {v})
               for v in members)


def brute_force_gamma_k(digraph: Digraph, k: int) -> tuple[int, set[int]]:
    """Smallest k-dominating set by exhaustive subset enumeration (n <= ~16)."""
    n = digraph.n
    in_masks = [0] * n
    for v in range(n):
        for u in digraph.in_neighbors(v):
            in_masks[v] |= 1 << int(u)
    for size in range(n + 1):
        for combo in combinations(range(n), size):
            chosen = 0
            for v in combo:
                chosen |= 1 << v
            if all((chosen >> v) & 1 or (in_masks[v] & chosen).bit_count() >= k
                   for v in range(n)):
                return size, set(combo)
    raise AssertionError("the full vertex set always dominates")


def floyd_warshall(n: int, weighted_arcs: list[tuple[int, int, float]]) -> np.ndarray:
    """All-pairs shortest distances; duplicate arcs keep the minimum weight."""
    dist = np.full((n, n), np.inf)
    np.fill_diagonal(dist, 0.0)
    for u, v, w in weighted_arcs:
        if w < dist[u, v]:
            dist[u, v] = w
    for via in range(n):
        dist = np.minimum(dist, dist[:, via, None] + dist[None, via, :])
    return dist


def inclusion_probability_reference(x, k: int) -> float:
    """p(x) at 50 decimal digits, straight from the formula."""
    with mpmath.workdps(50):
        x = mpmath.mpf(x)
        base = mpmath.binomial(int(mpmath.floor(x)), k - 1) * (x - k + 2)
        return float(1 - base ** (-1 / (x - k + 1)))


def upper_bound_reference(delta: int, k: int, n: int) -> float:
    """The minimum-in-degree domination bound at 50 decimal digits."""
    with mpmath.workdps(50):
        dp = mpmath.mpf(delta - k + 1)
        denom = mpmath.binomial(delta, k - 1) ** (1 / dp) * (1 + dp) ** (1 + 1 / dp)
        return float(n * (1 - dp / denom))


def small_er(n: int, p: float, seed: int) -> Digraph:
    """Plain-loop random digraph for oracle-side instance generation."""
    from kdom import build_digraph
    rng = np.random.default_rng(seed)
    arcs = [(u, v) for u in range(n) for v in range(n)
            if u != v and rng.random() < p]
    return build_digraph(n, arcs)


# ---- literal greedy references (gains recomputed from scratch each round) ----

def naive_minimal_subset(digraph: Digraph, k: int, members: set[int]) -> list[int]:
    kept = set(members)
    reach_out = {v: sum(1 for w in digraph.out_neighbors(v) if int(w) not in members)
                 for v in members}
    for v in sorted(members, key=lambda v: (reach_out[v], v)):
        if naive_is_k_dominating(digraph, k, kept - {v}):
            kept.discard(v)
    return sorted(kept)


def _naive_greedy(digraph: Digraph, k: int, score, seed=(), rng=None) -> list[int]:
    everything = set(range(digraph.n))
    members: set[int] = set(int(v) for v in seed)
    while True:
        covered = naive_covered(digraph, k, members)
        if covered == everything:
            break
        hits = naive_hits(digraph, members)
        outside = [u for u in range(digraph.n) if u not in members]
        if rng is None:
            pick = max(outside, key=lambda u: score(u, covered, hits[u]) + (-u,))
        else:
            scored = [(score(u, covered, hits[u]), u) for u in outside]
            top = max(s for s, _ in scored)
            ties = [u for s, u in scored if s == top]
            pick = ties[rng.integers(len(ties))]
        members.add(pick)
    return naive_minimal_subset(digraph, k, members)


def naive_basic_greedy(digraph: Digraph, k: int) -> list[int]:
    def score(u, covered, hits_u):
        closed = [u] + [int(w) for w in digraph.out_neighbors(u)]
        return (sum(1 for w in closed if w not in covered),)
    return _naive_greedy(digraph, k, score)


def naive_two_criteria_greedy(digraph: Digraph, k: int, seed=()) -> list[int]:
    def score(u, covered, hits_u):
        slot = (sum(1 for w in digraph.out_neighbors(u) if int(w) not in covered)
                + max(0, k - hits_u))
        importance = sum(digraph.in_degree(int(w)) for w in digraph.out_neighbors(u))
        return (slot, importance)
    return _naive_greedy(digraph, k, score, seed=seed)


def naive_deficiency_greedy(digraph: Digraph, k: int, rng) -> list[int]:
    """Mirrors the solver's one-integers-draw-per-round tie handling."""
    def score(u, covered, hits_u):
        slot = (sum(1 for w in digraph.out_neighbors(u) if int(w) not in covered)
                + max(0, k - hits_u))
        return (slot,)
    return _naive_greedy(digraph, k, score, rng=rng)
