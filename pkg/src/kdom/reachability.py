"""Reachability digraphs from arc-weighted road networks.

A road network is a digraph whose arcs carry non-negative lengths in
metres.  The reachability digraph for a radius r has an arc (u, v)
whenever the shortest driving distance from u to v is at most r; ties at
exactly r are included.  With ``reverse_for_destinations`` the arcs are
flipped so that a k-dominating set of the result is a set of destinations
every other vertex can reach at least k of, rather than a set of origins.
"""
from __future__ import annotations

import heapq
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .digraph import Digraph, build_digraph, reverse

__all__ = ["WeightedRoadNetwork", "ReachabilityParams", "bounded_sssp",
           "build_reachability"]


class WeightedRoadNetwork:
    """Digraph plus per-arc lengths, aligned with the out-adjacency order.

    Negative lengths are rejected at construction: the whole pipeline is
    built on label-setting shortest paths, which they would break.
    Duplicate (u, v) entries keep the shortest length.
    """

    def __init__(self, digraph: Digraph, weights: np.ndarray):
        if weights.shape != (digraph.m,):
            raise ValueError("need exactly one weight per arc")
        if weights.size and float(weights.min()) < 0.0:
            i = int(np.argmin(weights))
            u = int(digraph.arc_sources()[i])
            v = int(digraph.arc_targets()[i])
            raise ValueError(f"negative weight on arc ({u}, {v})")
        self.digraph = digraph
        self.weights = weights.astype(np.float64)
        self.weights.setflags(write=False)
        self._adjacency: list[list[tuple[int, float]]] | None = None

    @classmethod
    def from_arcs(cls, n: int,
                  weighted_arcs: Iterable[tuple[int, int, float]]) -> "WeightedRoadNetwork":
        triples = list(weighted_arcs)
        if not triples:
            return cls(build_digraph(n, []), np.empty(0))
        src = np.asarray([t[0] for t in triples], dtype=np.int64)
        dst = np.asarray([t[1] for t in triples], dtype=np.int64)
        w = np.asarray([t[2] for t in triples], dtype=np.float64)
        neg = np.flatnonzero(w < 0.0)
        if neg.size:
            i = int(neg[0])
            raise ValueError(f"negative weight on arc ({int(src[i])}, {int(dst[i])})")
        digraph = build_digraph(n, np.column_stack([src, dst]))
        # minimum weight per ordered pair, in the digraph's (u, v) order
        key = src * n + dst
        order = np.lexsort((w, key))
        first = np.ones(order.size, dtype=bool)
        first[1:] = key[order][1:] != key[order][:-1]
        return cls(digraph, w[order][first])

    def adjacency(self) -> list[list[tuple[int, float]]]:
        """Plain-list out-adjacency with weights; built once, then cached."""
        if self._adjacency is None:
            d = self.digraph
            adj: list[list[tuple[int, float]]] = []
            for u in range(d.n):
                lo, hi = d._out_indptr[u], d._out_indptr[u + 1]
                adj.append(list(zip(d._out_indices[lo:hi].tolist(),
                                    self.weights[lo:hi].tolist())))
            self._adjacency = adj
        return self._adjacency


@dataclass(frozen=True)
class ReachabilityParams:
    radius_m: float
    reverse_for_destinations: bool = False

    def __post_init__(self) -> None:
        if self.radius_m <= 0:
            raise ValueError("radius must be positive")


def bounded_sssp(network: WeightedRoadNetwork, source: int,
                 radius_m: float) -> list[tuple[int, float]]:
    """Vertices within driving distance radius_m of source, with distances.

    Label-setting search that stops once the frontier minimum exceeds the
    radius; the source itself is not reported.  Returned pairs are sorted
    by vertex id.
    """
    n = network.digraph.n
    if not 0 <= source < n:
        raise ValueError(f"source {source} outside [0, {n})")
    if radius_m <= 0:
        raise ValueError("radius must be positive")
    adj = network.adjacency()
    settled: dict[int, float] = {}
    dist = {source: 0.0}
    heap: list[tuple[float, int]] = [(0.0, source)]
    while heap:
        d, u = heapq.heappop(heap)
        if d > radius_m:
            break
        if u in settled:
            continue
        settled[u] = d
        for v, w in adj[u]:
            nd = d + w
            if nd <= radius_m and v not in settled and nd < dist.get(v, float("inf")):
                dist[v] = nd
                heapq.heappush(heap, (nd, v))
    del settled[source]
    return sorted(settled.items())


def build_reachability(network: WeightedRoadNetwork, params: ReachabilityParams,
                       threads: int = 1) -> Digraph:
    """Arc (u, v) iff v is within params.radius_m of u; one search per vertex.

    Per-source searches are independent; with threads > 1 they are sharded
    across a pool and merged in source order, so the result does not depend
    on the worker count.
    """
    n = network.digraph.n
    network.adjacency()  # build the shared read-only adjacency up front

    def row(u: int) -> list[int]:
        return [v for v, _ in bounded_sssp(network, u, params.radius_m)]

    if threads > 1 and n > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            rows = list(pool.map(row, range(n)))
    else:
        rows = [row(u) for u in range(n)]

    lengths = [len(r) for r in rows]
    src = np.repeat(np.arange(n, dtype=np.int64), lengths)
    dst = np.asarray([v for r in rows for v in r], dtype=np.int64)
    result = build_digraph(n, np.column_stack([src, dst]) if src.size else [])
    return reverse(result) if params.reverse_for_destinations else result
