"""Immutable directed graphs stored as dual sorted adjacency arrays.

Vertices are dense 0-based integers.  Arcs are ordered pairs of distinct
vertices; duplicate pairs in the input are merged at build time (the merge
count is kept on the instance).  Both the out- and in-adjacency of every
vertex are stored in CSR form with neighbour lists sorted by vertex id, so
forward and backward neighbourhood queries are contiguous array slices.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

import numpy as np

__all__ = ["Digraph", "DegreeStats", "build_digraph", "in_degree_stats", "reverse"]


def _freeze(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


class Digraph:
    """Directed graph over vertices 0..n-1 with sorted dual adjacency.

    Instances are immutable after construction and safe to read from
    multiple threads.  Use :func:`build_digraph` to create one from an
    arc list; the constructor takes prebuilt CSR arrays and is meant for
    internal use.
    """

    __slots__ = ("n", "m", "duplicates_merged",
                 "_out_indptr", "_out_indices", "_in_indptr", "_in_indices")

    def __init__(self, n, out_indptr, out_indices, in_indptr, in_indices,
                 duplicates_merged=0):
        self.n = int(n)
        self.m = int(out_indices.size)
        self.duplicates_merged = int(duplicates_merged)
        self._out_indptr = _freeze(out_indptr)
        self._out_indices = _freeze(out_indices)
        self._in_indptr = _freeze(in_indptr)
        self._in_indices = _freeze(in_indices)

    # ---- neighbourhood queries --------------------------------------------

    def out_neighbors(self, v: int) -> np.ndarray:
        """Sorted array of vertices directly reachable from v."""
        return self._out_indices[self._out_indptr[v]:self._out_indptr[v + 1]]

    def in_neighbors(self, v: int) -> np.ndarray:
        """Sorted array of vertices from which v is directly reachable."""
        return self._in_indices[self._in_indptr[v]:self._in_indptr[v + 1]]

    def out_degree(self, v: int) -> int:
        return int(self._out_indptr[v + 1] - self._out_indptr[v])

    def in_degree(self, v: int) -> int:
        return int(self._in_indptr[v + 1] - self._in_indptr[v])

    @property
    def out_degrees(self) -> np.ndarray:
        return np.diff(self._out_indptr)

    @property
    def in_degrees(self) -> np.ndarray:
        return np.diff(self._in_indptr)

    def has_arc(self, u: int, v: int) -> bool:
        row = self.out_neighbors(u)
        i = np.searchsorted(row, v)
        return bool(i < row.size and row[i] == v)

    # ---- whole-graph views -------------------------------------------------

    def arc_sources(self) -> np.ndarray:
        """Source vertex of every arc, aligned with :meth:`arc_targets`."""
        return np.repeat(np.arange(self.n, dtype=np.int32), self.out_degrees)

    def arc_targets(self) -> np.ndarray:
        """Target vertex of every arc, in (source, target) sorted order."""
        return self._out_indices

    def arcs(self) -> Iterator[tuple[int, int]]:
        src = self.arc_sources()
        dst = self._out_indices
        return ((int(src[i]), int(dst[i])) for i in range(self.m))

    # ---- dunder -------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Digraph):
            return NotImplemented
        return (self.n == other.n
                and np.array_equal(self._out_indptr, other._out_indptr)
                and np.array_equal(self._out_indices, other._out_indices))

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class DegreeStats:
    """Minimum / average / median / maximum in-degree of a digraph."""

    min_in: int
    avg_in: float
    med_in: float
    max_in: int


def build_digraph(n: int, arcs: Iterable[tuple[int, int]]) -> Digraph:
    """Build a :class:`Digraph` on n vertices from an iterable of (u, v) pairs.

    Endpoints must lie in [0, n) and self-loops are rejected; duplicate
    pairs are merged and counted in ``duplicates_merged``.
    """
    n = int(n)
    if n < 0:
        raise ValueError("vertex count must be non-negative")
    arr = np.asarray(arcs if isinstance(arcs, np.ndarray) else list(arcs),
                     dtype=np.int64)
    if arr.size == 0:
        empty_ptr = np.zeros(n + 1, dtype=np.int64)
        empty_idx = np.empty(0, dtype=np.int32)
        return Digraph(n, empty_ptr, empty_idx, empty_ptr.copy(), empty_idx.copy())
    if arr.ndim != 2 or arr.shape[1] != 2:
        raise ValueError("arcs must be (u, v) pairs")
    u, v = arr[:, 0], arr[:, 1]
    bad = np.flatnonzero((u < 0) | (u >= n) | (v < 0) | (v >= n))
    if bad.size:
        i = int(bad[0])
        raise ValueError(f"arc ({int(u[i])}, {int(v[i])}) has an endpoint outside [0, {n})")
    loops = np.flatnonzero(u == v)
    if loops.size:
        i = int(loops[0])
        raise ValueError(f"self-loop ({int(u[i])}, {int(v[i])}) is not allowed")

    keys = np.unique(u * n + v)
    dupes = arr.shape[0] - keys.size
    uu = (keys // n).astype(np.int32)
    vv = (keys % n).astype(np.int32)

    out_indptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(np.bincount(uu, minlength=n), out=out_indptr[1:])
    out_indices = vv

    order = np.lexsort((uu, vv))  # sort by (target, source)
    in_indptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(np.bincount(vv, minlength=n), out=in_indptr[1:])
    in_indices = uu[order]

    return Digraph(n, out_indptr, out_indices, in_indptr, in_indices, dupes)


def in_degree_stats(digraph: Digraph) -> DegreeStats:
    """Minimum, average, median and maximum in-degree of a non-empty digraph.

    The median follows the usual order-statistics rule: middle element for
    odd n, mean of the two middle elements for even n.
    """
    if digraph.n == 0:
        raise ValueError("degree statistics need at least one vertex")
    deg = digraph.in_degrees
    return DegreeStats(min_in=int(deg.min()),
                       avg_in=digraph.m / digraph.n,
                       med_in=float(np.median(deg)),
                       max_in=int(deg.max()))


def reverse(digraph: Digraph) -> Digraph:
    """Digraph with every arc (u, v) replaced by (v, u).

    Shares the underlying arrays with the input (both are immutable), so
    this is O(1) and ``reverse(reverse(d)) == d``.
    """
    return Digraph(digraph.n,
                   digraph._in_indptr, digraph._in_indices,
                   digraph._out_indptr, digraph._out_indices,
                   digraph.duplicates_merged)
