"""Incremental k-coverage bookkeeping and domination checks.

A vertex is k-covered by a set X when it belongs to X or has at least k
in-neighbours inside X.  :class:`CoverageState` tracks the per-vertex
in-neighbour counts incrementally while vertices enter and leave X;
:func:`is_k_dominating` recomputes the same facts statelessly and serves
as the independent cross-check.
"""
from __future__ import annotations

from typing import Iterable

import numpy as np

from .digraph import Digraph

__all__ = ["CoverageState", "is_k_dominating", "is_minimal_k_dominating"]


def _member_mask(n: int, vertices: Iterable[int]) -> np.ndarray:
    mask = np.zeros(n, dtype=bool)
    idx = np.asarray(list(vertices), dtype=np.int64)
    if idx.size:
        if idx.min() < 0 or idx.max() >= n:
            raise ValueError("vertex id outside [0, n)")
        mask[idx] = True
    return mask


def _hits_for_mask(digraph: Digraph, mask: np.ndarray) -> np.ndarray:
    """Number of in-neighbours inside the masked set, for every vertex."""
    src = digraph.arc_sources()
    dst = digraph.arc_targets()
    return np.bincount(dst[mask[src]], minlength=digraph.n).astype(np.int64)


class CoverageState:
    """Tracks X, the counts |N⁻(v) ∩ X| and the k-covered set incrementally.

    Owned by a single solver run; several states over one shared digraph
    can be driven in parallel.  ``add_vertex``/``remove_vertex`` return the
    vertices whose covered status flipped, which the greedy solvers use to
    maintain their gain bookkeeping.
    """

    def __init__(self, digraph: Digraph, k: int, members: Iterable[int] = ()):
        if k < 1:
            raise ValueError("multiplicity of domination k must be >= 1")
        self.digraph = digraph
        self.k = int(k)
        self.in_x = _member_mask(digraph.n, members)
        self.hits = _hits_for_mask(digraph, self.in_x)
        self.covered = self.in_x | (self.hits >= self.k)
        self.covered_count = int(np.count_nonzero(self.covered))

    @property
    def all_covered(self) -> bool:
        return self.covered_count == self.digraph.n

    def members(self) -> list[int]:
        return [int(v) for v in np.flatnonzero(self.in_x)]

    def add_vertex(self, v: int) -> np.ndarray:
        """Put v into X; returns the sorted vertices that became k-covered."""
        if self.in_x[v]:
            raise ValueError(f"vertex {v} is already in the set")
        self.in_x[v] = True
        newly = []
        if not self.covered[v]:
            self.covered[v] = True
            newly.append(v)
        out = self.digraph.out_neighbors(v)
        self.hits[out] += 1
        flipped = out[(~self.covered[out]) & (self.hits[out] >= self.k)]
        self.covered[flipped] = True
        if flipped.size:
            newly.extend(int(w) for w in flipped)
        self.covered_count += len(newly)
        return np.sort(np.asarray(newly, dtype=np.int64))

    def remove_vertex(self, v: int) -> np.ndarray:
        """Inverse of :meth:`add_vertex`; returns vertices that lost coverage."""
        if not self.in_x[v]:
            raise ValueError(f"vertex {v} is not in the set")
        self.in_x[v] = False
        newly = []
        if self.hits[v] < self.k:
            self.covered[v] = False
            newly.append(v)
        out = self.digraph.out_neighbors(v)
        self.hits[out] -= 1
        flipped = out[(~self.in_x[out]) & self.covered[out] & (self.hits[out] < self.k)]
        self.covered[flipped] = False
        if flipped.size:
            newly.extend(int(w) for w in flipped)
        self.covered_count -= len(newly)
        return np.sort(np.asarray(newly, dtype=np.int64))

    def deficiency(self, v: int) -> int:
        """How many in-neighbours of v are still missing from X, clamped at 0."""
        if self.in_x[v]:
            raise ValueError(f"deficiency is defined outside the set; {v} is a member")
        return max(0, self.k - int(self.hits[v]))


def is_k_dominating(digraph: Digraph, k: int, vertices: Iterable[int]) -> bool:
    """Stateless check that every vertex is in X or has >= k in-neighbours in X."""
    if k < 1:
        raise ValueError("multiplicity of domination k must be >= 1")
    mask = _member_mask(digraph.n, vertices)
    hits = _hits_for_mask(digraph, mask)
    return bool(np.all(mask | (hits >= k)))


def is_minimal_k_dominating(digraph: Digraph, k: int, vertices: Iterable[int]) -> bool:
    """True iff X is k-dominating and no single member can be dropped.

    A member v is droppable exactly when v itself keeps >= k in-neighbours
    in X and every out-neighbour of v outside X has at least k+1 (so one
    loss is affordable); this single scan is equivalent to re-checking
    X \\ {v} for every v.
    """
    mask = _member_mask(digraph.n, vertices)
    hits = _hits_for_mask(digraph, mask)
    if not np.all(mask | (hits >= k)):
        raise ValueError("the given set is not k-dominating")
    for v in np.flatnonzero(mask):
        if hits[v] < k:
            continue
        out = digraph.out_neighbors(v)
        if np.all(mask[out] | (hits[out] >= k + 1)):
            return False
    return True
