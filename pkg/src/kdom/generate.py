"""Random digraphs with independent arcs over all ordered vertex pairs.

Every ordered pair (u, v), u != v, becomes an arc independently with the
configured probability; (u, v) and (v, u) are separate trials.  Pairs are
linearized row-major over (u, v) with the diagonal skipped, and sparse
instances are drawn by geometric gap-skipping along that linear order, so
a given seed reproduces the same digraph on any platform.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .digraph import Digraph, build_digraph

__all__ = ["ErConfig", "generate_er"]

# below this arc probability, skip-sampling beats n(n-1) coin flips
SPARSE_THRESHOLD = 0.01


@dataclass(frozen=True)
class ErConfig:
    n: int
    p_arc: float
    rng_seed: int = 0

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("vertex count must be >= 1")
        if not 0.0 <= self.p_arc <= 1.0:
            raise ValueError(f"arc probability {self.p_arc} outside [0, 1]")
        if self.rng_seed < 0:
            raise ValueError("rng_seed must be non-negative")


def _complete_arcs(n: int) -> np.ndarray:
    src = np.repeat(np.arange(n, dtype=np.int64), n - 1)
    pos = np.tile(np.arange(n - 1, dtype=np.int64), n)
    dst = np.where(pos < src, pos, pos + 1)
    return np.column_stack([src, dst])


def _skip_sampled_arcs(rng: np.random.Generator, n: int, p: float) -> np.ndarray:
    total = n * (n - 1)
    expected = total * p
    batch = max(1024, int(expected + 10.0 * math.sqrt(expected) + 16.0))
    chunks = []
    last = -1
    while last < total:
        gaps = rng.geometric(p, size=batch)
        linear = last + np.cumsum(gaps)
        chunks.append(linear)
        last = int(linear[-1])
    linear = np.concatenate(chunks)
    linear = linear[linear < total]
    src = linear // (n - 1)
    rem = linear % (n - 1)
    dst = np.where(rem < src, rem, rem + 1)
    return np.column_stack([src, dst])


def _coin_flip_arcs(rng: np.random.Generator, n: int, p: float) -> np.ndarray:
    srcs, dsts = [], []
    for u in range(n):
        hit = np.flatnonzero(rng.random(n - 1) < p)
        if hit.size:
            srcs.append(np.full(hit.size, u, dtype=np.int64))
            dsts.append(np.where(hit < u, hit, hit + 1))
    if not srcs:
        return np.empty((0, 2), dtype=np.int64)
    return np.column_stack([np.concatenate(srcs), np.concatenate(dsts)])


def generate_er(cfg: ErConfig) -> Digraph:
    """Draw a random digraph; deterministic for a fixed (n, p_arc, rng_seed)."""
    n, p = cfg.n, cfg.p_arc
    if p == 0.0 or n == 1:
        return build_digraph(n, [])
    if p == 1.0:
        return build_digraph(n, _complete_arcs(n))
    rng = np.random.default_rng(np.random.SeedSequence(cfg.rng_seed))
    if p <= SPARSE_THRESHOLD:
        arcs = _skip_sampled_arcs(rng, n, p)
    else:
        arcs = _coin_flip_arcs(rng, n, p)
    return build_digraph(n, arcs)
