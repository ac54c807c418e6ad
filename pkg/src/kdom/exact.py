"""Exact minimum k-dominating sets by branch and bound, plus LP-file export.

The search decides vertices in a fixed order (decreasing total degree,
include branch first).  At every node, vertices that can no longer collect
k set-member in-neighbours are forced into the set, and the node is pruned
when the current set plus the worst single vertex's unavoidable need
cannot beat the incumbent.  Intended for small digraphs (n up to ~30);
bigger instances go through the LP export to an external solver.
"""
from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from time import perf_counter
from typing import Iterable

from .digraph import Digraph

__all__ = ["IlpModel", "ExactResult", "LpSummary", "build_ilp_model",
           "exact_gamma_k", "export_lp"]


@dataclass(frozen=True)
class IlpModel:
    """0/1 program: minimize sum of x_i subject to, for every vertex i,
    k·x_i + sum of x_j over in-neighbours j of i >= k."""

    n: int
    k: int
    in_neighbors: tuple[tuple[int, ...], ...]

    def satisfied_by(self, vertices: Iterable[int]) -> bool:
        chosen = set(int(v) for v in vertices)
        for i in range(self.n):
            lhs = self.k * (i in chosen) + sum(1 for j in self.in_neighbors[i] if j in chosen)
            if lhs < self.k:
                return False
        return True


def build_ilp_model(digraph: Digraph, k: int) -> IlpModel:
    if k < 1:
        raise ValueError("multiplicity of domination k must be >= 1")
    rows = tuple(tuple(int(j) for j in digraph.in_neighbors(i))
                 for i in range(digraph.n))
    return IlpModel(n=digraph.n, k=k, in_neighbors=rows)


@dataclass(frozen=True)
class ExactResult:
    size: int
    witness: list[int]
    status: str  # "optimal" | "timeout_best_known"


def exact_gamma_k(digraph: Digraph, k: int, time_limit_s: float = 1800.0) -> ExactResult:
    """Minimum k-dominating set size, its witness, and the solve status.

    On budget expiry the best feasible set found so far is returned with
    status ``timeout_best_known`` (the full vertex set is always feasible,
    so there is always an incumbent).
    """
    if k < 1:
        raise ValueError("multiplicity of domination k must be >= 1")
    if time_limit_s <= 0:
        raise ValueError("time limit must be positive")
    n = digraph.n
    if n == 0:
        return ExactResult(0, [], "optimal")

    out = [digraph.out_neighbors(v).tolist() for v in range(n)]
    total_deg = digraph.out_degrees + digraph.in_degrees
    order = sorted(range(n), key=lambda v: (-int(total_deg[v]), v))

    UNDECIDED, INCLUDED, EXCLUDED = 0, 1, 2
    decided = [UNDECIDED] * n
    hits = [0] * n
    open_in = [digraph.in_degree(v) for v in range(n)]  # undecided in-neighbours
    chosen: list[int] = []
    best = list(range(n))
    best_size = n
    deadline = perf_counter() + time_limit_s
    timed_out = False

    def include(v: int) -> None:
        decided[v] = INCLUDED
        chosen.append(v)
        for w in out[v]:
            hits[w] += 1
            open_in[w] -= 1

    def undo_include(v: int) -> None:
        decided[v] = UNDECIDED
        chosen.pop()
        for w in out[v]:
            hits[w] -= 1
            open_in[w] += 1

    def exclude(v: int) -> None:
        decided[v] = EXCLUDED
        for w in out[v]:
            open_in[w] -= 1

    def undo_exclude(v: int) -> None:
        decided[v] = UNDECIDED
        for w in out[v]:
            open_in[w] += 1

    def search() -> None:
        nonlocal best, best_size, timed_out
        if timed_out or perf_counter() > deadline:
            timed_out = True
            return
        forced: list[int] = []
        while True:
            infeasible = False
            max_need = 0
            force_now: list[int] = []
            uncovered = 0
            for v in range(n):
                if decided[v] == INCLUDED or hits[v] >= k:
                    continue
                uncovered += 1
                missing = k - hits[v]
                if decided[v] == EXCLUDED:
                    if open_in[v] < missing:
                        infeasible = True
                        break
                    need = missing
                else:
                    if open_in[v] < missing:
                        force_now.append(v)  # in-neighbours alone can never finish v
                    need = 1
                if need > max_need:
                    max_need = need
            if infeasible:
                break
            if uncovered == 0:
                if len(chosen) < best_size:
                    best_size = len(chosen)
                    best = sorted(chosen)
                break
            if force_now:
                for v in force_now:
                    include(v)
                    forced.append(v)
                continue
            if len(chosen) + max_need >= best_size:
                break
            branch_v = next(u for u in order if decided[u] == UNDECIDED)
            include(branch_v)
            search()
            undo_include(branch_v)
            if not timed_out:
                exclude(branch_v)
                search()
                undo_exclude(branch_v)
            break
        for v in reversed(forced):
            undo_include(v)

    search()
    status = "timeout_best_known" if timed_out else "optimal"
    return ExactResult(best_size, best, status)


@dataclass(frozen=True)
class LpSummary:
    variables: int
    constraints: int


def _wrap_terms(terms: list[str], per_line: int = 8) -> list[str]:
    joined = []
    for i in range(0, len(terms), per_line):
        prefix = "" if i == 0 else "+ "
        joined.append(prefix + " + ".join(terms[i:i + per_line]))
    return joined


def export_lp(digraph: Digraph, k: int, path: str | Path) -> LpSummary:
    """Write the 0/1 program as an LP-format text file.

    Sections are Minimize / Subject To / Binary / End; variables are named
    x0..x{n-1} and rows are ordered by vertex id, so output is byte-stable
    for a given digraph.
    """
    if digraph.n == 0:
        raise ValueError("cannot export a program with no variables")
    model = build_ilp_model(digraph, k)
    lines = ["Minimize"]
    objective = _wrap_terms([f"x{i}" for i in range(model.n)])
    lines.append(" obj: " + objective[0])
    lines.extend("      " + part for part in objective[1:])
    lines.append("Subject To")
    for i in range(model.n):
        head = f"x{i}" if k == 1 else f"{k} x{i}"
        terms = [head] + [f"x{j}" for j in model.in_neighbors[i]]
        parts = _wrap_terms(terms)
        lines.append(f" c{i}: " + parts[0] + ("" if len(parts) > 1 else f" >= {k}"))
        for extra_i, part in enumerate(parts[1:], start=2):
            tail = f" >= {k}" if extra_i == len(parts) else ""
            lines.append("      " + part + tail)
    lines.append("Binary")
    lines.extend(f" x{i}" for i in range(model.n))
    lines.append("End")
    Path(path).write_text("\n".join(lines) + "\n", encoding="ascii")
    return LpSummary(variables=model.n, constraints=model.n)
