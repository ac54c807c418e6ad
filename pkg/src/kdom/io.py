"""Text file formats for digraphs and weighted road networks.

Both formats share the frame: '#' starts a comment, blank lines are
ignored, the first content line is ``n m``, and exactly m arc lines
follow, ``u v`` for plain digraphs and ``u v w`` (w in metres, >= 0) for
weighted networks.  The writer emits arcs sorted by (u, v), so files are
byte-stable for a given digraph.
"""
from __future__ import annotations

from pathlib import Path
from typing import Iterator

import numpy as np

from .digraph import Digraph, build_digraph
from .reachability import WeightedRoadNetwork

__all__ = ["ParseError", "read_digraph", "write_digraph", "read_weighted"]


class ParseError(ValueError):
    """Malformed input file; carries the path and 1-based line number."""

    def __init__(self, path: str | Path, line_no: int, message: str):
        super().__init__(f"{path}:{line_no}: {message}")
        self.path = str(path)
        self.line_no = line_no


def _content_lines(path: str | Path) -> Iterator[tuple[int, str]]:
    with open(path, "r", encoding="utf-8") as handle:
        for line_no, raw in enumerate(handle, start=1):
            text = raw.split("#", 1)[0].strip()
            if text:
                yield line_no, text


def _read_header(path: str | Path, lines: Iterator[tuple[int, str]]) -> tuple[int, int]:
    try:
        line_no, text = next(lines)
    except StopIteration:
        raise ParseError(path, 1, "missing 'n m' header") from None
    fields = text.split()
    if len(fields) != 2:
        raise ParseError(path, line_no, f"expected 'n m' header, got {text!r}")
    try:
        n, m = int(fields[0]), int(fields[1])
    except ValueError:
        raise ParseError(path, line_no, f"expected 'n m' header, got {text!r}") from None
    if n < 0 or m < 0:
        raise ParseError(path, line_no, "n and m must be non-negative")
    return n, m


def read_digraph(path: str | Path) -> Digraph:
    lines = _content_lines(path)
    n, m = _read_header(path, lines)
    arcs = []
    for line_no, text in lines:
        fields = text.split()
        if len(fields) != 2:
            raise ParseError(path, line_no, f"expected 'u v', got {text!r}")
        try:
            arcs.append((int(fields[0]), int(fields[1])))
        except ValueError:
            raise ParseError(path, line_no, f"expected 'u v', got {text!r}") from None
    if len(arcs) != m:
        raise ValueError(f"{path}: header promises {m} arcs, file has {len(arcs)}")
    try:
        return build_digraph(n, arcs)
    except ValueError as exc:
        raise ValueError(f"{path}: {exc}") from None


def write_digraph(digraph: Digraph, path: str | Path) -> None:
    src = digraph.arc_sources()
    dst = digraph.arc_targets()
    with open(path, "w", encoding="ascii", newline="\n") as handle:
        handle.write(f"{digraph.n} {digraph.m}\n")
        handle.writelines(f"{int(src[i])} {int(dst[i])}\n" for i in range(digraph.m))


def read_weighted(path: str | Path) -> WeightedRoadNetwork:
    lines = _content_lines(path)
    n, m = _read_header(path, lines)
    triples = []
    for line_no, text in lines:
        fields = text.split()
        if len(fields) != 3:
            raise ParseError(path, line_no, f"expected 'u v w', got {text!r}")
        try:
            u, v, w = int(fields[0]), int(fields[1]), float(fields[2])
        except ValueError:
            raise ParseError(path, line_no, f"expected 'u v w', got {text!r}") from None
        if w < 0:
            raise ParseError(path, line_no, f"negative weight on arc ({u}, {v})")
        triples.append((u, v, w))
    if len(triples) != m:
        raise ValueError(f"{path}: header promises {m} arcs, file has {len(triples)}")
    try:
        return WeightedRoadNetwork.from_arcs(n, triples)
    except ValueError as exc:
        raise ValueError(f"{path}: {exc}") from None
