"""Solve reports and their JSON / CSV-cell serialization."""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field

__all__ = ["SolveReport", "CSV_HEADER", "HEURISTICS"]

CSV_HEADER = ["instance", "n", "m", "k", "heuristic", "params", "size", "time_s", "status"]

HEURISTICS = ("bg", "dcg", "tcg", "rand", "exact")


def format_value(value) -> str:
    """Deterministic text form: repr for floats (shortest round-trip), str otherwise."""
    if isinstance(value, float):
        return repr(value)
    return str(value)


@dataclass
class SolveReport:
    """One solver run: what was solved, with which knobs, and the result."""

    heuristic: str
    k: int
    instance: str
    params: dict
    set_size: int
    solution: list[int]
    wall_time_s: float
    status: str = "ok"

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True, indent=2) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "SolveReport":
        data = json.loads(text)
        try:
            return cls(**data)
        except TypeError as exc:
            raise ValueError(f"not a solve report: {exc}") from None

    def params_text(self) -> str:
        """Key-sorted ``a=1;b=2`` cell for CSV rows."""
        return ";".join(f"{key}={format_value(val)}"
                        for key, val in sorted(self.params.items()))
