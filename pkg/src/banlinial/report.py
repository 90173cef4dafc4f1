"""Versioned JSON run reports."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from typing import Any

SCHEMA = 1


@dataclass
class Report:
    command: str
    graph: str  # graph6
    n: int
    status: str = "ok"
    solver_path: str | None = None
    certificate: dict | None = None
    split: dict | None = None  # {"X": [...], "Y": [...]}
    report: dict | None = None  # SplitReport.to_dict()
    verified: bool | None = None
    oracle: dict | None = None
    extra: dict[str, Any] = field(default_factory=dict)
    timing: float | None = None
    schema: int = SCHEMA

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, **kwargs)

    @classmethod
    def from_dict(cls, d: dict) -> "Report":
        if d.get("schema") != SCHEMA:
            raise ValueError(f"unsupported report schema {d.get('schema')!r}")
        return cls(**d)

    @classmethod
    def from_json(cls, text: str) -> "Report":
        return cls.from_dict(json.loads(text))


def split_dict(s) -> dict:
    return {"X": sorted(s.x), "Y": sorted(s.y)}
