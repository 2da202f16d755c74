from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List

import numpy as np


def to_jsonable(obj: Any) -> Any:
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    if isinstance(obj, np.bool_):
        return bool(obj)
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.floating):
        return float(obj)
    if isinstance(obj, np.ndarray):
        return to_jsonable(obj.tolist())
    return obj


def dumps(obj: Any) -> str:
    return json.dumps(to_jsonable(obj), sort_keys=True, separators=(",", ":"))


@dataclass
class ExperimentReport:
    """Result of one experiment run.

    ``wall_time`` is informational and never written to JSONL, so identical
    parameters and seed give byte-identical JSONL.
    """

    name: str
    params: Dict[str, Any]
    records: List[Dict[str, Any]] = field(default_factory=list)
    summary: Dict[str, Any] = field(default_factory=dict)
    bounds: Dict[str, Any] = field(default_factory=dict)
    certificates: List[Dict[str, Any]] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)
    histogram: List[Dict[str, Any]] = field(default_factory=list)
    passed: bool = True
    wall_time: float = 0.0

    def jsonl(self) -> str:
        lines = [dumps({"type": "header", "name": self.name, "params": self.params, "notes": self.notes})]
        lines += [dumps({"type": "record", **r}) for r in self.records]
        lines += [dumps({"type": "certificate", **c}) for c in self.certificates]
        lines.append(dumps({"type": "summary", "passed": self.passed, "summary": self.summary,
                            "bounds": self.bounds}))
        return "\n".join(lines) + "\n"

    def json(self, include_time: bool = True) -> str:
        doc = {
            "name": self.name, "params": self.params, "summary": self.summary,
            "bounds": self.bounds, "certificates": self.certificates,
            "notes": self.notes, "passed": self.passed, "records": self.records,
            "histogram": self.histogram,
        }
        if include_time:
            doc["wall_time"] = round(self.wall_time, 3)
        return json.dumps(to_jsonable(doc), sort_keys=True, indent=2) + "\n"

    def csv(self) -> str:
        """The histogram if there is one, else the records, as CSV."""
        rows = self.histogram or self.records
        keys = sorted({k for r in rows for k in r})
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=keys, lineterminator="\n")
        w.writeheader()
        for r in rows:
            w.writerow({k: to_jsonable(v) for k, v in r.items()})
        return buf.getvalue()

    def render(self, fmt: str) -> str:
        if fmt == "jsonl":
            return self.jsonl()
        if fmt == "json":
            return self.json()
        if fmt == "csv":
            return self.csv()
        raise ValueError(f"unknown format {fmt!r}")
