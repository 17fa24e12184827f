"""Machine-readable reports produced by the command-line tool."""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .polynomial import format_exact

__all__ = ["Record", "Report", "REPORT_SCHEMA", "render_value"]

REPORT_SCHEMA: dict[str, Any] = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["command", "parameters", "results", "status"],
    "additionalProperties": False,
    "properties": {
        "command": {"type": "string"},
        "parameters": {"type": "object"},
        "status": {"enum": ["pass", "fail"]},
        "results": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["name", "paper_eq", "computed", "expected",
                             "abs_err", "rel_err", "pass"],
                "additionalProperties": False,
                "properties": {
                    "name": {"type": "string"},
                    "paper_eq": {"type": ["string", "null"]},
                    "computed": {"type": "string"},
                    "expected": {"type": ["string", "null"]},
                    "abs_err": {"type": ["number", "null"]},
                    "rel_err": {"type": ["number", "null"]},
                    "pass": {"type": "boolean"},
                },
            },
        },
    },
}

CSV_FIELDS = ["name", "paper_eq", "computed", "expected", "abs_err", "rel_err", "pass"]


def render_value(v: Any) -> str:
    """Exact values as ``"4140"`` / ``"-1/30"``, floats with 17 significant digits."""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (int, Fraction)):
        return format_exact(v)
    if isinstance(v, float):
        return format(v, ".17g")
    if isinstance(v, complex):
        return f"{v.real:.17g}{v.imag:+.17g}j"
    return str(v)


def _num(x: float | None) -> float | None:
    if x is None:
        return None
    x = float(x)
    return x if math.isfinite(x) else None


@dataclass
class Record:
    name: str
    computed: str
    expected: str | None = None
    abs_err: float | None = None
    rel_err: float | None = None
    passed: bool = True
    paper_eq: str | None = None

    @classmethod
    def value(cls, name: str, value: Any, tag: str | None = None) -> "Record":
        return cls(name, render_value(value), paper_eq=tag)

    @classmethod
    def exact(cls, name: str, computed: Any, expected: Any, tag: str | None = None) -> "Record":
        """Zero-tolerance comparison of exact quantities."""
        ok = computed == expected
        err = None
        if isinstance(computed, (int, Fraction)) and isinstance(expected, (int, Fraction)):
            err = float(abs(Fraction(computed) - Fraction(expected)))
        return cls(name, render_value(computed), render_value(expected), err, None, ok, tag)

    @classmethod
    def numeric(cls, name: str, computed: complex | float, expected: complex | float,
                rel_tol: float, abs_tol: float = 0.0, tag: str | None = None) -> "Record":
        a = abs(computed - expected)
        rel = a / abs(expected) if expected != 0 else None
        ok = a <= max(abs_tol, rel_tol * abs(expected))
        return cls(name, render_value(computed), render_value(expected), _num(a), _num(rel), ok, tag)

    def to_dict(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "paper_eq": self.paper_eq,
            "computed": self.computed,
            "expected": self.expected,
            "abs_err": _num(self.abs_err),
            "rel_err": _num(self.rel_err),
            "pass": self.passed,
        }

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> "Record":
        return cls(d["name"], d["computed"], d["expected"], d["abs_err"], d["rel_err"],
                   d["pass"], d["paper_eq"])


@dataclass
class Report:
    command: str
    parameters: dict[str, Any] = field(default_factory=dict)
    results: list[Record] = field(default_factory=list)

    @property
    def status(self) -> str:
        return "pass" if all(r.passed for r in self.results) else "fail"

    def add(self, record: Record) -> Record:
        self.results.append(record)
        return record

    def to_dict(self) -> dict[str, Any]:
        return {
            "command": self.command,
            "parameters": self.parameters,
            "results": [r.to_dict() for r in self.results],
            "status": self.status,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "Report":
        d = json.loads(text)
        return cls(d["command"], d["parameters"], [Record.from_dict(r) for r in d["results"]])

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=CSV_FIELDS, lineterminator="\n")
        w.writeheader()
        for r in self.results:
            row = r.to_dict()
            row["pass"] = "true" if r.passed else "false"
            for k in ("abs_err", "rel_err"):
                row[k] = "" if row[k] is None else format(row[k], ".17g")
            w.writerow({k: "" if v is None else v for k, v in row.items()})
        return buf.getvalue()

    def to_text(self) -> str:
        lines = []
        for r in self.results:
            line = f"{r.name}: {r.computed}"
            if r.expected is not None:
                flag = "PASS" if r.passed else "FAIL"
                extra = f" (rel {r.rel_err:.2e})" if r.rel_err is not None else ""
                line = f"[{flag}] {r.name}: {r.computed} vs {r.expected}{extra}"
            lines.append(line)
        if any(r.expected is not None for r in self.results):
            n_fail = sum(not r.passed for r in self.results)
            lines.append(f"{len(self.results) - n_fail}/{len(self.results)} checks passed")
        return "\n".join(lines) + "\n"
