"""Verification reports with stable JSON and plain-text renderings."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

REPORT_SCHEMA = 1


def jsonable(obj):
    """Convert report payloads to plain JSON values, deterministically."""
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, complex):
        return [obj.real, obj.imag]
    if isinstance(obj, float):
        return obj
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    if obj is None or isinstance(obj, (bool, int, str)):
        return obj
    return str(obj)


@dataclass
class Record:
    id: str
    status: str  # pass / fail / skip
    anchor: str
    detail: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"id": self.id, "status": self.status, "anchor": self.anchor, "detail": jsonable(self.detail)}


@dataclass
class VerificationReport:
    suite: str
    records: list[Record] = field(default_factory=list)
    options: dict = field(default_factory=dict)

    def add(self, id: str, ok: bool | None, anchor: str, **detail) -> Record:
        status = "skip" if ok is None else ("pass" if ok else "fail")
        rec = Record(id, status, anchor, detail)
        self.records.append(rec)
        return rec

    def extend(self, other: "VerificationReport") -> None:
        self.records.extend(other.records)

    @property
    def failed(self) -> list[Record]:
        return [r for r in self.records if r.status == "fail"]

    @property
    def exit_code(self) -> int:
        return 1 if self.failed else 0

    def counts(self) -> dict:
        out = {"pass": 0, "fail": 0, "skip": 0}
        for r in self.records:
            out[r.status] += 1
        return out

    def to_json(self) -> dict:
        return {
            "schema": REPORT_SCHEMA,
            "suite": self.suite,
            "options": jsonable(self.options),
            "summary": self.counts(),
            "records": [r.to_json() for r in self.records],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, indent=2) + "\n"

    def text(self) -> str:
        lines = []
        for r in self.records:
            lines.append(f"{r.status.upper():4}  {r.id}  [{r.anchor}]")
        c = self.counts()
        lines.append(f"suite {self.suite}: {c['pass']} pass, {c['fail']} fail, {c['skip']} skip")
        return "\n".join(lines) + "\n"

    def render(self, fmt: str) -> str:
        return self.dumps() if fmt == "json" else self.text()
