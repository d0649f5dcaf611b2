"""Deterministic machine-readable reports: a fixed-order JSON schema with one
record per executed check.  Identical seed and inputs produce byte-identical
files.

Schema (stable key order):
    {"tool": str, "version": str, "seed": int,
     "summary": {"pass": n, "fail": n, "skipped": n, "evidence": n},
     "checks": [{"check_id": str, "model": str|null, "antiinv": str|null,
                 "params": {name: literal}, "status": str, "detail": {...},
                 "provenance": str}]}
Statuses: pass | fail | skipped | evidence.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field

TOOL = "ilcverify"
VERSION = "0.1.0"

_STATUSES = ("pass", "fail", "skipped", "evidence")


@dataclass
class CheckRecord:
    check_id: str
    status: str
    provenance: str = ""
    model: str | None = None
    antiinv: str | None = None
    params: dict = dc_field(default_factory=dict)
    detail: dict = dc_field(default_factory=dict)

    def __post_init__(self):
        if self.status not in _STATUSES:
            raise ValueError(f"bad status {self.status!r}")


@dataclass
class Report:
    seed: int
    checks: list = dc_field(default_factory=list)

    def add(self, *args, **kw):
        rec = args[0] if args and isinstance(args[0], CheckRecord) \
            else CheckRecord(*args, **kw)
        self.checks.append(rec)
        return rec

    def counts(self):
        out = {s: 0 for s in _STATUSES}
        for c in self.checks:
            out[c.status] += 1
        return out

    def has_failures(self) -> bool:
        return any(c.status == "fail" for c in self.checks)

    def to_json(self) -> str:
        body = {
            "tool": TOOL,
            "version": VERSION,
            "seed": self.seed,
            "summary": self.counts(),
            "checks": [
                {
                    "check_id": c.check_id,
                    "model": c.model,
                    "antiinv": c.antiinv,
                    "params": {k: str(v) for k, v in sorted(c.params.items())},
                    "status": c.status,
                    "detail": _stable(c.detail),
                    "provenance": c.provenance,
                }
                for c in sorted(self.checks, key=lambda c: c.check_id)
            ],
        }
        return json.dumps(body, indent=1, sort_keys=True) + "\n"


def _stable(x):
    if isinstance(x, dict):
        return {str(k): _stable(v) for k, v in sorted(x.items(), key=lambda kv: str(kv[0]))}
    if isinstance(x, (list, tuple)):
        return [_stable(v) for v in x]
    if isinstance(x, float):
        return repr(x)
    if isinstance(x, complex):
        return repr(x)
    if isinstance(x, (int, str, bool)) or x is None:
        return x
    return str(x)


def validate_schema(text: str) -> list:
    """Internal schema checker; returns a list of problems (empty = valid)."""
    problems = []
    try:
        body = json.loads(text)
    except json.JSONDecodeError as e:
        return [f"not JSON: {e}"]
    for key in ("tool", "version", "seed", "summary", "checks"):
        if key not in body:
            problems.append(f"missing top-level key {key}")
    for rec in body.get("checks", []):
        for key in ("check_id", "model", "antiinv", "params", "status",
                    "detail", "provenance"):
            if key not in rec:
                problems.append(f"check {rec.get('check_id')}: missing {key}")
        if rec.get("status") not in _STATUSES:
            problems.append(f"check {rec.get('check_id')}: bad status")
        if not rec.get("provenance"):
            problems.append(f"check {rec.get('check_id')}: empty provenance")
    ids = [r.get("check_id") for r in body.get("checks", [])]
    if ids != sorted(ids):
        problems.append("checks not sorted by check_id")
    return problems


def emit_report(report: Report, path) -> None:
    text = report.to_json()
    problems = validate_schema(text)
    if problems:  # pragma: no cover - guards schema drift
        raise ValueError(f"internal schema violation: {problems}")
    with open(path, "w") as fh:
        fh.write(text)
