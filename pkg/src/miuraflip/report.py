"""Pass/fail records for claim verification."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any


@dataclass
class Check:
    claim: str
    params: dict = field(default_factory=dict)
    expected: Any = None
    actual: Any = None
    passed: bool | None = None

    def __post_init__(self):
        if self.passed is None:
            self.passed = self.expected == self.actual

    def as_dict(self) -> dict:
        return {
            "claim": self.claim,
            "params": self.params,
            "expected": _jsonable(self.expected),
            "actual": _jsonable(self.actual),
            "pass": bool(self.passed),
        }


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple, set, frozenset)):
        return [_jsonable(v) for v in (sorted(x) if isinstance(x, (set, frozenset)) else x)]
    if isinstance(x, (int, float, str, bool)) or x is None:
        return x
    return str(x)


def all_passed(checks) -> bool:
    return all(c.passed for c in checks)


def failures(checks) -> list[Check]:
    return [c for c in checks if not c.passed]


def to_json(checks) -> str:
    doc = {
        "passed": all_passed(checks),
        "total": len(checks),
        "failed": len(failures(checks)),
        "checks": [c.as_dict() for c in checks],
    }
    return json.dumps(doc, indent=1)


def to_table(checks) -> str:
    rows = []
    for c in checks:
        params = ",".join(f"{k}={v}" for k, v in c.params.items())
        rows.append(("PASS" if c.passed else "FAIL", c.claim, params, _short(c.expected), _short(c.actual)))
    widths = [max(len(r[i]) for r in rows + [("status", "claim", "params", "expected", "actual")]) for i in range(5)]
    head = ("status", "claim", "params", "expected", "actual")
    fmt = "  ".join(f"{{:<{w}}}" for w in widths)
    lines = [fmt.format(*head).rstrip()] + [fmt.format(*r).rstrip() for r in rows]
    return "\n".join(lines)


def _short(x, limit: int = 40) -> str:
    s = json.dumps(_jsonable(x))
    return s if len(s) <= limit else s[: limit - 3] + "..."
