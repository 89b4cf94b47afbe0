"""Machine-readable records of reproduced results."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from typing import Any


@dataclass(frozen=True)
class SubCheck:
    name: str
    passed: bool
    data: dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> dict[str, Any]:
        return {"name": self.name, "passed": self.passed, "data": self.data}


@dataclass(frozen=True)
class WitnessReport:
    name: str
    statement: str
    inputs: dict[str, Any]
    verdict: str  # "Reproduced" or "Failed"
    details: tuple[SubCheck, ...]
    elapsed: float
    label: str = ""

    @classmethod
    def build(cls, name, statement, inputs, details, started, verdict_label=""):
        details = tuple(details)
        ok = all(c.passed for c in details)
        return cls(
            name=name,
            statement=statement,
            inputs=dict(inputs),
            verdict="Reproduced" if ok else "Failed",
            details=details,
            elapsed=time.perf_counter() - started,
            label=verdict_label,
        )

    @property
    def reproduced(self) -> bool:
        return self.verdict == "Reproduced"

    def failed_checks(self) -> list[SubCheck]:
        return [c for c in self.details if not c.passed]

    def to_dict(self, with_elapsed: bool = True) -> dict[str, Any]:
        d = {
            "name": self.name,
            "statement": self.statement,
            "inputs": self.inputs,
            "verdict": self.verdict,
            "label": self.label,
            "details": [c.to_dict() for c in self.details],
        }
        if with_elapsed:
            d["elapsed"] = round(self.elapsed, 6)
        return d

    def to_json(self, with_elapsed: bool = True) -> str:
        return json.dumps(self.to_dict(with_elapsed), sort_keys=True, indent=2)

    def summary(self) -> str:
        lines = [f"{self.name}: {self.verdict}" + (f" ({self.label})" if self.label else "")]
        lines.append(f"  {self.statement}")
        for c in self.details:
            lines.append(f"  [{'ok' if c.passed else 'FAIL'}] {c.name}")
        lines.append(f"  elapsed: {self.elapsed:.3f}s")
        return "\n".join(lines)
