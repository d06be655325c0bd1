"""Append-only construction traces, for reproducibility of pipeline outputs.

A trace records every operation (with arguments) that produced a graph, plus
which invariant checks passed after the step.  Replaying a trace reproduces
an isomorphic graph; the replay registry lives in `construct` to keep this
module dependency-free.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field


@dataclass(frozen=True)
class TraceStep:
    op: str
    args: dict
    checks: tuple[str, ...] = ()

    def to_line(self) -> str:
        payload = {"op": self.op, "args": self.args, "checks": list(self.checks)}
        return json.dumps(payload, sort_keys=True, separators=(",", ":"))

    @staticmethod
    def from_line(line: str) -> "TraceStep":
        payload = json.loads(line)
        return TraceStep(payload["op"], payload["args"], tuple(payload.get("checks", ())))


@dataclass
class ConstructionTrace:
    steps: list[TraceStep] = field(default_factory=list)

    def record(self, op: str, checks: tuple[str, ...] = (), **args) -> None:
        self.steps.append(TraceStep(op, args, checks))

    def extend(self, other: "ConstructionTrace") -> None:
        self.steps.extend(other.steps)

    def to_text(self) -> str:
        return "\n".join(s.to_line() for s in self.steps) + "\n"

    @staticmethod
    def from_text(text: str) -> "ConstructionTrace":
        steps = [TraceStep.from_line(ln) for ln in text.splitlines() if ln.strip()]
        return ConstructionTrace(steps)

    def __len__(self) -> int:
        return len(self.steps)
