"""Rule-by-rule traces of the digit machines.

Every machine driver accepts an optional ``trace`` callable that is invoked
as ``trace(rule, state)`` just *before* a rule is applied, with ``rule``
being ``"A"`` or ``"B"``.  Recording the states this way makes the first
line the initial state and keeps the usual reading
``state --rule--> next state`` intact.

Text form, one line per rule application::

    STEP <i> <A|B> <name>=<value> ...
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable, Protocol

__all__ = ["Traceable", "TraceFn", "Recorder", "format_step", "parse_step"]


class Traceable(Protocol):
    def trace_fields(self) -> list[tuple[str, Any]]: ...


TraceFn = Callable[[str, Any], None]


def format_step(i: int, rule: str, state: Traceable) -> str:
    fields = " ".join(f"{name}={value}" for name, value in state.trace_fields())
    return f"STEP {i} {rule} {fields}"


def parse_step(line: str) -> tuple[int, str, dict[str, str]]:
    """Inverse of format_step; values are returned as strings."""
    parts = line.split()
    if len(parts) < 3 or parts[0] != "STEP" or parts[2] not in ("A", "B"):
        raise ValueError(f"not a trace line: {line!r}")
    fields = dict(p.split("=", 1) for p in parts[3:])
    return int(parts[1]), parts[2], fields


@dataclass
class Recorder:
    """Trace sink that keeps every (rule, state) pair."""

    steps: list[tuple[str, Any]] = field(default_factory=list)

    def __call__(self, rule: str, state: Any) -> None:
        self.steps.append((rule, state))

    @property
    def rules(self) -> str:
        return "".join(rule for rule, _ in self.steps)

    def before_b(self) -> list[Any]:
        """States on which Rule B fired, i.e. the end of each digit group."""
        return [state for rule, state in self.steps if rule == "B"]

    def lines(self) -> list[str]:
        return [format_step(i, rule, s) for i, (rule, s) in enumerate(self.steps, 1)]
