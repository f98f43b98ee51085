"""Machine-readable output records.

JSON output is deterministic: keys are emitted in a fixed order at the top
level and sorted below it, floats carry 17 significant digits, integers are
exact, rationals are ``"p/q"`` strings and complex numbers are
``{"im": ..., "re": ...}`` objects. Non-finite floats become the strings
``"inf"``, ``"-inf"`` and ``"nan"``. The schema lives in
``schema/output_record.schema.json``.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Iterable, Sequence

__all__ = ["OutputRecord", "format_float", "to_json", "to_csv"]

FIELD_ORDER = ("command", "inputs", "outputs", "residuals", "provenance")


@dataclass
class OutputRecord:
    command: str
    inputs: dict[str, Any]
    outputs: dict[str, Any]
    provenance: str
    residuals: dict[str, Any] | None = None
    passed: bool | None = field(default=None, compare=False)

    def as_dict(self) -> dict[str, Any]:
        data = {
            "command": self.command,
            "inputs": self.inputs,
            "outputs": self.outputs,
            "provenance": self.provenance,
        }
        if self.residuals is not None:
            data["residuals"] = self.residuals
        if self.passed is not None:
            data["outputs"] = {**self.outputs, "passed": self.passed}
        return data

    def to_json(self) -> str:
        return to_json(self)


def format_float(x: float) -> str:
    if math.isnan(x):
        return '"nan"'
    if math.isinf(x):
        return '"inf"' if x > 0 else '"-inf"'
    text = format(x, ".17g")
    if not any(ch in text for ch in ".en"):
        text += ".0"
    return text


def _encode(value) -> str:
    if value is None:
        return "null"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return format_float(value)
    if isinstance(value, complex):
        return _encode({"re": value.real, "im": value.imag})
    if isinstance(value, Fraction):
        return json.dumps(f"{value.numerator}/{value.denominator}")
    if isinstance(value, str):
        return json.dumps(value)
    if isinstance(value, dict):
        items = sorted(value.items())
        return "{" + ", ".join(f"{json.dumps(str(k))}: {_encode(v)}" for k, v in items) + "}"
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(_encode(v) for v in value) + "]"
    if hasattr(value, "item"):  # numpy scalar
        return _encode(value.item())
    raise TypeError(f"cannot serialize {type(value).__name__}")


def to_json(record: OutputRecord) -> str:
    data = record.as_dict()
    parts = [f"{json.dumps(k)}: {_encode(data[k])}" for k in FIELD_ORDER if k in data]
    return "{" + ", ".join(parts) + "}"


def to_csv(header: Sequence[str], rows: Iterable[Sequence]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow(
            [format_float(v).strip('"') if isinstance(v, float) else v for v in row]
        )
    return buf.getvalue()
