"""One JSON report shape shared by every command and certifier."""

import json
from dataclasses import dataclass
from typing import Any, Tuple

from .matrix import Matrix

REPORT_KEYS = (
    "command", "property", "verdict", "method", "seed", "n", "field", "dim",
    "is_linear", "bound", "refined_bound", "refined_bound_applicable",
    "bound_satisfied", "counterexample", "notes", "details",
)

_nullable_int = {"type": ["integer", "null"]}
_nullable_bool = {"type": ["boolean", "null"]}

REPORT_SCHEMA = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "type": "object",
    "additionalProperties": False,
    "required": list(REPORT_KEYS),
    "properties": {
        "command": {"type": "string"},
        "property": {"type": ["string", "null"]},
        "verdict": {"type": "string"},
        "method": {"type": ["string", "null"]},
        "seed": {"type": "integer"},
        "n": _nullable_int,
        "field": {"type": ["string", "null"]},
        "dim": _nullable_int,
        "is_linear": _nullable_bool,
        "bound": _nullable_int,
        "refined_bound": _nullable_int,
        "refined_bound_applicable": {"type": "boolean"},
        "bound_satisfied": _nullable_bool,
        "counterexample": {
            "oneOf": [
                {"type": "null"},
                {
                    "type": "object",
                    "required": ["point", "matrix"],
                    "properties": {
                        "point": {"type": "array", "items": {"type": "string"}},
                        "matrix": {
                            "type": "object",
                            "required": ["field", "n", "entries"],
                        },
                        "reason": {"type": "string"},
                    },
                },
            ]
        },
        "notes": {"type": "array", "items": {"type": "string"}},
        "details": {"type": "object"},
    },
}


def fmt_scalar(x):
    """Scalars print in their JSON literal form ("3/4", "1+2i", "2 mod 5")."""
    return str(x)


@dataclass(frozen=True)
class Counterexample:
    point: Tuple[Any, ...]
    matrix: Matrix
    reason: str = ""

    def to_json(self):
        out = {"point": [fmt_scalar(c) for c in self.point], "matrix": self.matrix.to_json()}
        if self.reason:
            out["reason"] = self.reason
        return out


def make_report(command, verdict, **fields):
    report = dict.fromkeys(REPORT_KEYS)
    report.update(command=command, verdict=verdict, seed=0,
                  refined_bound_applicable=False, notes=[], details={})
    unknown = set(fields) - set(REPORT_KEYS)
    if unknown:
        raise KeyError("unknown report keys %s" % sorted(unknown))
    report.update({k: v for k, v in fields.items() if v is not None})
    if isinstance(report["counterexample"], Counterexample):
        report["counterexample"] = report["counterexample"].to_json()
    return report


def dumps(report):
    return json.dumps(report, sort_keys=True, indent=2)
