# Copyright (C) 2024-2026 by the tropkit developers
# License: GNU General Public License v3.0 (see LICENSE file for details)

"""
Check reports: a check name, a verdict and the witnesses behind it,
rendered as text for people or as JSON for test harnesses.
"""

from __future__ import annotations

import json
import time
from fractions import Fraction
from typing import Any, Callable

import numpy as np

from constants import EXIT_CHECK_FAILED, EXIT_OK
from errors import InternalInconsistency
from debug import get_logger

logger = get_logger(__file__)

PASS = "pass"
FAIL = "fail"
WARN = "warn"
VERDICTS = (PASS, FAIL, WARN)


def jsonable(value: Any) -> Any:
    """Recursively convert results to JSON types; rationals become "a/b" strings."""
    if hasattr(value, "to_dict"):
        return jsonable(value.to_dict())
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (frozenset, set)):
        return sorted(jsonable(v) for v in value)
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    if isinstance(value, np.ndarray):
        return jsonable(value.tolist())
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, Fraction):
        return str(value)
    return str(value)


class Report:
    """
    Outcome of one check.

    Attributes:
        check: check id, e.g. "balancing"
        verdict: pass, fail or warn
        witness: evidence for the verdict; required for fail
        details: full result of the underlying library call
        elapsed: seconds, only when timing was requested
    """

    def __init__(self, check: str, verdict: str, witness: Any = None, details: Any = None, elapsed: float | None = None):
        if verdict not in VERDICTS:
            raise ValueError(f"Unknown verdict {verdict!r}")
        if verdict == FAIL and witness is None:
            raise InternalInconsistency(f"Failed check {check} has no witness")
        self.check = check
        self.verdict = verdict
        self.witness = witness
        self.details = details
        self.elapsed = elapsed

    @property
    def failed(self) -> bool:
        return self.verdict == FAIL

    def to_dict(self) -> dict:
        result = {"check": self.check, "verdict": self.verdict}
        if self.witness is not None:
            result["witness"] = jsonable(self.witness)
        if self.details is not None:
            result["details"] = jsonable(self.details)
        if self.elapsed is not None:
            result["elapsed"] = round(self.elapsed, 6)
        return result

    def to_text(self) -> str:
        line = f"{self.check}: {self.verdict.upper()}"
        if self.elapsed is not None:
            line += f" ({self.elapsed:.3f}s)"
        lines = [line]
        if self.witness is not None:
            lines.append(f"  witness: {json.dumps(jsonable(self.witness), sort_keys=True)}")
        return "\n".join(lines)

    def __repr__(self) -> str:
        return f"<Report {self.check}={self.verdict}>"


def timed(func: Callable[[], Any]) -> tuple[Any, float]:
    start = time.perf_counter()
    result = func()
    return result, time.perf_counter() - start


def exit_code(reports: list[Report]) -> int:
    return EXIT_CHECK_FAILED if any(r.failed for r in reports) else EXIT_OK


def render(reports: list[Report], data: Any = None, as_json: bool = False) -> str:
    """
    Text: one block per report, then the data as indented JSON.
    JSON: {"reports": [...], "result": data} with sorted keys.
    """
    if as_json:
        payload = {"reports": [r.to_dict() for r in reports]}
        if data is not None:
            payload["result"] = jsonable(data)
        return json.dumps(payload, sort_keys=True, indent=2)
    blocks = [r.to_text() for r in reports]
    if data is not None:
        blocks.append(json.dumps(jsonable(data), sort_keys=True, indent=2))
    return "\n".join(blocks)


def dump_error(error) -> str:
    """JSON payload for an input error (exit code 2)."""
    return json.dumps({"error": jsonable(error.to_dict())}, sort_keys=True, indent=2)
