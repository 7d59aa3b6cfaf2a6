# Copyright (C) 2024-2026 by the tropkit developers
# License: GNU General Public License v3.0 (see LICENSE file for details)

"""
Checks on matroids and their Chow rings: hard Lefschetz, Hodge-Riemann,
Poincare duality and log-concavity.
"""

from __future__ import annotations

from base_check import BaseCheck
from chow_ring import ChowElement, GradedChowRing, ample_default, check_hard_lefschetz, check_hodge_riemann, check_poincare_duality
from job_utils import parallel_map
from matroid import Matroid, check_log_concavity
from report_utils import FAIL, PASS, Report
from debug import get_logger

logger = get_logger(__file__)


def lefschetz_degrees(ring: GradedChowRing, degrees: list[int] | None) -> list[int]:
    return list(range(ring.r // 2 + 1)) if degrees is None else list(degrees)


class HardLefschetzCheck(BaseCheck):
    check_id = "hl"
    subject_kind = "ring"

    def run(self, subject: GradedChowRing, element: ChowElement | None = None, degrees: list[int] | None = None, jobs: int | None = None, **_options) -> Report:
        if subject.r == 0:
            return Report(self.check_id, PASS, details={"vacuous": True, "degrees": []})
        element = element or ample_default(subject)
        degrees = lefschetz_degrees(subject, degrees)
        results = parallel_map(lambda p: {"p": p, **check_hard_lefschetz(subject, element, p)}, degrees, jobs)
        failing = [r for r in results if not r["is_iso"]]
        if failing:
            return Report(self.check_id, FAIL, witness=failing, details={"degrees": results})
        return Report(self.check_id, PASS, details={"degrees": results})


class HodgeRiemannCheck(BaseCheck):
    check_id = "hr"
    subject_kind = "ring"

    def run(self, subject: GradedChowRing, element: ChowElement | None = None, degrees: list[int] | None = None, jobs: int | None = None, **_options) -> Report:
        if subject.r == 0:
            return Report(self.check_id, PASS, details={"vacuous": True, "degrees": []})
        element = element or ample_default(subject)
        degrees = lefschetz_degrees(subject, degrees)
        results = parallel_map(lambda p: {"p": p, **check_hodge_riemann(subject, element, p)}, degrees, jobs)
        failing = [{"p": r["p"], "signature": r["signature"], "pivots": r["pivots"]} for r in results if not r["holds"]]
        if failing:
            return Report(self.check_id, FAIL, witness=failing, details={"degrees": results})
        return Report(self.check_id, PASS, details={"degrees": results})


class PoincareCheck(BaseCheck):
    check_id = "poincare"
    subject_kind = "ring"

    def run(self, subject: GradedChowRing, jobs: int | None = None, **_options) -> Report:
        results = parallel_map(lambda p: {"p": p, **check_poincare_duality(subject, p)}, range(subject.r + 1), jobs)
        failing = [r for r in results if not r["holds"]]
        if failing:
            return Report(self.check_id, FAIL, witness=failing, details={"degrees": results})
        return Report(self.check_id, PASS, details={"degrees": results})


class LogConcaveCheck(BaseCheck):
    check_id = "logconcave"
    subject_kind = "matroid"

    def run(self, subject: Matroid, **_options) -> Report:
        whitney = check_log_concavity(subject)
        reduced = check_log_concavity(subject, reduced=True) if subject.is_loopless() and subject.rank > 0 else None
        details = {"whitney": whitney, "reduced": reduced}
        failing = {}
        if not whitney["holds"]:
            failing["whitney"] = whitney["violations"]
        if reduced is not None and not reduced["holds"]:
            failing["reduced"] = reduced["violations"]
        if failing:
            return Report(self.check_id, FAIL, witness=failing, details=details)
        return Report(self.check_id, PASS, details=details)
