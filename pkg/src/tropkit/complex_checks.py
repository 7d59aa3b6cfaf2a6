# Copyright (C) 2024-2026 by the tropkit developers
# License: GNU General Public License v3.0 (see LICENSE file for details)

"""
Checks on weighted complexes: balancing and Q-smoothness in codimension one.
"""

from __future__ import annotations

from base_check import BaseCheck
from errors import NotBalanced
from report_utils import FAIL, PASS, WARN, Report
from tropical_checks import check_balancing, check_q_smooth_codim1
from weighted_complex import WeightedComplex


class BalancingCheck(BaseCheck):
    check_id = "balancing"
    subject_kind = "complex"

    def run(self, subject: WeightedComplex, jobs: int | None = None, **_options) -> Report:
        result = check_balancing(subject, jobs)
        if result["balanced"]:
            verdict = WARN if subject.warnings else PASS
            return Report(self.check_id, verdict, witness={"warnings": subject.warnings} if subject.warnings else None, details=result)
        failing = [{"cell": c["cell"], "defect": c["defect"]} for c in result["cells"] if not c["balanced"]]
        return Report(self.check_id, FAIL, witness=failing, details=result)


class QSmoothCheck(BaseCheck):
    check_id = "qsmooth"
    subject_kind = "complex"

    def run(self, subject: WeightedComplex, jobs: int | None = None, **_options) -> Report:
        try:
            result = check_q_smooth_codim1(subject, jobs)
        except NotBalanced as e:
            return Report(self.check_id, FAIL, witness=e.to_dict())
        if result["smooth"]:
            return Report(self.check_id, PASS, details=result)
        failing = [
            {"cell": c["cell"], "kernel_dim": c["kernel_dim"], "flags": c.get("flags", [])}
            for c in result["cells"] if not c["smooth"]
        ]
        return Report(self.check_id, FAIL, witness=failing, details=result)
