# Copyright (C) 2024-2026 by the tropkit developers
# License: GNU General Public License v3.0 (see LICENSE file for details)

"""
Check Manager
Registry of the checks the command line can run by id
"""
from __future__ import annotations

from typing import Any

from base_check import BaseCheck
from complex_checks import BalancingCheck, QSmoothCheck
from errors import InvalidParameters
from kahler_checks import HardLefschetzCheck, HodgeRiemannCheck, LogConcaveCheck, PoincareCheck
from report_utils import Report
from debug import get_logger

logger = get_logger(__file__)


class CheckManager:
    """Maps check ids to check classes and runs them in the requested order"""

    def __init__(self):
        self.check_ids: dict[str, type[BaseCheck]] = {
            'balancing': BalancingCheck,
            'qsmooth': QSmoothCheck,
            'hl': HardLefschetzCheck,
            'hr': HodgeRiemannCheck,
            'logconcave': LogConcaveCheck,
            'poincare': PoincareCheck,
        }

    def parse_check_list(self, spec: str, allowed_kinds: tuple[str, ...]) -> list[str]:
        """
        Split "a,b" into check ids.

        Raises:
            InvalidParameters: unknown id, or a check for another kind of subject
        """
        check_ids = [s.strip() for s in spec.split(",") if s.strip()]
        if not check_ids:
            raise InvalidParameters("No checks requested")
        for check_id in check_ids:
            if check_id not in self.check_ids:
                raise InvalidParameters(f"Unknown check '{check_id}', available: {', '.join(self.check_ids)}", witness={"check": check_id})
            if self.check_ids[check_id].subject_kind not in allowed_kinds:
                raise InvalidParameters(f"Check '{check_id}' does not apply here", witness={"check": check_id})
        return check_ids

    def run(self, check_id: str, subject: Any, timing: bool = False, **options) -> Report:
        if check_id not in self.check_ids:
            raise InvalidParameters(f"Unknown check '{check_id}'", witness={"check": check_id})
        check = self.check_ids[check_id]()
        return check.execute(subject, timing=timing, **options)

    def run_all(self, check_ids: list[str], subject: Any, timing: bool = False, **options) -> list[Report]:
        return [self.run(check_id, subject, timing=timing, **options) for check_id in check_ids]
