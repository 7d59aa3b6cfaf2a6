# Copyright (C) 2024-2026 by the tropkit developers
# License: GNU General Public License v3.0 (see LICENSE file for details)

from __future__ import annotations

from typing import Any

from report_utils import Report, timed
from debug import get_logger

logger = get_logger(__file__)


class BaseCheck:
    """Base class for all checks"""

    check_id = ""
    subject_kind = ""

    def __init__(self, name: str | None = None):
        self.name = name or self.check_id or self.__class__.__name__

    def run(self, subject: Any, **options) -> Report:
        """
        Evaluate the check on a subject (a matroid's Chow ring or a complex).
        Child classes implement the mathematics and build the Report.
        """
        raise NotImplementedError

    def execute(self, subject: Any, timing: bool = False, **options) -> Report:
        """Run the check; the elapsed time is attached only when `timing` is set."""
        logger.debug("Running %s on %s", self.name, subject)
        report, elapsed = timed(lambda: self.run(subject, **options))
        if timing:
            report.elapsed = elapsed
        logger.info("%s: %s", self.name, report.verdict)
        return report
