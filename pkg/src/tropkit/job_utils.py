# Copyright (C) 2024-2026 by the tropkit developers
# License: GNU General Public License v3.0 (see LICENSE file for details)

"""
Worker pool for independent per-cell and per-degree computations.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, TypeVar

from config import config
from constants import DEFAULT_JOBS
from debug import get_logger

logger = get_logger(__file__)

T = TypeVar("T")
R = TypeVar("R")


def resolve_jobs(jobs: int | None = None) -> int:
    """Explicit value first, then the `tropkit.jobs` setting."""
    if jobs is None:
        jobs = config.setting("tropkit.jobs", DEFAULT_JOBS)
    return max(1, int(jobs))


def parallel_map(func: Callable[[T], R], items: Iterable[T], jobs: int | None = None) -> list[R]:
    """
    Apply `func` to every item; results keep the order of `items`.

    The first exception raised by a worker is re-raised in the caller.
    """
    items = list(items)
    jobs = resolve_jobs(jobs)
    if jobs == 1 or len(items) < 2:
        return [func(item) for item in items]
    logger.debug("Running %d tasks on %d workers", len(items), jobs)
    with ThreadPoolExecutor(max_workers=jobs, thread_name_prefix="tropkit") as executor:
        return list(executor.map(func, items))
