# Copyright (C) 2024-2026 by the tropkit developers
# License: GNU General Public License v3.0 (see LICENSE file for details)

MAX_GROUND_SET = 12
DEFAULT_JOBS = 1
GRAM_ENTRY_BOUND = 5
BUILTIN_PREFIX = "builtin:"

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INPUT_ERROR = 2
EXIT_INTERNAL_ERROR = 3
