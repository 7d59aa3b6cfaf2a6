# Copyright (C) 2024-2026 by the tropkit developers
# License: GNU General Public License v3.0 (see LICENSE file for details)

import os
import sys

# modules import each other by bare name
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from main import main  # noqa: E402  pylint: disable=wrong-import-position

sys.exit(main())
