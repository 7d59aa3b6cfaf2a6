# Copyright (C) 2024-2026 by the tropkit developers
# License: GNU General Public License v3.0 (see LICENSE file for details)

import json
import os
import sys

import pytest

SRC_DIR = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "src", "tropkit")
if SRC_DIR not in sys.path:
    sys.path.insert(0, SRC_DIR)

from catalog_manager import CatalogManager  # noqa: E402  pylint: disable=wrong-import-position
from chow_ring import build_chow_ring  # noqa: E402  pylint: disable=wrong-import-position
from file_formats import parse_complex, parse_matroid  # noqa: E402  pylint: disable=wrong-import-position


def builtin_matroid(entry_id):
    return parse_matroid(CatalogManager().get_data(entry_id))


def builtin_complex(entry_id):
    return parse_complex(CatalogManager().get_data(entry_id))


@pytest.fixture
def u23():
    return builtin_matroid("U23")


@pytest.fixture
def u34():
    return builtin_matroid("U34")


@pytest.fixture
def u23_ring(u23):
    return build_chow_ring(u23)


@pytest.fixture
def u34_ring(u34):
    return build_chow_ring(u34)


@pytest.fixture
def tropical_line():
    return builtin_complex("tropical_line")


@pytest.fixture
def cross():
    return builtin_complex("cross")


@pytest.fixture
def interval():
    return builtin_complex("interval")


@pytest.fixture
def point():
    return builtin_complex("point")


@pytest.fixture
def write_json_file(tmp_path):
    """Write data to a JSON file under tmp_path and return its path as str."""
    def write(name, data):
        path = tmp_path / name
        path.write_text(json.dumps(data), encoding="utf-8")
        return str(path)
    return write
