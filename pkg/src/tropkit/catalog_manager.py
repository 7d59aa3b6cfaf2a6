# Copyright (C) 2024-2026 by the tropkit developers
# License: GNU General Public License v3.0 (see LICENSE file for details)

from __future__ import annotations

import os
import json
from typing import Any

from errors import ParseError
from debug import get_logger

logger = get_logger(__file__)


class CatalogManager:
    """Loader for the built-in matroids and complexes under catalog/"""

    def __init__(self, catalog_dir: str | None = None):
        self.catalog_dir = catalog_dir or os.path.join(os.path.dirname(__file__), 'catalog')

    def get_entries(self) -> list[dict[str, Any]]:
        """Get all catalog entries from their config.json files"""
        entries = []

        if not os.path.exists(self.catalog_dir):
            logger.error("Catalog directory not found: %s", self.catalog_dir)
            return entries

        for entry_id in os.listdir(self.catalog_dir):
            entry_path = os.path.join(self.catalog_dir, entry_id)
            # Skip files and hidden directories
            if not os.path.isdir(entry_path) or entry_id.startswith('_'):
                continue
            config_file = os.path.join(entry_path, 'config.json')
            try:
                with open(config_file, 'r', encoding='utf-8') as f:
                    config_data = json.load(f)
            except (OSError, json.JSONDecodeError) as e:
                logger.error("Error reading catalog entry %s: %s", entry_id, e)
                continue
            config_data['entry_id'] = entry_id
            entries.append(config_data)

        entries.sort(key=lambda x: (x.get('kind', ''), x.get('entry_id', '').lower()))
        return entries

    def get_entry(self, entry_id: str) -> dict[str, Any]:
        for entry in self.get_entries():
            if entry['entry_id'] == entry_id:
                return entry
        raise ParseError(f"Unknown built-in entry '{entry_id}'", witness={"entry": entry_id})

    def get_data(self, entry_id: str) -> Any:
        entry = self.get_entry(entry_id)
        logger.debug("Using built-in %s (%s)", entry_id, entry.get('title', ''))
        return entry['data']
