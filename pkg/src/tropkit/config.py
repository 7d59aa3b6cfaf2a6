# Copyright (C) 2024-2026 by the tropkit developers
# License: GNU General Public License v3.0 (see LICENSE file for details)

"""
Configuration Management for tropkit

This module loads settings from a text file (`settings.txt`). It parses
key-value pairs, organizes them into a hierarchical namespace, and casts the
values to Python literals (int, bool, list, str).

The configuration is accessed through the singleton `config` object:

    config.tropkit.debug_log_level.value   -> "INFO"
    config.tropkit.jobs.value              -> 4

Key features:
- Hierarchical configuration using dot notation.
- Automatic type casting for common Python literals.
- A `ValueWrapper` class exposing the raw value via `.value`.
- A `_MissingConfigValue` fallback for undefined settings, so lookups on
  missing paths never raise.
- `setting()` for a lookup with an explicit default.
- Automatic loading of `~/.config/tropkit/settings.txt` if present.
"""

import ast
import os
import sys


DEFAULT_CONFIG_FILE = os.path.join(os.path.expanduser("~"), ".config", "tropkit", "settings.txt")


class ValueWrapper:
    """
    A wrapper class for configuration values.

    Holds the parsed value; `.value` is the primary accessor.
    """
    def __init__(self, value):
        self.value = value

    def __repr__(self):
        return f"<ValueWrapper value={self.value!r}>"

    def __str__(self):
        return str(self.value)

    def __int__(self):
        return int(self.value)

    def __bool__(self):
        return bool(self.value)


class _MissingConfigValue:
    """
    Stand-in for an undefined setting.

    `.value` is None, any attribute access returns the object itself, and it
    is falsy, so `config.a.b.c.value` is safe on any path.
    """
    value = None

    def __getattr__(self, key):
        return self

    def __bool__(self):
        return False

    def __repr__(self):
        return "None"


class ConfigNamespace:
    """
    A namespace for hierarchical settings with attribute-style access.
    Unknown keys yield a `_MissingConfigValue`.
    """
    def __init__(self):
        self.__dict__ = {}

    def __getitem__(self, key):
        return self.__dict__[key]

    def __setitem__(self, key, value):
        self.__dict__[key] = value

    def __getattr__(self, key):
        if key in self.__dict__:
            return self.__dict__[key]
        return _MissingConfigValue()

    def __setattr__(self, key, value):
        if key == "_ConfigNamespace__dict__":
            super().__setattr__(key, value)
        else:
            self.__dict__[key] = value

    def __repr__(self):
        return repr(self.__dict__)


class _Config(ConfigNamespace):
    """
    The main configuration class: loads and parses settings files.
    Used as a singleton.
    """
    def load_file(self, filename):
        """
        Load and parse a configuration file.

        Args:
            filename (str): The path to the configuration file.

        Raises:
            FileNotFoundError: If the specified file does not exist.
        """
        if not os.path.exists(filename):
            raise FileNotFoundError(f"Config file not found: {filename}")

        with open(filename, 'r', encoding="utf-8") as f:
            for lineno, line in enumerate(f, 1):
                line = line.split("#", 1)[0].strip()
                if not line:
                    continue
                if '=' not in line:
                    print(f"Skipping line {lineno}: invalid format", file=sys.stderr)
                    continue

                key_path, value = [s.strip() for s in line.split('=', 1)]
                if key_path.startswith("config."):
                    key_path = key_path[len("config."):]

                keys = key_path.split('.')
                current = self
                for key in keys[:-1]:
                    if not isinstance(getattr(current, key), ConfigNamespace):
                        setattr(current, key, ConfigNamespace())
                    current = getattr(current, key)

                setattr(current, keys[-1], ValueWrapper(self._auto_cast(value)))

    def setting(self, key_path, default=None):
        """
        Look up a dotted key path and fall back to `default` when unset.

        Args:
            key_path (str): e.g. "tropkit.jobs"
            default: value returned for missing settings

        Returns:
            The configured value or `default`.
        """
        current = self
        for key in key_path.split('.'):
            current = getattr(current, key)
        value = getattr(current, "value", None)
        return default if value is None else value

    @staticmethod
    def _auto_cast(value):
        """
        Cast a string value to a Python literal.

        Tries `ast.literal_eval` first, then a comma-separated list, and
        finally returns the original string.
        """
        value = value.strip()
        try:
            return ast.literal_eval(value)
        except (ValueError, SyntaxError):
            pass
        if ',' in value:
            return [_Config._auto_cast(v.strip()) for v in value.split(',')]
        return value


# Singleton instance of the configuration manager.
config = _Config()

if os.path.exists(DEFAULT_CONFIG_FILE):
    try:
        config.load_file(DEFAULT_CONFIG_FILE)
    except Exception as e:
        print(f"Warning: Failed to load config from default file: {e}", file=sys.stderr)
