# Copyright (C) 2024-2026 by the tropkit developers
# License: GNU General Public License v3.0 (see LICENSE file for details)

"""
Logger Configuration for tropkit

Log levels can be set per module through `debug_config.txt` (next to this
file), with a fallback to `config.tropkit.debug_log_level` and finally to
WARNING. Log records go to stderr; stdout carries the CLI reports.

`get_logger` is the entry point for obtaining a configured logger.
"""
import os
import sys
import logging
from version import ID
from config import config


log_levels = {
    "CRITICAL": logging.CRITICAL,
    "ERROR": logging.ERROR,
    "WARNING": logging.WARNING,
    "INFO": logging.INFO,
    "DEBUG": logging.DEBUG,
}
format_string = (
    ID + ": " + "%(levelname)s: %(filename)s: %(funcName)s:%(lineno)d: %(message)s"
)
DEFAULT_LOG_LEVEL = "WARNING"
_forced_level = None


def read_module_level(module_name, config_path=None):
    """
    Look up a module-specific level in debug_config.txt.

    Args:
        module_name (str): basename of the module, e.g. "matroid.py"
        config_path (str, optional): alternative config file

    Returns:
        str | None: the configured level name or None.
    """
    if config_path is None:
        config_path = os.path.join(os.path.dirname(__file__), "debug_config.txt")
    try:
        with open(config_path, "r", encoding="utf-8") as f:
            for line in f:
                line = line.strip()
                if not line or line.startswith("#") or ":" not in line:
                    continue
                mod, lvl = [x.strip() for x in line.split(":", 1)]
                if mod == module_name:
                    return lvl.strip('"')
    except OSError:
        return None
    return None


def get_logger(module_name=None, log_level=None):
    """
    Initializes and returns a logger with the tropkit configuration.

    The level is chosen in this order:
    1. The `log_level` argument (or a level forced through `set_log_level`).
    2. A module-specific level defined in `debug_config.txt`.
    3. `config.tropkit.debug_log_level`.
    4. WARNING.

    Args:
        module_name (str, optional): Module name or path; paths are reduced
                                     to their basename. Defaults to the ID.
        log_level (str, optional): Level name forced for this logger.

    Returns:
        logging.Logger: A configured logger instance.
    """
    if module_name is None:
        module_name = ID
    if isinstance(module_name, str) and (module_name.endswith('.py') or os.sep in module_name):
        module_name = os.path.basename(module_name)
    logger = logging.getLogger(module_name)
    logger.propagate = False
    while logger.handlers:
        logger.removeHandler(logger.handlers[0])
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter(format_string))

    desired_log_level = (
        log_level
        or _forced_level
        or read_module_level(module_name)
        or config.setting("tropkit.debug_log_level", DEFAULT_LOG_LEVEL)
    )
    level = log_levels.get(str(desired_log_level).upper(), logging.WARNING)
    logger.setLevel(level)
    handler.setLevel(level)
    logger.addHandler(handler)
    return logger


def set_log_level(level_name):
    """
    Force a level on every tropkit logger created so far and from now on
    (used by the CLI --log-level flag).
    """
    global _forced_level  # pylint: disable=global-statement
    _forced_level = level_name
    level = log_levels.get(str(level_name).upper(), logging.WARNING)
    for name in list(logging.root.manager.loggerDict):
        logger = logging.getLogger(name)
        if logger.handlers and logger.handlers[0].formatter and logger.handlers[0].formatter._fmt == format_string:  # pylint: disable=protected-access
            logger.setLevel(level)
            for handler in logger.handlers:
                handler.setLevel(level)
