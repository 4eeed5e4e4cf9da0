"""Logging set-up from the ``logging`` config section"""

import logging
import sys
from typing import Optional

from utils.config import Config, get_config

_configured = False


def setup_logging(config: Optional[Config] = None, level: Optional[str] = None) -> None:
    """Configure the root logger once per process

    Args:
        config: Config to read the ``logging`` section from (global one if None)
        level: Optional level name overriding the configured one
    """
    global _configured
    if _configured:
        return

    section = (config or get_config()).get_section("logging")
    root = logging.getLogger()
    root.setLevel(level or section.get("level", "WARNING"))
    formatter = logging.Formatter(section.get("format", "[%(levelname)s] %(message)s"))

    if section.get("console", True):
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(formatter)
        root.addHandler(handler)

    if section.get("file"):
        file_handler = logging.FileHandler(section["file"])
        file_handler.setFormatter(formatter)
        root.addHandler(file_handler)

    _configured = True
