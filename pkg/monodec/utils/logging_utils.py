"""Logging utilities for monodec."""

import logging
import os
import sys
from typing import Optional


def setup_logging(level: Optional[str] = None, log_file: Optional[str] = None) -> None:
    """Configure logging for the CLI.

    Console messages go to stderr so that machine-readable reports on stdout stay clean.
    The level falls back to MONODEC_LOG_LEVEL, then WARNING.
    """
    level = (level or os.getenv("MONODEC_LOG_LEVEL") or "WARNING").upper()
    numeric_level = getattr(logging, level, logging.WARNING)

    root_logger = logging.getLogger()
    root_logger.setLevel(logging.DEBUG if log_file else numeric_level)

    # Clear existing handlers to avoid duplication
    root_logger.handlers.clear()

    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setFormatter(logging.Formatter("%(message)s"))
    console_handler.setLevel(numeric_level)
    root_logger.addHandler(console_handler)

    if log_file:
        log_dir = os.path.dirname(os.path.abspath(log_file))
        os.makedirs(log_dir, exist_ok=True)
        file_handler = logging.FileHandler(log_file, mode="a", encoding="utf-8")
        file_handler.setFormatter(
            logging.Formatter("%(asctime)s - %(levelname)s - %(name)s:%(lineno)s - %(message)s")
        )
        file_handler.setLevel(logging.DEBUG)
        root_logger.addHandler(file_handler)
