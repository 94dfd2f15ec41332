# utils/logging_setup.py
# loguru sink configuration shared by the CLI and the tests

import sys
from typing import Optional

from loguru import logger

from config.settings import get_settings

LOG_FORMAT = "<green>{time:HH:mm:ss}</green> | <level>{level: <8}</level> | {name}:{function} - {message}"


def _stderr_sink(message: str) -> None:
    # resolved per write so a swapped sys.stderr (click test runner) is honoured
    sys.stderr.write(message)


def configure_logging(level: Optional[str] = None) -> None:
    """
    Route all log records to stderr

    Args:
        level: Minimum level; defaults to the configured log level
    """
    logger.remove()
    logger.add(
        _stderr_sink,
        level=(level or get_settings().log_level).upper(),
        format=LOG_FORMAT,
        colorize=sys.stderr.isatty(),
    )
