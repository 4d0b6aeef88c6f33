"""
Filename: logger.py
Created Date: 2026-10-18
Description: Logging for coxcheck.

Loggers are named coxcheck.<area>. Each gets up to three handlers: a rotating
general log, a rotating error log and a coloured console stream on stderr,
switched by the logging.* configuration keys. stdout carries command output
only.
"""

import logging
import os
import sys
from logging.handlers import RotatingFileHandler
from pathlib import Path

from colorama import Fore, Style, init

from ..config.settings import config
from ..definitions import ERROR_LOG_PATH, LOG_PATH

init(autoreset=True)

SUCCESS_LEVEL = 25  # between INFO and WARNING
logging.addLevelName(SUCCESS_LEVEL, 'SUCCESS')

FILE_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
MAX_LOG_BYTES = 1024 * 1024
LOG_BACKUPS = 5

# Checked top-down; the first threshold the record reaches wins.
LEVEL_COLORS = (
    (logging.ERROR, Fore.RED),
    (logging.WARNING, Fore.YELLOW),
    (SUCCESS_LEVEL, Fore.GREEN),
    (logging.INFO, Fore.BLUE),
    (logging.DEBUG, Fore.CYAN),
)


def _color_for(levelno: int) -> str:
    for threshold, color in LEVEL_COLORS:
        if levelno >= threshold:
            return color
    return ""


class ColoredFormatter(logging.Formatter):
    """Console formatter colouring the message by level"""

    def format(self, record):
        plain = record.msg
        color = _color_for(record.levelno)
        if color:
            record.msg = f"{color}{plain}{Style.RESET_ALL}"
        try:
            return super().format(record)
        finally:
            # file handlers see the same record afterwards
            record.msg = plain


class ColoredLogger(logging.Logger):
    """Logger with a success() level for passing checks"""

    def success(self, msg, *args, **kwargs):
        if self.isEnabledFor(SUCCESS_LEVEL):
            self._log(SUCCESS_LEVEL, msg, args, **kwargs)


def _logging_settings():
    settings = config.get("logging", {}) or {}
    return (
        bool(settings.get("toConsole", True)),
        bool(settings.get("toFile", True)),
        bool(settings.get("debug", False)),
    )


def _rotating_handler(path: str, level: int) -> RotatingFileHandler:
    handler = RotatingFileHandler(
        path, maxBytes=MAX_LOG_BYTES, backupCount=LOG_BACKUPS, encoding='utf-8'
    )
    handler.setLevel(level)
    handler.setFormatter(logging.Formatter(FILE_FORMAT))
    return handler


def _console_handler(level: int) -> logging.StreamHandler:
    handler = logging.StreamHandler(sys.stderr)
    handler.setLevel(level)
    handler.setFormatter(ColoredFormatter('%(message)s'))
    return handler


def get_logger(name: str) -> logging.Logger:
    """Return the named logger, attaching handlers on first use.

    Args:
        name: dotted logger name, e.g. "coxcheck.services.survey"

    Returns:
        logging.Logger: a ColoredLogger that does not propagate
    """
    logging.setLoggerClass(ColoredLogger)
    logger = logging.getLogger(name)
    if logger.handlers:
        return logger

    to_console, to_file, debug = _logging_settings()
    level = logging.DEBUG if debug else logging.INFO
    logger.setLevel(level)

    if to_file:
        Path(os.path.dirname(LOG_PATH)).mkdir(parents=True, exist_ok=True)
        logger.addHandler(_rotating_handler(LOG_PATH, level))
        logger.addHandler(_rotating_handler(ERROR_LOG_PATH, logging.ERROR))
    if to_console:
        logger.addHandler(_console_handler(level))
    if not logger.handlers:
        logger.addHandler(logging.NullHandler())

    logger.propagate = False
    return logger


def log_exception(logger: logging.Logger, e: Exception, context: str = None):
    """Log an exception with its traceback, prefixed by where it happened."""
    where = f" in {context}" if context else ""
    logger.error(f"❌ Error{where}: {e}", exc_info=True)
