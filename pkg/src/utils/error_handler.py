"""
Filename: error_handler.py
Created Date: 2026-10-18
Description: Error handling module for coxcheck. This module re-exports the
exception hierarchy and centralizes the mapping of errors to command-line
feedback and exit codes.
"""

import sys

from colorama import Fore

from src.utils.exceptions import (
    CalibrationError,
    ConfigError,
    CoxCheckError,
    CriterionError,
    DiophantineError,
    OracleError,
    ValidationError,
)
from src.utils.logger import get_logger, log_exception

__all__ = [
    "CalibrationError",
    "ConfigError",
    "CoxCheckError",
    "CriterionError",
    "DiophantineError",
    "OracleError",
    "ValidationError",
    "exit_code_for",
    "handle_cli_error",
]

logger = get_logger("coxcheck.errors")

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3


# Error Handlers


def exit_code_for(error: BaseException) -> int:
    """Map an exception to the command-line exit code."""
    if isinstance(error, ValidationError):
        return EXIT_USAGE
    return EXIT_INTERNAL


def handle_cli_error(error: BaseException) -> int:
    """Report an error on stderr and return the exit code to use"""
    code = exit_code_for(error)
    message = getattr(error, "user_message", None) or str(error) or error.__class__.__name__

    if code == EXIT_USAGE:
        logger.debug(f"Rejected input: {message}")
    else:
        if isinstance(error, CoxCheckError):
            logger.error(f"{error.__class__.__name__}: {message}")
        else:
            log_exception(logger, error, "command")

    print(f"{Fore.RED}❌ Error: {message}", file=sys.stderr)
    if isinstance(error, CalibrationError) and error.alternatives:
        print(f"{Fore.YELLOW}Alternative counts at bound {error.bound}:", file=sys.stderr)
        for name, count in sorted(error.alternatives.items()):
            print(f"{Fore.YELLOW}  {name}: {count}", file=sys.stderr)
    return code
