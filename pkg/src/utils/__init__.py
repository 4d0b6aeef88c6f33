"""
Filename: __init__.py
Created Date: 2026-10-18
Description: Utils package initialization.
"""

from colorama import init as init_colorama


def init_utils():
    """Initialize utility modules"""
    # Initialize colorama for cross-platform colored output
    init_colorama(autoreset=True)

    from .error_handler import (
        CoxCheckError,
        ConfigError,
        ValidationError,
        handle_cli_error,
    )

    return {
        'CoxCheckError': CoxCheckError,
        'ConfigError': ConfigError,
        'ValidationError': ValidationError,
        'handle_cli_error': handle_cli_error,
    }


__all__ = ['init_utils']
