"""
Filename: exceptions.py
Created Date: 2026-10-18
Description: Exception hierarchy for coxcheck.

Imports nothing from the rest of the package; settings.py raises ConfigError
from here while loading.
"""

from typing import Dict, Optional


class CoxCheckError(Exception):
    """Base exception class for coxcheck errors"""
    def __init__(self, message: str, user_message: Optional[str] = None):
        super().__init__(message)
        self.user_message = user_message or message


class ConfigError(CoxCheckError):
    """Configuration related errors"""
    pass


class ValidationError(CoxCheckError):
    """Invalid input or violated precondition"""
    pass


class CriterionError(ValidationError):
    """Raised when an operation needs a passing triangle and got a failing one"""
    pass


class DiophantineError(CoxCheckError):
    """Raised when the auxiliary bridge vector has no integral solution"""
    pass


class OracleError(CoxCheckError):
    """Jet oracle could not certify its answer"""
    pass


class CalibrationError(CoxCheckError):
    """Survey count differs from a published count"""
    def __init__(self, message: str, bound: int, expected: int, found: int,
                 alternatives: Optional[Dict[str, int]] = None):
        super().__init__(message)
        self.bound = bound
        self.expected = expected
        self.found = found
        self.alternatives = dict(alternatives or {})
