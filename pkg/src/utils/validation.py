"""
Filename: validation.py
Created Date: 2026-10-18
Description: Input validation module.

This module provides small composable validators used at the boundaries of
the library: command-line arguments, configuration files for the moduli
checker and the preconditions of the algebraic services.
"""

from math import gcd
from typing import Any, Dict, List, Optional

from .error_handler import ValidationError


class Validator:
    """Base validator class"""

    def __init__(self, field_name: str):
        self.field_name = field_name

    def validate(self, value: Any) -> None:
        """Validate a value

        Args:
            value: Value to validate

        Raises:
            ValidationError: If validation fails
        """
        raise NotImplementedError


class RequiredValidator(Validator):
    """Validator for required fields"""

    def validate(self, value: Any) -> None:
        if value is None or (isinstance(value, str) and not value.strip()):
            raise ValidationError(
                f"Missing required field: {self.field_name}",
                f"The field {self.field_name} is required."
            )


class IntegerValidator(Validator):
    """Validator for exact integers (booleans are rejected)"""

    def validate(self, value: Any) -> None:
        if isinstance(value, bool) or not isinstance(value, int):
            raise ValidationError(
                f"Invalid type for {self.field_name}. Expected integer, got {type(value).__name__}",
                f"{self.field_name} must be an integer"
            )


class RangeValidator(Validator):
    """Validator for integer ranges"""

    def __init__(self, field_name: str, min_value: Optional[int] = None, max_value: Optional[int] = None):
        super().__init__(field_name)
        self.min_value = min_value
        self.max_value = max_value

    def validate(self, value: Any) -> None:
        IntegerValidator(self.field_name).validate(value)

        if self.min_value is not None and value < self.min_value:
            raise ValidationError(
                f"{self.field_name} must be at least {self.min_value}, got {value}",
                f"{self.field_name} is too low"
            )

        if self.max_value is not None and value > self.max_value:
            raise ValidationError(
                f"{self.field_name} must be at most {self.max_value}, got {value}",
                f"{self.field_name} is too high"
            )


class IntegerVectorValidator(Validator):
    """Validator for integer vectors of a fixed length"""

    def __init__(self, field_name: str, length: Optional[int] = None):
        super().__init__(field_name)
        self.length = length

    def validate(self, value: Any) -> None:
        if not isinstance(value, (list, tuple)):
            raise ValidationError(f"{self.field_name} must be a list of integers")
        for entry in value:
            IntegerValidator(f"{self.field_name} entry").validate(entry)
        if self.length is not None and len(value) != self.length:
            raise ValidationError(
                f"{self.field_name} has length {len(value)}, expected {self.length}",
                f"Dimension mismatch in {self.field_name}"
            )


def validate_data(data: Dict[str, Any], validators: Dict[str, List[Validator]]) -> None:
    """Validate data against a set of validators

    Args:
        data: Data to validate
        validators: Dictionary mapping field names to lists of validators

    Raises:
        ValidationError: If validation fails
    """
    for field_name, field_validators in validators.items():
        value = data.get(field_name)
        for validator in field_validators:
            validator.validate(value)


def require_positive(**values: int) -> None:
    """Raise unless every keyword value is an integer >= 1."""
    for name, value in values.items():
        RangeValidator(name, min_value=1).validate(value)


def require_coprime(*values: int, label: str = "weights") -> None:
    """Raise unless the gcd of the values is 1."""
    if gcd(*values) != 1:
        raise ValidationError(
            f"gcd{tuple(values)} = {gcd(*values)}; {label} must have gcd 1"
        )
