"""
Filename: wps.py
Created Date: 2026-10-18
Description: Weighted projective plane data models.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Tuple

from ..algebra.core import format_rational
from ..utils.error_handler import ValidationError
from ..utils.validation import require_coprime


def _require_positive_coprime(values: Tuple[int, int, int], label: str):
    for value in values:
        if isinstance(value, bool) or not isinstance(value, int) or value < 1:
            raise ValidationError(f"{label} must be positive integers, got {values}")
    require_coprime(*values, label=label)


@dataclass(frozen=True)
class Weights:
    """Ordered weights (a, b, c) of P(a, b, c)"""
    a: int
    b: int
    c: int

    def __post_init__(self):
        _require_positive_coprime(self.as_tuple(), "weights")

    def as_tuple(self) -> Tuple[int, int, int]:
        return (self.a, self.b, self.c)

    def canonical(self) -> Tuple[int, int, int]:
        return tuple(sorted(self.as_tuple()))

    def __str__(self) -> str:
        return f"P({self.a}, {self.b}, {self.c})"


@dataclass(frozen=True)
class Relation:
    """Relation (e, f, -g) meaning a·e + b·f = c·g"""
    e: int
    f: int
    g: int

    def __post_init__(self):
        _require_positive_coprime(self.as_tuple(), "relation")

    def as_tuple(self) -> Tuple[int, int, int]:
        return (self.e, self.f, self.g)

    def swapped(self) -> "Relation":
        return Relation(self.f, self.e, self.g)

    def holds_for(self, weights: Weights) -> bool:
        return weights.a * self.e + weights.b * self.f == weights.c * self.g

    def __str__(self) -> str:
        return f"({self.e}, {self.f}, -{self.g})"


@dataclass(frozen=True)
class WpsReport:
    """Outcome of the weighted projective plane criterion"""
    weights: Weights
    relation: Relation
    w: Fraction
    n: int
    delta_set: Tuple[int, ...]
    gamma_set: Tuple[int, ...]
    cond1: bool
    cond2_count_ok: bool
    cond2_mod_ok: bool
    passes: bool

    def to_dict(self) -> Dict:
        return {
            "a": self.weights.a,
            "b": self.weights.b,
            "c": self.weights.c,
            "e": self.relation.e,
            "f": self.relation.f,
            "g": self.relation.g,
            "w": format_rational(self.w),
            "n": self.n,
            "delta": list(self.delta_set),
            "gamma": list(self.gamma_set),
            "cond1": self.cond1,
            "cond2_count_ok": self.cond2_count_ok,
            "cond2_mod_ok": self.cond2_mod_ok,
            "passes": self.passes,
        }


@dataclass(frozen=True)
class PlaneRecord:
    """A qualifying plane with its passing orientation"""
    weights: Tuple[int, int, int]
    orientation: Weights
    relation: Relation
    report: WpsReport

    def to_dict(self) -> Dict:
        return {
            "weights": list(self.weights),
            "orientation": list(self.orientation.as_tuple()),
            "relation": list(self.relation.as_tuple()),
            "w": format_rational(self.report.w),
            "n": self.report.n,
        }
