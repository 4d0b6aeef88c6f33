"""
Filename: moduli.py
Created Date: 2026-10-18
Description: Lattice configuration data models.

A configuration is a sublattice N' of N = Z^(n-3), given by a basis, together
with three rays u, v, w of the Losev-Manin fan and weights (a, b, c).
"""

from dataclasses import dataclass, field
from typing import Dict, Optional, Sequence, Tuple

from ..utils.error_handler import ValidationError
from ..utils.validation import (
    IntegerVectorValidator,
    RangeValidator,
    RequiredValidator,
    validate_data,
)
from .wps import Weights

Vector = Tuple[int, ...]


def is_ray(vector: Sequence[int]) -> bool:
    """True for nonzero 0/1 vectors and their negatives."""
    values = set(vector)
    if not any(vector):
        return False
    return values <= {0, 1} or values <= {0, -1}


@dataclass(frozen=True)
class Configuration:
    """Sublattice basis, three rays and their weights"""
    n: int
    basis: Tuple[Vector, ...]
    u: Vector
    v: Vector
    w: Vector
    weights: Weights

    def __post_init__(self):
        if isinstance(self.n, bool) or not isinstance(self.n, int) or self.n < 7:
            raise ValidationError(f"n must be an integer >= 7, got {self.n!r}")
        if len(self.basis) != self.n - 5:
            raise ValidationError(
                f"basis must hold n - 5 = {self.n - 5} vectors, got {len(self.basis)}"
            )
        dim = self.dimension
        for label, vector in [*((f"basis[{i}]", b) for i, b in enumerate(self.basis)),
                              ("u", self.u), ("v", self.v), ("w", self.w)]:
            if len(vector) != dim:
                raise ValidationError(f"{label} has length {len(vector)}, expected {dim}")
        for label, vector in (("u", self.u), ("v", self.v), ("w", self.w)):
            if not is_ray(vector):
                raise ValidationError(f"{label} = {list(vector)} is not a ray of the fan")

    @property
    def dimension(self) -> int:
        return self.n - 3

    @classmethod
    def from_dict(cls, data: Dict) -> "Configuration":
        validate_data(data, {
            "n": [RequiredValidator("n"), RangeValidator("n", min_value=7)],
            "basis": [RequiredValidator("basis")],
            "u": [IntegerVectorValidator("u")],
            "v": [IntegerVectorValidator("v")],
            "w": [IntegerVectorValidator("w")],
            "weights": [IntegerVectorValidator("weights", length=3)],
        })
        if not isinstance(data["basis"], list):
            raise ValidationError("basis must be a list of integer vectors")
        for i, vector in enumerate(data["basis"]):
            IntegerVectorValidator(f"basis[{i}]").validate(vector)
        try:
            return cls(
                n=data["n"],
                basis=tuple(tuple(int(x) for x in b) for b in data["basis"]),
                u=tuple(int(x) for x in data["u"]),
                v=tuple(int(x) for x in data["v"]),
                w=tuple(int(x) for x in data["w"]),
                weights=Weights(*data["weights"]),
            )
        except (KeyError, TypeError) as e:
            raise ValidationError(f"malformed configuration: {e}") from e

    def to_dict(self) -> Dict:
        return {
            "n": self.n,
            "basis": [list(b) for b in self.basis],
            "u": list(self.u),
            "v": list(self.v),
            "w": list(self.w),
            "weights": list(self.weights.as_tuple()),
        }


@dataclass(frozen=True)
class ConfigReport:
    """Hypothesis checks for one configuration"""
    basis_are_rays: bool
    rank_ok: bool
    saturated: bool
    quotient_generated: bool
    relation_holds: bool
    invariant_factors: Tuple[int, ...]
    coefficients: Optional[Tuple[int, ...]] = None

    @property
    def passes(self) -> bool:
        return (self.basis_are_rays and self.rank_ok and self.saturated
                and self.quotient_generated and self.relation_holds)

    def to_dict(self) -> Dict:
        return {
            "basis_are_rays": self.basis_are_rays,
            "rank_ok": self.rank_ok,
            "saturated": self.saturated,
            "quotient_generated": self.quotient_generated,
            "relation_holds": self.relation_holds,
            "invariant_factors": list(self.invariant_factors),
            "coefficients": None if self.coefficients is None else list(self.coefficients),
            "passes": self.passes,
        }


@dataclass(frozen=True)
class BuiltinReport:
    """Configuration checks plus the displayed identities of the n = 13 witness"""
    report: ConfigReport
    determinant: int
    w_identity: bool
    relation_identity: bool
    coefficients_match: bool
    ray_count: int
    expected_ray_count: int
    notes: Tuple[str, ...] = field(default=())

    @property
    def passes(self) -> bool:
        return (self.report.passes and self.determinant == 1 and self.w_identity
                and self.relation_identity and self.coefficients_match
                and self.ray_count == self.expected_ray_count)

    def to_dict(self) -> Dict:
        return {
            "configuration": self.report.to_dict(),
            "determinant": self.determinant,
            "w_identity": self.w_identity,
            "relation_identity": self.relation_identity,
            "coefficients_match": self.coefficients_match,
            "ray_count": self.ray_count,
            "expected_ray_count": self.expected_ray_count,
            "notes": list(self.notes),
            "passes": self.passes,
        }
