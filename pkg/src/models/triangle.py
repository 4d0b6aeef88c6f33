"""
Filename: triangle.py
Created Date: 2026-10-18
Description: Triangle data models.

A triangle is fixed by the slopes s1 < s2 < s3 of its sides: the origin is a
vertex, the top side y = s2·x + 1 passes through (0, 1), and the other two
vertices lie on the lines y = s1·x and y = s3·x.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Tuple

from ..algebra.core import format_rational
from ..utils.error_handler import ValidationError


@dataclass(frozen=True)
class Triangle:
    """Triangle given by three rational slopes"""
    s1: Fraction
    s2: Fraction
    s3: Fraction

    def __post_init__(self):
        if not self.s1 < self.s2 < self.s3:
            raise ValidationError(
                f"slopes must satisfy s1 < s2 < s3, got "
                f"({format_rational(self.s1)}, {format_rational(self.s2)}, {format_rational(self.s3)})"
            )

    @property
    def slopes(self) -> Tuple[Fraction, Fraction, Fraction]:
        return (self.s1, self.s2, self.s3)

    @property
    def x1(self) -> Fraction:
        return 1 / (self.s1 - self.s2)

    @property
    def y1(self) -> Fraction:
        return self.s1 * self.x1

    @property
    def x2(self) -> Fraction:
        return 1 / (self.s3 - self.s2)

    @property
    def y2(self) -> Fraction:
        return self.s3 * self.x2

    @property
    def left_vertex(self) -> Tuple[Fraction, Fraction]:
        return (self.x1, self.y1)

    @property
    def right_vertex(self) -> Tuple[Fraction, Fraction]:
        return (self.x2, self.y2)

    def to_dict(self) -> Dict:
        return {
            "slopes": [format_rational(s) for s in self.slopes],
            "left_vertex": [format_rational(c) for c in self.left_vertex],
            "right_vertex": [format_rational(c) for c in self.right_vertex],
        }


@dataclass(frozen=True)
class TriangleReport:
    """Outcome of the two-condition triangle criterion"""
    w: Fraction
    n: int
    cond1: bool
    cond2_count: int
    cond2_count_ok: bool
    cond2_nonintegral_ok: bool
    passes: bool

    def to_dict(self) -> Dict:
        return {
            "w": format_rational(self.w),
            "n": self.n,
            "cond1": self.cond1,
            "cond2_count": self.cond2_count,
            "cond2_count_ok": self.cond2_count_ok,
            "cond2_nonintegral_ok": self.cond2_nonintegral_ok,
            "passes": self.passes,
        }


@dataclass(frozen=True)
class LatticeSample:
    """Lattice points of the scaled triangle m·Δ"""
    m: int
    W: int
    points: Tuple[Tuple[int, int], ...]
    _columns: Dict[int, int] = field(default_factory=dict, init=False, repr=False, compare=False)

    def __post_init__(self):
        for x, _ in self.points:
            self._columns[x] = self._columns.get(x, 0) + 1

    @property
    def columns(self) -> Dict[int, int]:
        return dict(self._columns)

    def count_in_column(self, x: int) -> int:
        return self._columns.get(x, 0)

    def __len__(self) -> int:
        return len(self.points)

    def to_dict(self) -> Dict:
        return {"m": self.m, "W": self.W, "points": [list(p) for p in sorted(self.points)]}


@dataclass(frozen=True)
class NormalFan:
    """Inward primitive edge normals and the positive relation among them"""
    v1: Tuple[int, int]
    v2: Tuple[int, int]
    v3: Tuple[int, int]
    weights: Tuple[int, int, int]
    index: int

    def to_dict(self) -> Dict:
        return {
            "v1": list(self.v1),
            "v2": list(self.v2),
            "v3": list(self.v3),
            "weights": list(self.weights),
            "index": self.index,
        }
