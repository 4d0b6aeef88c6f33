"""
Filename: triangle.py
Created Date: 2026-10-18
Description: Triangle service module.

This module builds triangles from slopes, applies the shear and reflection
moves, enumerates the lattice points of scaled triangles column by column
and evaluates the two-condition criterion on width and column counts.
"""

from fractions import Fraction
from math import gcd
from typing import Optional, Tuple

from src.algebra.core import (
    RationalLike,
    ceil_rational,
    floor_rational,
    integers_in_closed_interval,
    lcm_many,
    to_rational,
)
from src.models.triangle import LatticeSample, NormalFan, Triangle, TriangleReport
from src.utils.error_handler import ValidationError
from src.utils.logger import get_logger

logger = get_logger("coxcheck.services.triangle")


def triangle_from_slopes(s1: RationalLike, s2: RationalLike, s3: RationalLike) -> Triangle:
    """Triangle with side slopes s1 < s2 < s3."""
    return Triangle(to_rational(s1), to_rational(s2), to_rational(s3))


def width(t: Triangle) -> Fraction:
    """Horizontal extent x2 - x1 = 1/(s2-s1) + 1/(s3-s2)."""
    return 1 / (t.s2 - t.s1) + 1 / (t.s3 - t.s2)


def shear(t: Triangle, a: int) -> Triangle:
    """Image under (x, y) -> (x, y + a·x)."""
    if isinstance(a, bool) or not isinstance(a, int):
        raise ValidationError(f"shear amount must be an integer, got {a!r}")
    return Triangle(t.s1 + a, t.s2 + a, t.s3 + a)


def reflect(t: Triangle) -> Triangle:
    """Image under (x, y) -> (-x, y)."""
    return Triangle(-t.s3, -t.s2, -t.s1)


def second_column_count(t: Triangle) -> int:
    """n = |[s1, s2] ∩ Z|."""
    return integers_in_closed_interval(t.s1, t.s2)


def check_triangle_criterion(t: Triangle) -> TriangleReport:
    """Evaluate both conditions of the triangle criterion."""
    w = width(t)
    n = second_column_count(t)
    lo, hi = sorted(((n - 1) * t.s2, (n - 1) * t.s3))
    cond2_count = integers_in_closed_interval(lo, hi)
    cond1 = w < 1
    cond2_count_ok = cond2_count == n
    cond2_nonintegral_ok = (n * t.s2).denominator != 1
    return TriangleReport(
        w=w,
        n=n,
        cond1=cond1,
        cond2_count=cond2_count,
        cond2_count_ok=cond2_count_ok,
        cond2_nonintegral_ok=cond2_nonintegral_ok,
        passes=cond1 and cond2_count_ok and cond2_nonintegral_ok,
    )


def minimal_multiple(t: Triangle) -> int:
    """Least m >= 1 making m·Δ a lattice triangle with integral m·w."""
    return lcm_many(q.denominator for q in (t.x1, t.y1, t.x2, t.y2, width(t)))


def _require_integral_scaling(t: Triangle, m: int):
    if isinstance(m, bool) or not isinstance(m, int) or m < 1:
        raise ValidationError(f"multiple m must be a positive integer, got {m!r}")
    if m % minimal_multiple(t):
        raise ValidationError(
            f"m = {m} does not make the triangle integral; use a multiple of {minimal_multiple(t)}"
        )


def column_range(t: Triangle, m: int, x: int) -> Optional[Tuple[int, int]]:
    """Inclusive y-range of lattice points of m·Δ at abscissa x, or None."""
    if x < m * t.x1 or x > m * t.x2:
        return None
    lo = ceil_rational(max(t.s1 * x, t.s3 * x))
    hi = floor_rational(t.s2 * x + m)
    if lo > hi:
        return None
    return (lo, hi)


def lattice_points(t: Triangle, m: int) -> LatticeSample:
    """All lattice points of m·Δ, scanned column by column."""
    _require_integral_scaling(t, m)
    points = []
    for x in range(int(m * t.x1), int(m * t.x2) + 1):
        span = column_range(t, m, x)
        if span is not None:
            points.extend((x, y) for y in range(span[0], span[1] + 1))
    sample = LatticeSample(m=m, W=int(m * width(t)), points=tuple(points))
    logger.debug(f"m = {m}: {len(sample)} lattice points over {len(sample.columns)} columns")
    return sample


def column_count(sample: LatticeSample, x: int) -> int:
    """Number of sample points with first coordinate x."""
    return sample.count_in_column(x)


def lattice_restatement(t: Triangle, m: int) -> bool:
    """Column and top-edge form of condition (2) for a passing triangle.

    The column at m·x2 - (n-1) must hold exactly n points and the top edge
    must miss the lattice at abscissa m·x2 - n.
    """
    report = check_triangle_criterion(t)
    if not report.passes:
        return False
    _require_integral_scaling(t, m)
    n = report.n
    right = int(m * t.x2)
    span = column_range(t, m, right - (n - 1))
    count = 0 if span is None else span[1] - span[0] + 1
    top = t.s2 * (right - n) + m
    return count == n and top.denominator != 1


def _inward_normal(slope: Fraction, upper: bool) -> Tuple[int, int]:
    p, q = slope.numerator, slope.denominator
    return (p, -q) if upper else (-p, q)


def normal_fan_rays(t: Triangle) -> NormalFan:
    """Primitive inward edge normals v1, v2, v3 with a·v1 + b·v2 + c·v3 = 0."""
    v1 = _inward_normal(t.s1, upper=False)
    v2 = _inward_normal(t.s2, upper=True)
    v3 = _inward_normal(t.s3, upper=False)

    def det(u, v):
        return u[0] * v[1] - u[1] * v[0]

    minors = (det(v2, v3), det(v3, v1), det(v1, v2))
    index = gcd(*minors)
    sign = 1 if minors[0] > 0 else -1
    weights = tuple(sign * x // index for x in minors)
    return NormalFan(v1=v1, v2=v2, v3=v3, weights=weights, index=index)
