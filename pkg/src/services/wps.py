"""
Filename: wps.py
Created Date: 2026-10-18
Description: Weighted projective plane service module.

This module searches for relations a·e + b·f = c·g with small width, evaluates
the plane criterion on an ordered orientation, tries every role assignment of
the weights, maps a plane with its relation to the equivalent triangle and
produces the two infinite families of qualifying planes.
"""

import math
from fractions import Fraction
from itertools import permutations
from typing import Iterator, List, Optional, Set, Tuple

from src.algebra.core import floor_rational
from src.algebra.linalg import integer_solve
from src.models.matrix import IntMatrix
from src.models.triangle import Triangle
from src.models.wps import Relation, Weights, WpsReport
from src.services.triangle import shear
from src.utils.error_handler import DiophantineError, ValidationError
from src.utils.logger import get_logger

logger = get_logger("coxcheck.services.wps")

RelationKey = Tuple[int, int, Tuple[Tuple[int, int], Tuple[int, int]]]


def _solve_relations(a: int, b: int, c: int) -> Iterator[Tuple[int, int, int]]:
    """Positive (e, f, g) with a·e + b·f = c·g, g²c < ab and gcd 1."""
    d = math.gcd(a, b)
    a_red, b_red = a // d, b // d
    inverse = pow(a_red, -1, b_red) if b_red > 1 else 0
    g = 1
    while g * g * c < a * b:
        total = c * g
        if total % d == 0:
            # e runs over one residue class mod b/d
            e = (total // d) * inverse % b_red if b_red > 1 else 0
            if e == 0:
                e = b_red
            while a * e + b <= total:
                f = (total - a * e) // b
                if math.gcd(math.gcd(e, f), g) == 1:
                    yield (e, f, g)
                e += b_red
        g += 1


def find_relations(a: int, b: int, c: int) -> List[Relation]:
    """All relations (e, f, -g) of P(a, b, c) with width below 1."""
    Weights(a, b, c)
    return [Relation(e, f, g) for e, f, g in _solve_relations(a, b, c)]


def check_wps_criterion(a: int, b: int, c: int, rel: Relation) -> WpsReport:
    """Evaluate the plane criterion on the ordered orientation (a, b, c)."""
    weights = Weights(a, b, c)
    if not rel.holds_for(weights):
        raise ValidationError(
            f"{rel} is not a relation for {weights}: "
            f"{a}·{rel.e} + {b}·{rel.f} != {c}·{rel.g}"
        )
    e, f, g = rel.as_tuple()

    w = Fraction(g * g * c, a * b)
    delta_set = tuple(
        delta for delta in range(0, -(b // e) - 1, -1)
        if (b + delta * e) % g == 0 and (a - delta * f) % g == 0
    )
    n = len(delta_set)

    if n >= 1:
        gamma_set = tuple(
            gamma for gamma in range(0, (n - 1) * a // f + 1)
            if ((n - 1) * b + gamma * e) % g == 0 and ((n - 1) * a - gamma * f) % g == 0
        )
    else:
        gamma_set = ()

    cond1 = w < 1
    cond2_count_ok = len(gamma_set) == n
    cond2_mod_ok = not ((n * b) % g == 0 and (n * a) % g == 0)
    return WpsReport(
        weights=weights,
        relation=rel,
        w=w,
        n=n,
        delta_set=delta_set,
        gamma_set=gamma_set,
        cond1=cond1,
        cond2_count_ok=cond2_count_ok,
        cond2_mod_ok=cond2_mod_ok,
        passes=cond1 and cond2_count_ok and cond2_mod_ok,
    )


def orientations(a: int, b: int, c: int) -> List[Tuple[int, int, int]]:
    """The six role assignments of the sorted weights, in a fixed order."""
    return list(permutations(sorted((a, b, c))))


def relation_swapped(rel: Relation) -> Relation:
    """Relation for the orientation with a and b exchanged."""
    return rel.swapped()


def qualifies(a: int, b: int, c: int) -> Optional[Tuple[Weights, Relation, WpsReport]]:
    """First passing (orientation, relation, report), or None."""
    Weights(a, b, c)
    for oriented in orientations(a, b, c):
        for e, f, g in _solve_relations(*oriented):
            rel = Relation(e, f, g)
            report = check_wps_criterion(*oriented, rel)
            if report.passes:
                return Weights(*oriented), rel, report
    return None


def passing_orientations(a: int, b: int, c: int) -> List[Tuple[Weights, Relation]]:
    """Every passing (orientation, relation) pair."""
    found = []
    for oriented in orientations(a, b, c):
        for e, f, g in _solve_relations(*oriented):
            rel = Relation(e, f, g)
            if check_wps_criterion(*oriented, rel).passes:
                found.append((Weights(*oriented), rel))
    return found


def relation_keys(a: int, b: int, c: int) -> Set[RelationKey]:
    """Width-below-one relations across all orientations, up to the a/b swap."""
    keys = set()
    for oa, ob, oc in orientations(a, b, c):
        for e, f, g in _solve_relations(oa, ob, oc):
            keys.add((oc, g, tuple(sorted(((oa, e), (ob, f))))))
    return keys


def wps_to_triangle(a: int, b: int, c: int, rel: Relation) -> Triangle:
    """Triangle of P(a, b, c) in (column, height) coordinates, sheared to 0 <= s2 < 1."""
    weights = Weights(a, b, c)
    if not rel.holds_for(weights):
        raise ValidationError(f"{rel} is not a relation for {weights}")
    e, f, g = rel.as_tuple()
    if g * g * c >= a * b:
        raise ValidationError(f"{weights} with {rel} has width >= 1")

    system = IntMatrix.from_rows([[f, -e, 0], [a, b, c]])
    u = integer_solve(system, [c, 0])
    if u is None:
        raise DiophantineError(
            f"no integral u with f·u1 - e·u2 = c and deg(u) = 0 for {weights}, {rel}"
        )
    u3 = u[2]
    s2 = Fraction(u3, g)
    s1 = Fraction(e * u3 - b, e * g)
    s3 = Fraction(a + f * u3, f * g)
    triangle = Triangle(s1, s2, s3)
    logger.debug(f"{weights} {rel}: u = {u}")
    return shear(triangle, -floor_rational(s2))


def gnw_family(N: int, variant: int) -> Tuple[Weights, Relation]:
    """Member N of one of the two infinite families of qualifying planes."""
    if isinstance(N, bool) or not isinstance(N, int):
        raise ValidationError(f"N must be an integer, got {N!r}")
    if variant == 1:
        if N < 4 or N % 3 == 0:
            raise ValidationError(f"variant 1 needs N >= 4 and 3 ∤ N, got N = {N}")
        return Weights(7 * N - 3, 8 * N - 3, (5 * N - 2) * N), Relation(N, N, 3)
    if variant == 2:
        if N < 3:
            raise ValidationError(f"variant 2 needs N >= 3, got N = {N}")
        return Weights(7 * N - 10, 8 * N - 3, 5 * N * N - 7 * N + 1), Relation(N, N - 1, 3)
    raise ValidationError(f"unknown family variant {variant}; expected 1 or 2")


def gnw_width(N: int, variant: int) -> Fraction:
    """Closed-form width of family member N."""
    if variant == 1:
        return Fraction(9 * (5 * N - 2) * N, (7 * N - 3) * (8 * N - 3))
    if variant == 2:
        return Fraction(9 * (5 * N * N - 7 * N + 1), (7 * N - 10) * (8 * N - 3))
    raise ValidationError(f"unknown family variant {variant}; expected 1 or 2")
