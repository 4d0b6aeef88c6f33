"""
Filename: core.py
Created Date: 2026-10-18
Description: Exact integer and rational arithmetic.

Python ints are the unbounded integers and fractions.Fraction the normalized
rationals used for slopes, widths and derivative values. Nothing in this
module touches floating point.
"""

import math
import re
from fractions import Fraction
from functools import reduce
from typing import Iterable, Union

from ..utils.error_handler import ValidationError

Rational = Fraction
RationalLike = Union[int, Fraction, str]

_RATIONAL_PATTERN = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*([+-]?\d+))?\s*$")


def falling_factorial(k: int, l: int) -> int:
    """[k]_l = k(k-1)...(k-l+1); 1 for l = 0. k may be negative."""
    if l < 0:
        raise ValidationError(f"falling factorial length must be >= 0, got {l}")
    result = 1
    for offset in range(l):
        result *= k - offset
    return result


def binomial(n: int, k: int) -> int:
    """Binomial coefficient, 0 outside 0 <= k <= n."""
    if n < 0:
        raise ValidationError(f"binomial needs n >= 0, got {n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def floor_rational(q: RationalLike) -> int:
    return math.floor(to_rational(q))


def ceil_rational(q: RationalLike) -> int:
    return math.ceil(to_rational(q))


def integers_in_closed_interval(lo: RationalLike, hi: RationalLike) -> int:
    """Number of integers z with lo <= z <= hi."""
    lo, hi = to_rational(lo), to_rational(hi)
    if lo > hi:
        raise ValidationError(f"empty interval: {format_rational(lo)} > {format_rational(hi)}")
    return max(0, math.floor(hi) - math.ceil(lo) + 1)


def lcm_many(values: Iterable[int]) -> int:
    """Least common multiple of the values; 1 for no values."""
    return reduce(math.lcm, values, 1)


def gcd_many(values: Iterable[int]) -> int:
    return reduce(math.gcd, values, 0)


def to_rational(value: RationalLike) -> Fraction:
    """Coerce an int, Fraction or "p/q" string to a Fraction."""
    if isinstance(value, bool):
        raise ValidationError(f"not a rational number: {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise ValidationError(f"not a rational number: {value!r}")


def parse_rational(text: str) -> Fraction:
    """Parse "p/q" or "p" into a normalized Fraction."""
    match = _RATIONAL_PATTERN.match(text)
    if not match:
        raise ValidationError(
            f"Invalid rational '{text}'",
            f"Invalid rational '{text}': expected p/q or an integer"
        )
    numerator = int(match.group(1))
    denominator = int(match.group(2)) if match.group(2) is not None else 1
    if denominator == 0:
        raise ValidationError(f"Invalid rational '{text}': zero denominator")
    return Fraction(numerator, denominator)


def format_rational(q: RationalLike) -> str:
    """Render as "p/q", or "p" when the denominator is 1."""
    q = to_rational(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"
