"""Tests for src/algebra/core.py"""

import math
import random
from fractions import Fraction

import pytest

from src.algebra.core import (
    binomial,
    ceil_rational,
    falling_factorial,
    floor_rational,
    format_rational,
    gcd_many,
    integers_in_closed_interval,
    lcm_many,
    parse_rational,
    to_rational,
)
from src.utils.error_handler import ValidationError


class TestFallingFactorial:
    """Tests for falling_factorial"""

    def test_positive(self):
        """[5]_2 = 20."""
        assert falling_factorial(5, 2) == 20

    def test_negative_base(self):
        """[-1]_3 = (-1)(-2)(-3) = -6."""
        assert falling_factorial(-1, 3) == -6

    def test_empty_product(self):
        """[k]_0 = 1 for any k."""
        assert falling_factorial(-7, 0) == 1
        assert falling_factorial(0, 0) == 1

    def test_vanishes_past_base(self):
        """[k]_l = 0 for 0 <= k < l."""
        assert falling_factorial(3, 4) == 0

    def test_negative_length_raises(self):
        with pytest.raises(ValidationError):
            falling_factorial(3, -1)


class TestBinomial:
    """Tests for binomial"""

    def test_value(self):
        assert binomial(5, 2) == 10

    def test_out_of_range_is_zero(self):
        """C(3, 5) = 0."""
        assert binomial(3, 5) == 0


class TestRounding:
    """Tests for floor_rational and ceil_rational"""

    def test_negative_half(self):
        """floor(-7/2) = -4 and ceil(-7/2) = -3."""
        assert floor_rational(Fraction(-7, 2)) == -4
        assert ceil_rational(Fraction(-7, 2)) == -3

    def test_integer(self):
        assert floor_rational(Fraction(6, 3)) == 2
        assert ceil_rational(Fraction(6, 3)) == 2


class TestIntegersInClosedInterval:
    """Tests for integers_in_closed_interval"""

    def test_single_integer(self):
        """[-2/3, 1/2] contains only 0."""
        assert integers_in_closed_interval(Fraction(-2, 3), Fraction(1, 2)) == 1

    def test_closed_endpoints(self):
        """Both integral endpoints count."""
        assert integers_in_closed_interval(-2, 1) == 4

    def test_no_integer(self):
        assert integers_in_closed_interval(Fraction(1, 3), Fraction(2, 3)) == 0

    def test_degenerate_point(self):
        assert integers_in_closed_interval(1, 1) == 1

    def test_reversed_interval_raises(self):
        with pytest.raises(ValidationError):
            integers_in_closed_interval(1, 0)


class TestParseRational:
    """Tests for parse_rational and format_rational"""

    def test_fraction(self):
        assert parse_rational("-2/3") == Fraction(-2, 3)

    def test_integer(self):
        assert parse_rational(" 8 ") == Fraction(8)

    def test_normalizes(self):
        assert parse_rational("4/6") == Fraction(2, 3)

    def test_zero_denominator_raises(self):
        with pytest.raises(ValidationError):
            parse_rational("1/0")

    def test_garbage_raises(self):
        with pytest.raises(ValidationError):
            parse_rational("two thirds")

    def test_format(self):
        assert format_rational(Fraction(104, 105)) == "104/105"
        assert format_rational(Fraction(-4, 2)) == "-2"

    def test_to_rational_rejects_bool(self):
        with pytest.raises(ValidationError):
            to_rational(True)


class TestLcmGcd:
    """Tests for lcm_many and gcd_many"""

    def test_lcm(self):
        assert lcm_many([7, 15, 7, 15, 105]) == 105

    def test_lcm_empty(self):
        assert lcm_many([]) == 1

    def test_gcd(self):
        assert gcd_many([12, 18, 30]) == 6


class TestRationalExactness:
    """Fraction arithmetic round-trips without loss"""

    def test_add_then_subtract(self):
        """(p/q + r/s) - r/s == p/q over many random pairs."""
        rng = random.Random(11)
        for _ in range(10_000):
            x = Fraction(rng.randint(-10**6, 10**6), rng.randint(1, 10**6))
            y = Fraction(rng.randint(-10**6, 10**6), rng.randint(1, 10**6))
            assert (x + y) - y == x

    def test_text_form_round_trip(self):
        rng = random.Random(12)
        for _ in range(1000):
            q = Fraction(rng.randint(-999, 999), rng.randint(1, 999))
            assert parse_rational(format_rational(q)) == q


class TestFallingFactorialAgainstFactorials:
    """falling_factorial(k, l) == k! / (k - l)! for k <= 20"""

    def test_factorial_ratio(self):
        for k in range(21):
            for l in range(k + 1):
                assert falling_factorial(k, l) == math.factorial(k) // math.factorial(k - l)

    def test_binomial_examples(self):
        assert binomial(4, 2) == 6
        assert binomial(9, 0) == 1
        assert binomial(7, 9) == 0
        assert binomial(7, -1) == 0


class TestIntegersInClosedIntervalBruteForce:
    """integers_in_closed_interval against a scan of candidate integers"""

    def test_random_intervals(self):
        rng = random.Random(13)
        for _ in range(10_000):
            ends = sorted(
                Fraction(rng.randint(-100 * d, 100 * d), d)
                for d in (rng.randint(1, 12), rng.randint(1, 12))
            )
            lo, hi = ends
            expected = sum(1 for z in range(-101, 102) if lo <= z <= hi)
            assert integers_in_closed_interval(lo, hi) == expected

    def test_worked_examples(self):
        """The w = 104/105 and w = 13/14 triangles have n = 1 and n = 2."""
        assert integers_in_closed_interval(Fraction(-2, 3), Fraction(1, 2)) == 1
        assert integers_in_closed_interval(Fraction(-11, 3), Fraction(-4, 3)) == 2
        assert integers_in_closed_interval(0, 0) == 1
