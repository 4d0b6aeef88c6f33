"""Tests for src/algebra/linalg.py"""

import random
from fractions import Fraction

import flint
import pytest

from src.algebra.linalg import (
    certify_row_span,
    in_row_span_mod_p,
    integer_determinant,
    integer_solve,
    invariant_factors,
    kernel_mod_p,
    random_prime,
    rank_mod_p,
    rank_of_rows,
    rank_over_q,
    rational_kernel,
    rational_solve,
    smith_normal_form,
)
from src.models.matrix import IntMatrix, ModMatrix
from src.services.moduli import builtin_basis_13
from src.utils.error_handler import ValidationError


class TestSmithNormalForm:
    """Tests for smith_normal_form"""

    M = IntMatrix.from_rows([[2, 4, 4], [-6, 6, 12], [10, -4, -16]])

    def test_invariant_factors(self):
        """Classic 3x3 example reduces to diag(2, 6, 12)."""
        assert invariant_factors(self.M) == (2, 6, 12)

    def test_transforms(self):
        """U·M·V reproduces D."""
        snf = smith_normal_form(self.M)
        assert snf.U.matmul(self.M).matmul(snf.V) == snf.D

    def test_unimodular(self):
        snf = smith_normal_form(self.M)
        assert abs(integer_determinant(snf.U)) == 1
        assert abs(integer_determinant(snf.V)) == 1

    def test_divisibility_chain(self):
        """Each invariant factor divides the next."""
        M = IntMatrix.from_rows([[6, 4], [4, 6], [2, 8]])
        factors = invariant_factors(M)
        assert all(b % a == 0 for a, b in zip(factors, factors[1:]))

    def test_rank_deficient(self):
        M = IntMatrix.from_rows([[1, 2], [2, 4]])
        assert smith_normal_form(M).rank == 1

    def test_agrees_with_flint(self):
        """The transform-tracking reduction matches FLINT's diagonal."""
        for rows in ([[6, 4], [4, 6], [2, 8]], [[0, 3, 0], [2, 0, 4]], [[1, 2], [2, 4]]):
            M = IntMatrix.from_rows(rows)
            assert smith_normal_form(M).invariant_factors == invariant_factors(M)


class TestIntegerSolve:
    """Tests for integer_solve"""

    def test_solvable(self):
        M = IntMatrix.from_rows([[2, 0], [0, 3]])
        assert integer_solve(M, [4, 9]) == (2, 3)

    def test_no_integral_solution(self):
        M = IntMatrix.from_rows([[2, 0], [0, 3]])
        assert integer_solve(M, [1, 0]) is None

    def test_underdetermined(self):
        """Any returned solution satisfies the system."""
        M = IntMatrix.from_rows([[3, -1, 0], [19, 11, 13]])
        u = integer_solve(M, [13, 0])
        assert u is not None
        assert M.apply(u) == (13, 0)

    def test_length_mismatch_raises(self):
        with pytest.raises(ValidationError):
            integer_solve(IntMatrix.identity(2), [1])


class TestExactHelpers:
    """Tests for determinant, rank and rational solves"""

    def test_determinant(self):
        assert integer_determinant(IntMatrix.from_rows([[1, 2], [3, 4]])) == -2

    def test_determinant_non_square_raises(self):
        with pytest.raises(ValidationError):
            integer_determinant(IntMatrix.from_rows([[1, 2, 3]]))

    def test_rank(self):
        assert rank_over_q(IntMatrix.from_rows([[1, 2], [2, 4]])) == 1

    def test_rank_of_rows(self):
        assert rank_of_rows([[1, 2, 3], [2, 4, 6], [0, 1, 1]], 3) == 2
        assert rank_of_rows([], 3) == 0

    def test_rational_kernel(self):
        rows = [[1, 2, 3]]
        basis = rational_kernel(rows)
        assert len(basis) == 2
        for k in basis:
            assert sum(a * b for a, b in zip(rows[0], k)) == 0

    def test_rational_solve(self):
        assert rational_solve([[1, 1], [1, -1]], [2, 0]) == (Fraction(1), Fraction(1))

    def test_rational_solve_inconsistent(self):
        assert rational_solve([[1, 1], [2, 2]], [1, 3]) is None


class TestModularHelpers:
    """Tests for the F_p helpers"""

    def test_random_prime_in_window(self):
        p = random_prime(random.Random(0), 50, 62)
        assert 2 ** 50 <= p < 2 ** 62
        assert flint.fmpz(p).is_prime()

    def test_random_prime_seeded(self):
        """Same seed, same prime."""
        assert random_prime(random.Random(5)) == random_prime(random.Random(5))

    def test_rank_mod_p(self):
        assert rank_mod_p(ModMatrix.from_rows([[1, 2], [2, 4]], 7)) == 1

    def test_rank_drops_mod_small_prime(self):
        """det = -2 vanishes mod 2."""
        assert rank_mod_p(ModMatrix.from_rows([[1, 2], [3, 4]], 2)) == 1

    def test_kernel_mod_p(self):
        M = ModMatrix.from_rows([[1, 2, 3], [4, 5, 6]], 101)
        kernel = kernel_mod_p(M)
        assert len(kernel) == 1
        for row in M.to_rows():
            assert sum(a * b for a, b in zip(row, kernel[0])) % 101 == 0

    def test_in_row_span(self):
        M = ModMatrix.from_rows([[1, 0, 1], [0, 1, 1]], 13)
        assert in_row_span_mod_p(M, [1, 1, 2])
        assert not in_row_span_mod_p(M, [0, 0, 1])

    def test_in_row_span_length_mismatch(self):
        M = ModMatrix.from_rows([[1, 0]], 13)
        with pytest.raises(ValidationError):
            in_row_span_mod_p(M, [1, 0, 0])


class TestCertifyRowSpan:
    """Tests for certify_row_span"""

    PRIME = 1000000007

    def test_member(self):
        assert certify_row_span([[1, 0, 1], [0, 1, 1]], [1, 1, 2], self.PRIME) == (True, 2)

    def test_non_member(self):
        assert certify_row_span([[1, 0, 1], [0, 1, 1]], [0, 0, 1], self.PRIME) == (False, 2)

    def test_rational_combination(self):
        """Membership with non-integral coefficients is still certified."""
        assert certify_row_span([[2, 0], [0, 2]], [1, 1], self.PRIME) == (True, 2)

    def test_no_rows(self):
        assert certify_row_span([], [0, 0], self.PRIME) == (True, 0)
        assert certify_row_span([], [1, 0], self.PRIME) == (False, 0)

    def test_unlucky_prime(self):
        """All entries vanish mod p, so no certificate can be read off."""
        assert certify_row_span([[7, 7]], [1, 1], 7) is None


def _random_int_matrix(rng, rows, cols, bound=50):
    return [[rng.randint(-bound, bound) for _ in range(cols)] for _ in range(rows)]


def _low_rank_rows(rng, size, rank):
    A = _random_int_matrix(rng, size, rank, 5)
    B = _random_int_matrix(rng, rank, size, 5)
    return [[sum(A[i][k] * B[k][j] for k in range(rank)) for j in range(size)] for i in range(size)]


class TestSmithNormalFormProperties:
    """smith_normal_form postconditions on fixed and random inputs"""

    @staticmethod
    def _assert_snf(M):
        snf = smith_normal_form(M)
        D = snf.D
        assert snf.U.matmul(M).matmul(snf.V) == D
        assert abs(integer_determinant(snf.U)) == 1
        assert abs(integer_determinant(snf.V)) == 1
        for i in range(D.rows):
            for j in range(D.cols):
                if i != j:
                    assert D[i, j] == 0
        diagonal = snf.diagonal
        assert all(d >= 0 for d in diagonal)
        for a, b in zip(diagonal, diagonal[1:]):
            assert (b % a == 0) if a else b == 0

    def test_diag_2_3(self):
        assert invariant_factors(IntMatrix.diagonal([2, 3])) == (1, 6)

    def test_identity(self):
        assert smith_normal_form(IntMatrix.identity(4)).invariant_factors == (1, 1, 1, 1)

    def test_witness_columns_saturated(self):
        """The 10x8 matrix with columns a1..a8 has all invariant factors 1."""
        M = IntMatrix.from_columns(builtin_basis_13()[:8])
        assert (M.rows, M.cols) == (10, 8)
        assert smith_normal_form(M).invariant_factors == (1,) * 8
        self._assert_snf(M)

    def test_random_matrices(self):
        """500 random matrices up to 12x12 with entries in [-50, 50]."""
        rng = random.Random(20261018)
        for trial in range(500):
            rows, cols = rng.randint(1, 12), rng.randint(1, 12)
            if trial % 5 == 0:
                size = max(rows, cols)
                rows_data = _low_rank_rows(rng, size, rng.randint(1, size))
                M = IntMatrix.from_rows(rows_data)
            else:
                M = IntMatrix.from_rows(_random_int_matrix(rng, rows, cols))
            self._assert_snf(M)


class TestIntegerDeterminantExamples:
    """Tests for integer_determinant on fixed inputs"""

    def test_identity(self):
        assert integer_determinant(IntMatrix.identity(5)) == 1

    def test_diagonal(self):
        assert integer_determinant(IntMatrix.diagonal([2, 3, 5])) == 30

    def test_witness_matrix(self):
        """Columns a1..a10 of the n = 13 witness form a unimodular matrix."""
        assert integer_determinant(IntMatrix.from_columns(builtin_basis_13())) == 1


class TestRankModP:
    """Tests for rank_mod_p against the rank over Q"""

    def test_zero_matrix(self):
        assert rank_mod_p(ModMatrix.from_rows([[0, 0], [0, 0]], 101)) == 0

    def test_identity(self):
        assert rank_mod_p(ModMatrix.identity(6, 101)) == 6

    def test_matches_rational_rank(self):
        """Two large random primes agree with the kernel dimension over Q."""
        rng = random.Random(7)
        agreements = 0
        trials = 500
        for _ in range(trials):
            rows = _low_rank_rows(rng, 20, rng.randint(1, 20))
            rank_q = 20 - len(rational_kernel(rows))
            ranks = [rank_mod_p(ModMatrix.from_rows(rows, random_prime(rng))) for _ in range(2)]
            assert all(r <= rank_q for r in ranks)
            agreements += all(r == rank_q for r in ranks)
        assert agreements >= 0.99 * trials


class TestInRowSpanModP:
    """Tests for in_row_span_mod_p"""

    def test_zero_vector(self):
        M = ModMatrix.from_rows([[3, 1, 4]], 101)
        assert in_row_span_mod_p(M, [0, 0, 0])

    def test_full_row_space(self):
        assert in_row_span_mod_p(ModMatrix.identity(3, 101), [5, 17, 99])

    def test_scalar_multiple(self):
        assert in_row_span_mod_p(ModMatrix.from_rows([[1, 2, 3]], 101), [2, 4, 6])

    def test_monotone_under_appended_rows(self):
        """Appending rows never turns a member into a non-member."""
        rng = random.Random(3)
        prime = 13
        for _ in range(300):
            cols = rng.randint(2, 6)
            rows = [[rng.randrange(prime) for _ in range(cols)] for _ in range(rng.randint(1, 4))]
            extra = [[rng.randrange(prime) for _ in range(cols)] for _ in range(rng.randint(1, 3))]
            vector = [rng.randrange(prime) for _ in range(cols)]
            before = in_row_span_mod_p(ModMatrix.from_rows(rows, prime), vector)
            after = in_row_span_mod_p(ModMatrix.from_rows(rows + extra, prime), vector)
            assert after or not before


class TestRationalKernel:
    """Tests for rational_kernel"""

    def test_identity_is_trivial(self):
        assert rational_kernel(IntMatrix.identity(3).to_rows()) == []

    def test_single_row(self):
        assert rational_kernel([[1, -1]]) == [(Fraction(1), Fraction(1))]

    def test_rational_entries(self):
        basis = rational_kernel([[Fraction(1, 2), Fraction(-1, 3)]])
        assert len(basis) == 1
        x, y = basis[0]
        assert Fraction(1, 2) * x - Fraction(1, 3) * y == 0
