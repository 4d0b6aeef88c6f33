"""
Filename: linalg.py
Created Date: 2026-10-18
Description: Integer, rational and modular linear algebra.

Smith normal form is computed here on Python integers with the unimodular
transforms tracked. Determinants, ranks, rational reduced row echelon forms and
all mod-p elimination are delegated to FLINT through python-flint.
"""

import random
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import flint

from ..models.matrix import IntMatrix, ModMatrix, SnfResult
from ..utils.error_handler import ValidationError
from ..utils.logger import get_logger

logger = get_logger("coxcheck.algebra.linalg")


# Smith normal form


def _swap_rows(A, i, j):
    A[i], A[j] = A[j], A[i]


def _swap_cols(A, i, j):
    for row in A:
        row[i], row[j] = row[j], row[i]


def _add_row(A, target, source, factor):
    if factor:
        A[target] = [t + factor * s for t, s in zip(A[target], A[source])]


def _add_col(A, target, source, factor):
    if factor:
        for row in A:
            row[target] += factor * row[source]


def smith_normal_form(matrix: IntMatrix) -> SnfResult:
    """Smith normal form with transforms: U·M·V = D.

    Pivots are chosen by minimal absolute value; D has a non-negative
    diagonal with each entry dividing the next.
    """
    m, n = matrix.rows, matrix.cols
    A = matrix.to_rows()
    U = IntMatrix.identity(m).to_rows()
    V = IntMatrix.identity(n).to_rows()

    for t in range(min(m, n)):
        nonzero = [
            (abs(A[i][j]), i, j)
            for i in range(t, m) for j in range(t, n) if A[i][j] != 0
        ]
        if not nonzero:
            break
        _, pi, pj = min(nonzero)
        _swap_rows(A, t, pi)
        _swap_rows(U, t, pi)
        _swap_cols(A, t, pj)
        _swap_cols(V, t, pj)

        while True:
            pivot = A[t][t]
            for i in range(t + 1, m):
                q = A[i][t] // pivot
                _add_row(A, i, t, -q)
                _add_row(U, i, t, -q)
            for j in range(t + 1, n):
                q = A[t][j] // pivot
                _add_col(A, j, t, -q)
                _add_col(V, j, t, -q)

            remainders = [(abs(A[i][t]), i, None) for i in range(t + 1, m) if A[i][t]]
            remainders += [(abs(A[t][j]), None, j) for j in range(t + 1, n) if A[t][j]]
            if remainders:
                # a remainder smaller than the pivot becomes the new pivot
                _, ri, rj = min(remainders, key=lambda item: item[0])
                if ri is not None:
                    _swap_rows(A, t, ri)
                    _swap_rows(U, t, ri)
                else:
                    _swap_cols(A, t, rj)
                    _swap_cols(V, t, rj)
                continue

            offender = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if A[i][j] % pivot),
                None,
            )
            if offender is None:
                break
            _add_row(A, t, offender, 1)
            _add_row(U, t, offender, 1)

        if A[t][t] < 0:
            A[t] = [-x for x in A[t]]
            U[t] = [-x for x in U[t]]

    return SnfResult(
        U=IntMatrix.from_rows(U, cols=m),
        D=IntMatrix.from_rows(A, cols=n),
        V=IntMatrix.from_rows(V, cols=n),
    )


def invariant_factors(matrix: IntMatrix) -> Tuple[int, ...]:
    """Nonzero diagonal entries of the Smith normal form.

    No transforms are needed here, so FLINT computes the form directly.
    """
    if matrix.rows == 0 or matrix.cols == 0:
        return ()
    D = flint.fmpz_mat(matrix.to_rows()).snf()
    diagonal = (int(D[i, i]) for i in range(min(matrix.rows, matrix.cols)))
    return tuple(d for d in diagonal if d != 0)


def integer_solve(matrix: IntMatrix, rhs: Sequence[int]) -> Optional[Tuple[int, ...]]:
    """An integral x with M·x = rhs, or None when none exists."""
    if len(rhs) != matrix.rows:
        raise ValidationError(f"right-hand side of length {len(rhs)} for {matrix.rows} rows")
    snf = smith_normal_form(matrix)
    transformed = snf.U.apply(list(rhs))
    diagonal = snf.diagonal
    y = [0] * matrix.cols
    for i, value in enumerate(transformed):
        d = diagonal[i] if i < len(diagonal) else 0
        if d == 0:
            if value != 0:
                return None
            continue
        if value % d:
            return None
        y[i] = value // d
    return snf.V.apply(y)


# FLINT-backed exact algebra


def _fmpz_mat(matrix: IntMatrix) -> "flint.fmpz_mat":
    return flint.fmpz_mat(matrix.rows, matrix.cols, list(matrix.entries))


def _fmpq_mat(rows: Sequence[Sequence[Fraction]], cols: int) -> "flint.fmpq_mat":
    entries = [flint.fmpq(x.numerator, x.denominator) for row in rows for x in row]
    return flint.fmpq_mat(len(rows), cols, entries)


def _to_fraction(value) -> Fraction:
    return Fraction(int(value.p), int(value.q))


def integer_determinant(matrix: IntMatrix) -> int:
    """Exact determinant of a square integer matrix."""
    if not matrix.is_square:
        raise ValidationError(f"determinant of non-square {matrix.rows}x{matrix.cols} matrix")
    if matrix.rows == 0:
        return 1
    return int(_fmpz_mat(matrix).det())


def rank_over_q(matrix: IntMatrix) -> int:
    if matrix.rows == 0 or matrix.cols == 0:
        return 0
    return int(_fmpz_mat(matrix).rank())


def rank_of_rows(rows: Sequence[Sequence[int]], cols: int) -> int:
    """Exact rank over Q of integer rows, without an IntMatrix copy."""
    if not rows or cols == 0:
        return 0
    return int(flint.fmpz_mat(len(rows), cols, [x for row in rows for x in row]).rank())


def _pivot_columns(reduced, rank: int, cols: int) -> List[int]:
    """Pivot columns of a reduced row echelon form."""
    pivots = []
    column = 0
    for r in range(rank):
        while column < cols and reduced[r, column] == 0:
            column += 1
        pivots.append(column)
        column += 1
    return pivots


def _rational_rref(rows: Sequence[Sequence[Fraction]], cols: int):
    reduced, rank = _fmpq_mat(rows, cols).rref()
    return reduced, int(rank)


def rational_kernel(rows: Sequence[Sequence], cols: int = None) -> List[Tuple[Fraction, ...]]:
    """Basis of the right null space over Q; empty when trivial."""
    rows = [[Fraction(x) for x in row] for row in rows]
    cols = len(rows[0]) if rows else (cols or 0)
    if cols == 0:
        return []
    if not rows:
        return [tuple(Fraction(int(i == j)) for i in range(cols)) for j in range(cols)]

    reduced, rank = _rational_rref(rows, cols)
    pivots = _pivot_columns(reduced, rank, cols)
    pivot_set = set(pivots)
    basis = []
    for free in (c for c in range(cols) if c not in pivot_set):
        vector = [Fraction(0)] * cols
        vector[free] = Fraction(1)
        for r, pivot in enumerate(pivots):
            vector[pivot] = -_to_fraction(reduced[r, free])
        basis.append(tuple(vector))
    return basis


def rational_solve(rows: Sequence[Sequence], rhs: Sequence) -> Optional[Tuple[Fraction, ...]]:
    """A rational x with M·x = rhs (free variables zero), or None."""
    if len(rhs) != len(rows):
        raise ValidationError(f"right-hand side of length {len(rhs)} for {len(rows)} rows")
    if not rows:
        return ()
    cols = len(rows[0])
    augmented = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(rows, rhs)]
    reduced, rank = _rational_rref(augmented, cols + 1)
    pivots = _pivot_columns(reduced, rank, cols + 1)
    if pivots and pivots[-1] == cols:
        return None
    solution = [Fraction(0)] * cols
    for r, pivot in enumerate(pivots):
        solution[pivot] = _to_fraction(reduced[r, cols])
    return tuple(solution)


# Modular algebra


def random_prime(rng: random.Random, low_bits: int = 50, high_bits: int = 62) -> int:
    """Uniform random prime in [2^low_bits, 2^high_bits)."""
    while True:
        candidate = rng.randrange(1 << low_bits, 1 << high_bits) | 1
        if candidate < (1 << high_bits) and flint.fmpz(candidate).is_prime():
            return candidate


def nmod_matrix(rows: Sequence[Sequence[int]], prime: int, cols: int) -> "flint.nmod_mat":
    """nmod_mat from integer rows, setting only nonzero residues."""
    matrix = flint.nmod_mat(len(rows), cols, prime)
    for i, row in enumerate(rows):
        for j, value in enumerate(row):
            residue = value % prime
            if residue:
                matrix[i, j] = residue
    return matrix


def _to_nmod(matrix: ModMatrix) -> "flint.nmod_mat":
    return flint.nmod_mat(matrix.rows, matrix.cols, list(matrix.entries), matrix.prime)


def rank_mod_p(matrix: ModMatrix) -> int:
    """Rank over the field with p elements."""
    if matrix.rows == 0 or matrix.cols == 0:
        return 0
    return int(_to_nmod(matrix).rank())


def in_row_span_mod_p(matrix: ModMatrix, vector: Sequence[int]) -> bool:
    """True iff vector lies in the row span of matrix over F_p."""
    if len(vector) != matrix.cols:
        raise ValidationError(
            f"vector of length {len(vector)} does not match {matrix.cols} columns"
        )
    if all(x % matrix.prime == 0 for x in vector):
        return True
    stacked = ModMatrix.from_rows(matrix.to_rows() + [list(vector)], matrix.prime)
    return rank_mod_p(stacked) == rank_mod_p(matrix)


def rref_mod_p(matrix: "flint.nmod_mat") -> Tuple["flint.nmod_mat", int, List[int]]:
    """Reduced row echelon form, rank and pivot columns of an nmod_mat."""
    if matrix.nrows() == 0 or matrix.ncols() == 0:
        return matrix, 0, []
    reduced, rank = matrix.rref()
    rank = int(rank)
    return reduced, rank, _pivot_columns(reduced, rank, matrix.ncols())


def kernel_from_rref(reduced, pivots: Sequence[int], cols: int, prime: int) -> List[List[int]]:
    """Right null space basis read off a reduced row echelon form."""
    pivot_set = set(pivots)
    basis = []
    for free in (c for c in range(cols) if c not in pivot_set):
        vector = [0] * cols
        vector[free] = 1
        for r, pivot in enumerate(pivots):
            vector[pivot] = (-int(reduced[r, free])) % prime
        basis.append(vector)
    return basis


def kernel_mod_p(matrix: ModMatrix) -> List[Tuple[int, ...]]:
    """Basis of the right null space over F_p."""
    if matrix.rows == 0:
        return [tuple(int(i == j) for i in range(matrix.cols)) for j in range(matrix.cols)]
    reduced, _, pivots = rref_mod_p(_to_nmod(matrix))
    return [tuple(v) for v in kernel_from_rref(reduced, pivots, matrix.cols, matrix.prime)]


# Certified membership


def certify_row_span(rows: Sequence[Sequence[int]], target: Sequence[int], prime: int) -> Optional[Tuple[bool, int]]:
    """Exact decision of target ∈ rowspan_Q(rows), guided by one prime.

    Returns (member, certified_rank) or None when the prime was unlucky and
    no certificate could be verified. The rank is that of the pivot block,
    which is a lower bound for the rational rank.
    """
    nrows = len(rows)
    cols = len(target)
    if nrows == 0:
        return (not any(target), 0)
    if any(len(row) != cols for row in rows):
        raise ValidationError("target length does not match the constraint rows")

    modular = nmod_matrix(rows, prime, cols)
    reduced, rank, pivot_cols = rref_mod_p(modular)
    if rank == 0:
        if not any(target):
            return (True, 0)
        # no pivots mod p; an exact zero matrix is the only certifiable case
        if all(x == 0 for row in rows for x in row):
            return (False, 0)
        return None
    _, _, pivot_rows = rref_mod_p(modular.transpose())

    residuals = {}
    pivot_set = set(pivot_cols)
    for free in (c for c in range(cols) if c not in pivot_set):
        value = (target[free] - sum(target[c] * int(reduced[i, free]) for i, c in enumerate(pivot_cols))) % prime
        if value:
            residuals[free] = value

    block = flint.fmpz_mat([[rows[r][c] for c in pivot_cols] for r in pivot_rows])
    sub_rows = flint.fmpz_mat([list(rows[r]) for r in pivot_rows])

    try:
        if not residuals:
            rhs = flint.fmpz_mat([[target[c]] for c in pivot_cols])
            numerators, denominator = block.transpose().solve(rhs).numer_denom()
            combination = numerators.transpose() * sub_rows
            scaled_target = flint.fmpz_mat([[int(denominator) * x for x in target]])
            if combination == scaled_target:
                return (True, rank)
            logger.debug(f"row-span certificate rejected at prime {prime}")
            return None

        free = min(residuals)
        rhs = flint.fmpz_mat([[-rows[r][free]] for r in pivot_rows])
        numerators, denominator = block.solve(rhs).numer_denom()
        kernel = [0] * cols
        kernel[free] = int(denominator)
        for i, c in enumerate(pivot_cols):
            kernel[c] = int(numerators[i, 0])
        product = flint.fmpz_mat([list(row) for row in rows]) * flint.fmpz_mat([[x] for x in kernel])
        if any(int(product[i, 0]) for i in range(nrows)):
            logger.debug(f"kernel certificate rejected at prime {prime}")
            return None
        if sum(t * k for t, k in zip(target, kernel)) == 0:
            return None
        return (False, rank)
    except ZeroDivisionError:
        return None
