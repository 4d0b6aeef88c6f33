"""Tests for src/models/matrix.py"""

import json

import pytest

from src.models.matrix import IntMatrix, ModMatrix
from src.utils.error_handler import ValidationError


class TestIntMatrix:
    """Tests for the IntMatrix model"""

    def test_from_rows_shape(self):
        M = IntMatrix.from_rows([[1, 2, 3], [4, 5, 6]])
        assert (M.rows, M.cols) == (2, 3)
        assert M[1, 2] == 6

    def test_ragged_rows_raise(self):
        with pytest.raises(ValidationError):
            IntMatrix.from_rows([[1, 2], [3]])

    def test_from_columns(self):
        M = IntMatrix.from_columns([[1, 2], [3, 4]])
        assert M.to_rows() == [[1, 3], [2, 4]]

    def test_transpose_twice(self):
        M = IntMatrix.from_rows([[1, 2, 3], [4, 5, 6]])
        assert M.transpose().transpose() == M

    def test_matmul_identity(self):
        M = IntMatrix.from_rows([[1, 2], [3, 4]])
        assert M.matmul(IntMatrix.identity(2)) == M

    def test_matmul_shape_mismatch(self):
        with pytest.raises(ValidationError):
            IntMatrix.identity(2).matmul(IntMatrix.identity(3))

    def test_apply(self):
        assert IntMatrix.from_rows([[1, 2], [3, 4]]).apply([1, -1]) == (-1, -1)

    def test_hstack(self):
        M = IntMatrix.identity(2).hstack(IntMatrix.from_rows([[5], [6]]))
        assert M.to_rows() == [[1, 0, 5], [0, 1, 6]]

    def test_to_json(self):
        assert json.loads(IntMatrix.diagonal([2, 3]).to_json()) == [[2, 0], [0, 3]]

    def test_zeros(self):
        assert IntMatrix.zeros(2, 3).entries == (0,) * 6


class TestModMatrix:
    """Tests for the ModMatrix model"""

    def test_reduces_entries(self):
        M = ModMatrix.from_rows([[-1, 8]], 7)
        assert M.to_rows() == [[6, 1]]

    def test_rejects_unreduced_entries(self):
        with pytest.raises(ValidationError):
            ModMatrix(7, 1, 1, (7,))

    def test_from_int_matrix(self):
        M = ModMatrix.from_int_matrix(IntMatrix.from_rows([[10, -3]]), 5)
        assert M.row(0) == (0, 2)
