"""
Filename: matrix.py
Created Date: 2026-10-18
Description: Matrix data models.

Immutable integer and modular matrices exchanged between the linear-algebra
layer and the services, plus the Smith normal form result.
"""

import json
from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

from ..utils.error_handler import ValidationError


@dataclass(frozen=True)
class IntMatrix:
    """Integer matrix stored row-major"""
    rows: int
    cols: int
    entries: Tuple[int, ...]

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise ValidationError(
                f"IntMatrix {self.rows}x{self.cols} needs {self.rows * self.cols} entries, got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int = None) -> "IntMatrix":
        rows = [list(row) for row in rows]
        width = len(rows[0]) if rows else (cols or 0)
        for row in rows:
            if len(row) != width:
                raise ValidationError("ragged rows in integer matrix")
        return cls(len(rows), width, tuple(int(x) for row in rows for x in row))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]]) -> "IntMatrix":
        return cls.from_rows(columns).transpose()

    @classmethod
    def identity(cls, size: int) -> "IntMatrix":
        return cls.diagonal([1] * size)

    @classmethod
    def diagonal(cls, values: Sequence[int]) -> "IntMatrix":
        size = len(values)
        return cls.from_rows(
            [[values[i] if i == j else 0 for j in range(size)] for i in range(size)],
            cols=size,
        )

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, (0,) * (rows * cols))

    def __getitem__(self, index: Tuple[int, int]) -> int:
        i, j = index
        return self.entries[i * self.cols + j]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def row(self, i: int) -> Tuple[int, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> Tuple[int, ...]:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_rows(self) -> List[List[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "IntMatrix":
        return IntMatrix(
            self.cols, self.rows,
            tuple(self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)),
        )

    def matmul(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValidationError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        other_columns = [other.column(j) for j in range(other.cols)]
        entries = []
        for i in range(self.rows):
            row = self.row(i)
            entries.extend(sum(a * b for a, b in zip(row, col)) for col in other_columns)
        return IntMatrix(self.rows, other.cols, tuple(entries))

    def apply(self, vector: Sequence[int]) -> Tuple[int, ...]:
        """Matrix-vector product"""
        if len(vector) != self.cols:
            raise ValidationError(f"vector of length {len(vector)} does not match {self.cols} columns")
        return tuple(sum(a * b for a, b in zip(self.row(i), vector)) for i in range(self.rows))

    def hstack(self, other: "IntMatrix") -> "IntMatrix":
        if self.rows != other.rows:
            raise ValidationError("hstack needs equal row counts")
        return IntMatrix.from_rows(
            [list(self.row(i)) + list(other.row(i)) for i in range(self.rows)],
            cols=self.cols + other.cols,
        )

    def to_json(self) -> str:
        return json.dumps(self.to_rows())


@dataclass(frozen=True)
class SnfResult:
    """Smith normal form U·M·V = D"""
    U: IntMatrix
    D: IntMatrix
    V: IntMatrix

    @property
    def diagonal(self) -> Tuple[int, ...]:
        return tuple(self.D[i, i] for i in range(min(self.D.rows, self.D.cols)))

    @property
    def invariant_factors(self) -> Tuple[int, ...]:
        return tuple(d for d in self.diagonal if d != 0)

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)


@dataclass(frozen=True)
class ModMatrix:
    """Matrix of residues modulo a prime"""
    prime: int
    rows: int
    cols: int
    entries: Tuple[int, ...]

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise ValidationError("ModMatrix entry count does not match its shape")
        if any(not 0 <= x < self.prime for x in self.entries):
            raise ValidationError(f"ModMatrix entries must lie in [0, {self.prime})")

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]], prime: int, cols: int = None) -> "ModMatrix":
        rows = [list(row) for row in rows]
        width = len(rows[0]) if rows else (cols or 0)
        for row in rows:
            if len(row) != width:
                raise ValidationError("ragged rows in modular matrix")
        return cls(prime, len(rows), width, tuple(int(x) % prime for row in rows for x in row))

    @classmethod
    def from_int_matrix(cls, matrix: IntMatrix, prime: int) -> "ModMatrix":
        return cls(prime, matrix.rows, matrix.cols, tuple(x % prime for x in matrix.entries))

    @classmethod
    def identity(cls, size: int, prime: int) -> "ModMatrix":
        return cls.from_int_matrix(IntMatrix.identity(size), prime)

    def row(self, i: int) -> Tuple[int, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> List[List[int]]:
        return [list(self.row(i)) for i in range(self.rows)]
