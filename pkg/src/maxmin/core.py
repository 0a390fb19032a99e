"""Exact arithmetic for the max-min (fuzzy) semiring on the unit interval.

Scalars are exact rationals in [0, 1]. Addition is max, multiplication is
min, zero is 0 and one is 1. The order is the key structural fact:

    max(a, b) = b  <=>  a <= b  <=>  min(a, b) = a

Everything downstream (segments, hulls, rank) is built on comparisons, so
all values are `fractions.Fraction` and nothing is ever rounded. Floats are
rejected at the boundary: a binary float does not represent a decimal
literal exactly, and a silently corrupted scalar would poison every
comparison after it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence, Union

__all__ = [
    "Scalar",
    "ScalarLike",
    "Vector",
    "ZERO",
    "ONE",
    "ShapeError",
    "scalar",
    "vector",
    "oplus",
    "otimes",
    "residual",
    "vec_oplus",
    "vec_otimes",
    "Matrix",
    "mat_vec",
    "linear_combination",
    "scale_matrix",
]

Scalar = Fraction
ScalarLike = Union[Fraction, int, str]
Vector = tuple[Fraction, ...]

ZERO = Fraction(0)
ONE = Fraction(1)


class ShapeError(ValueError):
    """Operands have incompatible dimensions."""


def scalar(value: ScalarLike) -> Fraction:
    """Parse `value` into an exact rational in [0, 1].

    Accepts Fraction, int, or a string in decimal (".07") or ratio
    ("7/100") form. Floats are rejected rather than converted.
    """
    if isinstance(value, float):
        raise TypeError(
            f"refusing float {value!r}: pass a string or Fraction for exact arithmetic"
        )
    q = Fraction(value)
    if q < ZERO or q > ONE:
        raise ValueError(f"scalar {q} outside [0, 1]")
    return q


def vector(values: Iterable[ScalarLike]) -> Vector:
    """Build a vector of scalars; at least one coordinate is required."""
    v = tuple(scalar(x) for x in values)
    if not v:
        raise ShapeError("empty vector")
    return v


def oplus(a: Fraction, b: Fraction) -> Fraction:
    """Semiring addition: max."""
    return a if a >= b else b


def otimes(a: Fraction, b: Fraction) -> Fraction:
    """Semiring multiplication: min."""
    return a if a <= b else b


def residual(a: Fraction, b: Fraction) -> Fraction:
    """Largest t with min(a, t) <= b, i.e. 1 if a <= b else b.

    Adjoint to otimes: min(a, t) <= b  <=>  t <= residual(a, b).
    """
    return ONE if a <= b else b


def _check_same_dim(x: Sequence[Fraction], y: Sequence[Fraction]) -> None:
    if len(x) != len(y):
        raise ShapeError(f"vector dimensions differ: {len(x)} vs {len(y)}")


def vec_oplus(x: Vector, y: Vector) -> Vector:
    """Componentwise max."""
    _check_same_dim(x, y)
    return tuple(a if a >= b else b for a, b in zip(x, y))


def vec_otimes(beta: Fraction, x: Vector) -> Vector:
    """Scale a vector: componentwise min with `beta`."""
    return tuple(beta if beta <= a else a for a in x)


@dataclass(frozen=True)
class Matrix:
    """Immutable d x n matrix of scalars, stored row-major.

    Columns are the generator points of a hull; rows are coordinates.
    Construct via `Matrix.from_rows` unless the entries are already exact.
    """

    rows: tuple[Vector, ...]

    def __post_init__(self) -> None:
        if not self.rows:
            raise ShapeError("matrix needs at least one row")
        n = len(self.rows[0])
        if n == 0:
            raise ShapeError("matrix needs at least one column")
        for r in self.rows:
            if len(r) != n:
                raise ShapeError("ragged rows")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[ScalarLike]]) -> "Matrix":
        return cls(tuple(vector(r) for r in rows))

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0])

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def row(self, i: int) -> Vector:
        return self.rows[i]

    def col(self, j: int) -> Vector:
        return tuple(r[j] for r in self.rows)

    def entries(self) -> Iterator[Fraction]:
        for r in self.rows:
            yield from r

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "Matrix":
        return Matrix(tuple(tuple(self.rows[i][j] for j in cols) for i in rows))

    def permuted(self, row_perm: Sequence[int], col_perm: Sequence[int]) -> "Matrix":
        """Reorder rows and columns; perm[i] is the source index of slot i."""
        if sorted(row_perm) != list(range(self.nrows)):
            raise ShapeError(f"bad row permutation {row_perm!r}")
        if sorted(col_perm) != list(range(self.ncols)):
            raise ShapeError(f"bad column permutation {col_perm!r}")
        return self.submatrix(row_perm, col_perm)


def mat_vec(a: Matrix, x: Vector) -> Vector:
    """Max-min product A (x) x: coordinate i is max_j min(a_ij, x_j)."""
    if len(x) != a.ncols:
        raise ShapeError(f"matrix has {a.ncols} columns, vector has {len(x)}")
    out = []
    for r in a.rows:
        best = ZERO
        for e, v in zip(r, x):
            t = e if e <= v else v
            if t > best:
                best = t
        out.append(best)
    return tuple(out)


def linear_combination(a: Matrix, coefficients: Vector) -> Vector:
    """The point max_j min(coeff_j, column_j), i.e. mat_vec(a, coefficients).

    This is the combination-of-generators view of the same product: the
    hull of the columns is exactly the set of such points with some
    coefficient equal to 1.
    """
    return mat_vec(a, coefficients)


def scale_matrix(coefficients: ScalarLike | Vector, a: Matrix) -> Matrix:
    """Scale column j by coefficients[j]: entries become min(c_j, a_ij).

    A single scalar broadcasts to every column, capping the whole matrix.
    """
    if isinstance(coefficients, (str, int, Fraction)):
        coefficients = tuple(scalar(coefficients) for _ in range(a.ncols))
    if len(coefficients) != a.ncols:
        raise ShapeError(f"matrix has {a.ncols} columns, got {len(coefficients)} coefficients")
    return Matrix(
        tuple(
            tuple(c if c <= e else e for c, e in zip(coefficients, r))
            for r in a.rows
        )
    )
