"""Span and hull membership via residuation, plus a 2d raster helper.

A point x lies in the span of the columns of A iff the principal candidate

    xhat_j = min_i residual(a_ij, x_i)

reproduces it: A (x) xhat = x. The candidate is the greatest solution of
A (x) t <= x, so failure of the one candidate rules out every coefficient
vector. Hull membership (combinations with some coefficient equal to 1)
reduces to span membership of (x, 1) against A with an all-ones row
appended; the appended row forces max_j(coefficient_j) = 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import Matrix, ONE, ShapeError, Vector, mat_vec, residual

__all__ = [
    "MembershipResult",
    "homogenize",
    "span_membership",
    "hull_membership",
    "hull_raster_2d",
]


@dataclass(frozen=True)
class MembershipResult:
    """Outcome of a membership query.

    `witness` is the principal coefficient vector when member (for hull
    queries its maximum is 1); `failing_row` is the first row where the
    principal candidate misses the target (for hull queries, row index
    d means the appended normalization row).
    """

    member: bool
    witness: Vector | None
    failing_row: int | None


def homogenize(a: Matrix) -> Matrix:
    """Append an all-ones row: generators become (column, 1)."""
    return Matrix(a.rows + (tuple(ONE for _ in range(a.ncols)),))


def span_membership(a: Matrix, x: Vector) -> MembershipResult:
    if len(x) != a.nrows:
        raise ShapeError(f"matrix has {a.nrows} rows, point has {len(x)}")
    xhat = tuple(
        min(residual(a.rows[i][j], x[i]) for i in range(a.nrows))
        for j in range(a.ncols)
    )
    image = mat_vec(a, xhat)
    if image == x:
        return MembershipResult(True, xhat, None)
    fail = next(i for i in range(a.nrows) if image[i] != x[i])
    return MembershipResult(False, None, fail)


def hull_membership(a: Matrix, x: Vector) -> MembershipResult:
    if len(x) != a.nrows:
        raise ShapeError(f"matrix has {a.nrows} rows, point has {len(x)}")
    return span_membership(homogenize(a), x + (ONE,))


def hull_raster_2d(a: Matrix, resolution: int) -> tuple[tuple[bool, ...], ...]:
    """Exact membership verdicts on the (resolution+1)^2 unit-square grid.

    grid[i][j] is the verdict for the point (i/resolution, j/resolution).
    """
    if a.nrows != 2:
        raise ShapeError(f"raster needs a 2-row matrix, got {a.nrows} rows")
    if resolution < 1:
        raise ValueError(f"resolution must be positive, got {resolution}")
    ahat = homogenize(a)
    res = Fraction(resolution)
    grid = []
    for i in range(resolution + 1):
        xi = i / res
        row = []
        for j in range(resolution + 1):
            pt = (xi, j / res, ONE)
            row.append(span_membership(ahat, pt).member)
        grid.append(tuple(row))
    return tuple(grid)
