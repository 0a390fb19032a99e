"""Max-min linear systems A (x) x = b over scalars in [0, 1].

The principal candidate xhat_j = min_i residual(a_ij, b_i) is the
greatest vector with A (x) xhat <= b, so the system is solvable iff the
candidate reproduces b exactly. Uniqueness reduces to a per-coordinate
test on the cover sets {j : min(a_ij, xhat_j) = b_i}: lowering a single
coordinate of the greatest solution yields another solution unless some
row covers that coordinate alone at full height, and any differing
solution can be pushed back up to such a one-coordinate drop.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Matrix, ONE, ShapeError, Vector, ZERO, mat_vec, residual, scale_matrix
from .regularity import Certificate, CertificateError, verify_certificate

__all__ = ["SolutionReport", "solve", "build_unique_system"]


@dataclass(frozen=True)
class SolutionReport:
    """Everything `solve` determines about one system.

    `principal` is the greatest vector whose image stays below the right
    hand side; `solves` says whether its image is exactly b (then it is
    the greatest solution, and no solution exists otherwise, with
    `failing_row` the first row missed). `cover_sets[i]` lists the
    columns where row i attains b_i at the principal vector. `unique`
    means the principal vector is the only solution; `unique_normalized`
    means it is the only solution with maximum coordinate 1.
    """

    principal: Vector
    image: Vector
    solves: bool
    failing_row: int | None
    cover_sets: tuple[frozenset[int], ...]
    unique: bool
    unique_normalized: bool


def _coordinate_pinned(
    j: int, b: Vector, xhat: Vector, cover_sets: tuple[frozenset[int], ...]
) -> bool:
    # Coordinate j cannot be lowered at all iff it already sits on the
    # domain floor, or some row relies on j alone and needs it at full
    # height x_j = b_i = xhat_j.
    if xhat[j] == ZERO:
        return True
    return any(
        cover == {j} and b[i] == xhat[j] for i, cover in enumerate(cover_sets)
    )


def solve(a: Matrix, b: Vector) -> SolutionReport:
    if len(b) != a.nrows:
        raise ShapeError(f"matrix has {a.nrows} rows, right hand side has {len(b)}")
    d, n = a.shape
    xhat = tuple(
        min(residual(a.rows[i][j], b[i]) for i in range(d)) for j in range(n)
    )
    image = mat_vec(a, xhat)
    solves = image == b
    failing = None if solves else next(i for i in range(d) if image[i] != b[i])
    cover_sets = tuple(
        frozenset(j for j in range(n) if min(a.rows[i][j], xhat[j]) == b[i])
        for i in range(d)
    )
    if solves:
        unique = all(_coordinate_pinned(j, b, xhat, cover_sets) for j in range(n))
        if max(xhat) != ONE:
            unique_normalized = False
        else:
            # Only coordinates whose removal still leaves a 1 somewhere can
            # be lowered without breaking normalization.
            unique_normalized = all(
                _coordinate_pinned(j, b, xhat, cover_sets)
                for j in range(n)
                if any(xhat[t] == ONE for t in range(n) if t != j)
            )
    else:
        unique = unique_normalized = False
    return SolutionReport(xhat, image, solves, failing, cover_sets, unique, unique_normalized)


def build_unique_system(a: Matrix, cert: Certificate) -> tuple[Vector, Vector]:
    """Right hand side with a prescribed unique normalized solution.

    `cert` must be a rectangular certificate for the top `cert.nrows`
    rows of `a` (all columns), with coefficients pairwise distinct,
    different from every entry of `a`, and below 1. Returns (b, x)
    where b collects the row maxima of `a` scaled by the certificate's
    coefficients and x is the coefficient vector itself; x is then the
    unique solution of A (x) x = b with maximum coordinate 1.
    """
    if cert.omitted_col is None:
        raise CertificateError("a rectangular certificate is required")
    if cert.ncols != a.ncols or cert.nrows > a.nrows:
        raise CertificateError(
            f"certificate shape {cert.nrows} x {cert.ncols} does not fit matrix {a.shape}"
        )
    top = a.submatrix(range(cert.nrows), range(a.ncols))
    if not verify_certificate(top, cert):
        raise CertificateError("certificate does not certify the top rows")
    lams = list(cert.lambdas.values())
    if len(set(lams)) != len(lams):
        raise CertificateError("coefficients must be pairwise distinct")
    if ONE in lams:
        raise CertificateError("coefficients must stay below 1")
    entries = set(a.entries())
    if any(v in entries for v in lams):
        raise CertificateError("coefficients must differ from every matrix entry")
    x = cert.coefficient_vector()
    b = tuple(max(row) for row in scale_matrix(x, a).rows)
    return b, x
