"""Strong regularity, trapezoidal orderings, and max-min rank.

A k x (k+1) matrix is strongly regular when some coefficient assignment
(one column free with coefficient 1, every other column scaled by a
positive coefficient) makes each row's maximum land on a distinct
certified column, strictly and uniquely. The square k x k variant scales
every column. Such an assignment is a `Certificate`.

Strong regularity is decided through trapezoidal orderings: row and
column orders under which each diagonal entry strictly dominates every
entry lying to the right of the diagonal in its row and all earlier
rows. `trapezoidalize` searches for such an ordering by backtracking;
`certificate_from_trapezoidal` turns one into an explicit certificate
whose coefficients avoid a caller-supplied value set, which keeps them
usable for the constructions built on top of rank witnesses.

The rank of a d x n matrix is the largest k for which some k x (k+1)
submatrix is strongly regular; it equals the dimension of the hull of
the columns.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable

from .core import Matrix, ONE, ShapeError, ZERO, scalar

__all__ = [
    "CertificateError",
    "Certificate",
    "verify_certificate",
    "is_trapezoidal",
    "trapezoidalize",
    "certificate_from_trapezoidal",
    "is_strongly_regular",
    "RankWitness",
    "rank",
    "dimension",
    "has_nonempty_interior",
    "chain_condition",
    "max_square_regular",
]


class CertificateError(ValueError):
    """A certificate is malformed or incompatible with its matrix."""


@dataclass(frozen=True)
class Certificate:
    """Column coefficients that pin each row's maximum to its own column.

    `pi[i]` is the column certified by row i. `lambdas[c]` is the
    coefficient of certified column c, in (0, 1]. A rectangular
    certificate omits one column (`omitted_col`), which keeps implicit
    coefficient 1; a square certificate has `omitted_col = None` and
    certifies every column. Column indices are local to the matrix the
    certificate is checked against.
    """

    pi: tuple[int, ...]
    lambdas: dict[int, Fraction]
    omitted_col: int | None

    def __post_init__(self) -> None:
        k = len(self.pi)
        if k == 0:
            raise CertificateError("certificate must certify at least one row")
        certified = set(self.pi)
        if len(certified) != k:
            raise CertificateError("two rows certify the same column")
        n = k if self.omitted_col is None else k + 1
        expected = set(range(n))
        if self.omitted_col is None:
            if certified != expected:
                raise CertificateError("square certificate must certify every column")
        else:
            if self.omitted_col in certified:
                raise CertificateError("omitted column cannot also be certified")
            if certified | {self.omitted_col} != expected:
                raise CertificateError(
                    "certified columns plus the omitted one must cover all columns"
                )
        clean: dict[int, Fraction] = {}
        for c, value in self.lambdas.items():
            v = scalar(value)
            if v == ZERO:
                raise CertificateError("coefficients must be strictly positive")
            clean[c] = v
        if set(clean) != certified:
            raise CertificateError("coefficient keys must match the certified columns")
        object.__setattr__(self, "lambdas", clean)

    @property
    def nrows(self) -> int:
        return len(self.pi)

    @property
    def ncols(self) -> int:
        return len(self.pi) + (0 if self.omitted_col is None else 1)

    def coefficient_vector(self) -> tuple[Fraction, ...]:
        """Per-column coefficients, 1 at the omitted column."""
        return tuple(
            ONE if c == self.omitted_col else self.lambdas[c] for c in range(self.ncols)
        )


def verify_certificate(a: Matrix, cert: Certificate) -> bool:
    """Check the defining property of `cert` against `a`, entry by entry.

    Raises CertificateError on a shape mismatch; returns whether every
    row's maximum in the scaled matrix equals its certified coefficient
    and is attained at the certified column only.
    """
    if a.shape != (cert.nrows, cert.ncols):
        raise CertificateError(
            f"certificate is for a {cert.nrows} x {cert.ncols} matrix, got {a.shape}"
        )
    coeff = cert.coefficient_vector()
    for i, ci in enumerate(cert.pi):
        lam = cert.lambdas[ci]
        for t in range(a.ncols):
            e = min(a.rows[i][t], coeff[t])
            if t == ci:
                if e != lam:
                    return False
            elif e >= lam:
                return False
    return True


def is_trapezoidal(a: Matrix) -> bool:
    """Each diagonal entry strictly dominates everything right of the
    diagonal in its own and all earlier rows."""
    m, n = a.shape
    if m > n:
        raise ShapeError(f"trapezoidal form needs nrows <= ncols, got {a.shape}")
    threshold = ZERO
    for i in range(m):
        row = a.rows[i]
        for e in row[i + 1:]:
            if e > threshold:
                threshold = e
        if row[i] <= threshold:
            return False
    return True


def trapezoidalize(
    a: Matrix,
) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """Search for orderings making `a` trapezoidal.

    Returns (row_order, col_order) with order[slot] = source index, such
    that a.permuted(row_order, col_order) is trapezoidal, or None if no
    such pair exists. Backtracking places one diagonal position at a
    time; a row/column pair is viable when its entry strictly exceeds
    both the running threshold and every other entry of the row in the
    still-unused columns, all of which end up right of the diagonal.
    Rows and columns are tried in ascending index order, so the result
    is deterministic and an already-trapezoidal matrix maps to itself.
    Leftover columns are appended in ascending order.
    """
    m, n = a.shape
    if m > n:
        raise ShapeError(f"trapezoidal form needs nrows <= ncols, got {a.shape}")
    row_order: list[int] = []
    col_order: list[int] = []
    used_row = [False] * m
    used_col = [False] * n

    def place(slot: int, threshold: Fraction) -> bool:
        if slot == m:
            return True
        for r in range(m):
            if used_row[r]:
                continue
            row = a.rows[r]
            for c in range(n):
                if used_col[c]:
                    continue
                absorbed = threshold
                for t in range(n):
                    if t != c and not used_col[t] and row[t] > absorbed:
                        absorbed = row[t]
                if row[c] <= absorbed:
                    continue
                used_row[r] = used_col[c] = True
                row_order.append(r)
                col_order.append(c)
                if place(slot + 1, absorbed):
                    return True
                used_row[r] = used_col[c] = False
                row_order.pop()
                col_order.pop()
        return False

    if not place(0, ZERO):
        return None
    col_order.extend(c for c in range(n) if not used_col[c])
    return tuple(row_order), tuple(col_order)


def certificate_from_trapezoidal(
    a: Matrix,
    row_order: tuple[int, ...],
    col_order: tuple[int, ...],
    avoid: Iterable[Fraction] = (),
) -> Certificate:
    """Build a certificate for `a` from a trapezoidal ordering of it.

    Walking the diagonal in order, each coefficient is placed strictly
    between the running threshold (and the previous coefficient) and the
    diagonal entry, at the midpoint of the first gap whose endpoints are
    entries of `a`, values in `avoid`, or 1. Midpoints of such gaps can
    collide with none of those values, so the coefficients come out
    strictly increasing along the diagonal and distinct from every entry
    and every avoided value. Callers that embed the result in a larger
    matrix pass that matrix's entries as `avoid`.
    """
    m, n = a.shape
    if n - m not in (0, 1):
        raise ShapeError(f"certificates need a k x k or k x (k+1) matrix, got {a.shape}")
    if sorted(row_order) != list(range(m)) or sorted(col_order) != list(range(n)):
        raise CertificateError("row_order/col_order must be permutations")
    criticals = sorted(set(a.entries()) | set(avoid) | {ONE})
    threshold = ZERO
    prev = ZERO
    lambdas: dict[int, Fraction] = {}
    pi_by_row: dict[int, int] = {}
    for i in range(m):
        r = row_order[i]
        row = a.rows[r]
        for t in range(i + 1, n):
            e = row[col_order[t]]
            if e > threshold:
                threshold = e
        diag = row[col_order[i]]
        if diag <= threshold:
            raise CertificateError("the given ordering is not trapezoidal")
        lo = max(threshold, prev)
        hi = min(diag, next(c for c in criticals if c > lo))
        lam = (lo + hi) / 2
        lambdas[col_order[i]] = lam
        pi_by_row[r] = col_order[i]
        prev = lam
    pi = tuple(pi_by_row[r] for r in range(m))
    omitted = col_order[m] if n == m + 1 else None
    return Certificate(pi=pi, lambdas=lambdas, omitted_col=omitted)


def is_strongly_regular(a: Matrix) -> Certificate | None:
    """Decide strong regularity of a k x k or k x (k+1) matrix.

    Returns a certificate, or None when the matrix admits none (no
    trapezoidal ordering exists exactly in that case).
    """
    m, n = a.shape
    if n - m not in (0, 1):
        raise ShapeError(
            f"strong regularity applies to k x k and k x (k+1) matrices, got {a.shape}"
        )
    found = trapezoidalize(a)
    if found is None:
        return None
    return certificate_from_trapezoidal(a, *found)


@dataclass(frozen=True)
class RankWitness:
    """A maximal strongly regular k x (k+1) submatrix with its certificate.

    `rows` and `cols` index into the analyzed matrix; `certificate`,
    `row_order`, and `col_order` are local to the submatrix they
    describe (position p refers to rows[p] / cols[p]). A rank-0 witness
    carries empty index tuples and no certificate.
    """

    rank: int
    rows: tuple[int, ...]
    cols: tuple[int, ...]
    certificate: Certificate | None
    row_order: tuple[int, ...] | None
    col_order: tuple[int, ...] | None


def rank(a: Matrix) -> RankWitness:
    """Largest k with a strongly regular k x (k+1) submatrix.

    Searches k in decreasing order; for fixed k, row sets and then
    column sets in lexicographic order; the first witness wins. The
    witness certificate's coefficients avoid every entry of `a`, not
    just the submatrix's.
    """
    d, n = a.shape
    all_entries = tuple(a.entries())
    for k in range(min(d, n - 1), 0, -1):
        for rows in combinations(range(d), k):
            for cols in combinations(range(n), k + 1):
                sub = a.submatrix(rows, cols)
                found = trapezoidalize(sub)
                if found is None:
                    continue
                cert = certificate_from_trapezoidal(sub, *found, avoid=all_entries)
                return RankWitness(k, rows, cols, cert, *found)
    return RankWitness(0, (), (), None, None, None)


def dimension(a: Matrix) -> int:
    """Dimension of the hull of the columns; equals the rank."""
    return rank(a).rank


def has_nonempty_interior(a: Matrix) -> bool:
    """Whether the hull of the columns has interior points, i.e. full rank."""
    return rank(a).rank == a.nrows


def chain_condition(a: Matrix) -> bool:
    """Consecutive columns are linked: max of column j <= min of column j+1."""
    for j in range(a.ncols - 1):
        if max(a.col(j)) > min(a.col(j + 1)):
            return False
    return True


def max_square_regular(a: Matrix) -> int:
    """Largest s with a strongly regular s x s submatrix (0 if none)."""
    d, n = a.shape
    for s in range(min(d, n), 0, -1):
        for rows in combinations(range(d), s):
            for cols in combinations(range(n), s):
                if trapezoidalize(a.submatrix(rows, cols)) is not None:
                    return s
    return 0
