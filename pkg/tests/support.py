"""Independent oracles and generators used to cross-check the library.

Everything here recomputes results from first principles with brute force:
exhaustive searches over permutations, critical-value grids, and candidate
coefficient vectors.  The oracles only touch Matrix as a data container
(shape and row access); all arithmetic is hand-rolled min/max over
Fractions so that a bug in the library cannot hide inside its own oracle.
"""

from fractions import Fraction
from itertools import combinations, permutations, product

from maxmin import Matrix


def random_matrix(rng, nrows, ncols, denominator=20):
    """Matrix with entries drawn uniformly from the 1/denominator grid."""
    rows = [
        [Fraction(rng.randint(0, denominator), denominator) for _ in range(ncols)]
        for _ in range(nrows)
    ]
    return Matrix.from_rows(rows)


def random_point(rng, dim, denominator=20):
    return tuple(Fraction(rng.randint(0, denominator), denominator) for _ in range(dim))


def apply_matrix(a, coefficients):
    """max-min product computed with builtin min/max only."""
    return tuple(
        max(min(a.row(i)[j], coefficients[j]) for j in range(a.ncols))
        for i in range(a.nrows)
    )


# ---------------------------------------------------------------------------
# membership

def span_member_oracle(a, x):
    """Search for coefficients with a (x) lam == x over a finite grid.

    Any witness can be rounded coordinatewise down to the largest critical
    value (an entry of a, a coordinate of x, or 0) without changing the
    product, so searching the critical grid is exact.  Candidates for each
    coefficient are further capped by the obvious necessity
    min(a_ij, lam_j) <= x_i.
    """
    if a.nrows != len(x):
        raise ValueError("dimension mismatch")
    criticals = sorted({Fraction(0), Fraction(1)} | set(a.entries()) | set(x))
    pools = []
    for j in range(a.ncols):
        cap = Fraction(1)
        for i in range(a.nrows):
            if a.row(i)[j] > x[i]:
                cap = min(cap, x[i])
        pools.append([c for c in criticals if c <= cap])
    for lam in product(*pools):
        if apply_matrix(a, lam) == tuple(x):
            return lam
    return None


def hull_member_oracle(a, x):
    """Hull membership: span membership after appending the all-ones row."""
    rows = [a.row(i) for i in range(a.nrows)]
    rows.append((Fraction(1),) * a.ncols)
    return span_member_oracle(Matrix.from_rows(rows), tuple(x) + (Fraction(1),))


# ---------------------------------------------------------------------------
# trapezoidal arrangements

def _arrangement_is_trapezoidal(a, row_perm, col_perm):
    m = len(row_perm)
    n = len(col_perm)
    for i in range(m):
        pivot = a.row(row_perm[i])[col_perm[i]]
        for r in range(i + 1):
            for j in range(r + 1, n):
                if a.row(row_perm[r])[col_perm[j]] >= pivot:
                    return False
    return True


def trapezoidal_exists_oracle(a):
    """Try every row permutation against every column permutation."""
    if a.nrows > a.ncols:
        raise ValueError("more rows than columns")
    for row_perm in permutations(range(a.nrows)):
        for col_perm in permutations(range(a.ncols)):
            if _arrangement_is_trapezoidal(a, row_perm, col_perm):
                return True
    return False


def brute_rank(a):
    """Largest k admitting a trapezoidal k x (k+1) submatrix arrangement."""
    for k in range(min(a.nrows, a.ncols - 1), 0, -1):
        for rows in combinations(range(a.nrows), k):
            for cols in combinations(range(a.ncols), k + 1):
                if trapezoidal_exists_oracle(a.submatrix(rows, cols)):
                    return k
    return 0


def brute_max_square_regular(a):
    """Largest k admitting a trapezoidal k x k submatrix arrangement."""
    for k in range(min(a.nrows, a.ncols), 0, -1):
        for rows in combinations(range(a.nrows), k):
            for cols in combinations(range(a.ncols), k):
                if trapezoidal_exists_oracle(a.submatrix(rows, cols)):
                    return k
    return 0


# ---------------------------------------------------------------------------
# linear systems

def solutions_on_grid(a, b):
    """All solutions of a (x) x == b with coordinates in {0, 1} + {b_i}.

    Exhausting that grid decides solvability and uniqueness exactly: the
    principal solution only takes values in {1} + {b_i}, and whenever any
    further solution exists, lowering a single principal coordinate to 0 or
    to some b_i yields another solution on the grid.
    """
    grid = sorted({Fraction(0), Fraction(1)} | set(b))
    found = []
    for x in product(grid, repeat=a.ncols):
        if apply_matrix(a, x) == tuple(b):
            found.append(x)
    return found


def uniqueness_verdicts(a, b):
    """(solvable, unique, unique among max-1 vectors) by grid enumeration."""
    found = solutions_on_grid(a, b)
    normalized = [x for x in found if x and max(x) == 1]
    return bool(found), len(found) == 1, len(normalized) == 1
