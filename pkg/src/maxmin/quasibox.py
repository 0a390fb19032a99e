"""Quasiboxes: product-shaped dimension witnesses inside a hull.

A quasibox groups coordinates into blocks that move in lockstep: every
coordinate of block c carries a common value within `epsilon` of the
block's level, while the remaining coordinates are pinned to fixed
values. With k blocks the set is homeomorphic to a k-cube, so exhibiting
one inside the hull of a matrix's columns proves the hull has dimension
at least k.

Two constructions are provided. `quasibox_from_certificate` converts a
rank witness into a quasibox by scaling the witness columns with the
certificate coefficients and reading off, for every coordinate, whether
it follows one scaled column (a block member) or saturates at a row
maximum (a fixed coordinate). `dimension_lower_bound` is deliberately
independent of certificates: it enumerates small candidate boxes
anchored to the matrix's critical values and accepts one after exact
membership tests on k+1 corner points. The bottom corner together with
the k single-block-raised corners already spans the whole box as a
max-min combination, so those tests are sufficient, not just sampled
evidence.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .core import Matrix, ONE, Vector, ZERO, scalar, scale_matrix
from .hull import homogenize, span_membership
from .regularity import (
    CertificateError,
    RankWitness,
    certificate_from_trapezoidal,
    trapezoidalize,
    verify_certificate,
)
from .segments import decompose, piece_point

__all__ = [
    "Quasibox",
    "quasibox_center",
    "quasibox_point",
    "quasibox_contains",
    "QuasiboxDerivation",
    "quasibox_from_certificate",
    "dimension_lower_bound",
    "quasibox_is_polytrope_check",
]


@dataclass(frozen=True)
class Quasibox:
    """k lockstep blocks with levels and a shared half-width, rest fixed.

    Coordinates inside `blocks[c]` share one value in
    [levels[c] - epsilon, levels[c] + epsilon]; coordinates outside all
    blocks are frozen at `fixed[coord]`. Dimension equals len(blocks).
    """

    ambient: int
    blocks: tuple[frozenset[int], ...]
    levels: tuple[Fraction, ...]
    epsilon: Fraction
    fixed: dict[int, Fraction]

    def __post_init__(self) -> None:
        if self.ambient < 1:
            raise ValueError("ambient dimension must be positive")
        blocks = tuple(frozenset(b) for b in self.blocks)
        if not blocks:
            raise ValueError("a quasibox needs at least one block")
        seen: set[int] = set()
        for b in blocks:
            if not b:
                raise ValueError("blocks must be nonempty")
            if not all(isinstance(i, int) and 0 <= i < self.ambient for i in b):
                raise ValueError("block coordinates out of range")
            if b & seen:
                raise ValueError("blocks must be pairwise disjoint")
            seen |= b
        levels = tuple(scalar(v) for v in self.levels)
        if len(levels) != len(blocks):
            raise ValueError("one level per block required")
        eps = Fraction(self.epsilon)
        if eps <= 0:
            raise ValueError("epsilon must be positive")
        for v in levels:
            if v - eps < ZERO or v + eps > ONE:
                raise ValueError("block range must stay inside [0, 1]")
        rest = set(range(self.ambient)) - seen
        fixed = {i: scalar(v) for i, v in self.fixed.items()}
        if set(fixed) != rest:
            raise ValueError("fixed coordinates must be exactly those outside the blocks")
        object.__setattr__(self, "blocks", blocks)
        object.__setattr__(self, "levels", levels)
        object.__setattr__(self, "epsilon", eps)
        object.__setattr__(self, "fixed", fixed)

    @property
    def dimension(self) -> int:
        return len(self.blocks)


def quasibox_point(box: Quasibox, values: tuple[Fraction, ...]) -> Vector:
    """The box point with block c at values[c]."""
    if len(values) != len(box.blocks):
        raise ValueError("one value per block required")
    out: list[Fraction] = [ZERO] * box.ambient
    for c, b in enumerate(box.blocks):
        v = Fraction(values[c])
        if abs(v - box.levels[c]) > box.epsilon:
            raise ValueError("value outside the block's range")
        for i in b:
            out[i] = v
    for i, v in box.fixed.items():
        out[i] = v
    return tuple(out)


def quasibox_center(box: Quasibox) -> Vector:
    return quasibox_point(box, box.levels)


def quasibox_contains(box: Quasibox, z: Vector) -> bool:
    if len(z) != box.ambient:
        return False
    for c, b in enumerate(box.blocks):
        vals = {z[i] for i in b}
        if len(vals) != 1:
            return False
        v = next(iter(vals))
        if abs(v - box.levels[c]) > box.epsilon:
            return False
    return all(z[i] == v for i, v in box.fixed.items())


@dataclass(frozen=True)
class QuasiboxDerivation:
    """Trace of turning a rank witness into a quasibox.

    Index fields refer to the analyzed matrix. Position p of
    `certified_columns`, `lambdas`, `m_values`, and the box's blocks all
    describe the same block: the rows that follow certified column p.
    `alpha` maps each remaining row to its saturated value. `kappa` is
    the smallest slack between a coefficient and its floor `m`; the box
    levels sit kappa/2 below the coefficients with half-width kappa/2.
    `adjusted` records that the witness coefficients collided with
    matrix entries and were re-derived before the box was built.
    """

    columns: tuple[int, ...]
    omitted_column: int
    certified_columns: tuple[int, ...]
    lambdas: tuple[Fraction, ...]
    m_values: tuple[Fraction, ...]
    alpha: dict[int, Fraction]
    kappa: Fraction
    adjusted: bool
    box: Quasibox

    @property
    def center(self) -> Vector:
        return quasibox_center(self.box)


def _derive(
    a: Matrix, cols: tuple[int, ...], lam: dict[int, Fraction], omitted: int
) -> tuple[dict[int, list[int]], dict[int, Fraction], dict[int, Fraction], Fraction, bool]:
    """One derivation pass over all rows x witness columns.

    Returns (blocks by certified local column, fixed row values, floor
    values m, kappa, sound). `sound` reports whether every fixed row
    keeps its value constant across the whole box: some column must hold
    the row maximum with an unscaled entry, i.e. the omitted column or a
    certified one whose coefficient stays at least kappa above it.
    """
    d = a.nrows
    sub = a.submatrix(range(d), cols)
    w = sub.ncols
    coeff = tuple(ONE if s == omitted else lam[s] for s in range(w))
    scaled = scale_matrix(coeff, sub)
    certified = [s for s in range(w) if s != omitted]
    joins: dict[int, list[int]] = {s: [] for s in certified}
    alpha: dict[int, Fraction] = {}
    for ell in range(d):
        row = scaled.rows[ell]
        top = max(row)
        attained = [s for s in range(w) if row[s] == top]
        s0 = attained[0]
        if len(attained) == 1 and s0 != omitted and top == lam[s0]:
            joins[s0].append(ell)
        else:
            alpha[ell] = top
    m: dict[int, Fraction] = {}
    for s in certified:
        floor = ZERO
        for value in alpha.values():
            if floor < value < lam[s]:
                floor = value
        for ell in joins[s]:
            row = scaled.rows[ell]
            for t in range(w):
                if t != s and row[t] > floor:
                    floor = row[t]
        m[s] = floor
    kappa = min(lam[s] - m[s] for s in certified)
    sound = True
    for ell, value in alpha.items():
        raw = sub.rows[ell]
        if not any(
            raw[s] == value and (s == omitted or lam[s] - kappa >= value)
            for s in range(w)
        ):
            sound = False
            break
    return joins, alpha, m, kappa, sound


def quasibox_from_certificate(a: Matrix, witness: RankWitness) -> QuasiboxDerivation:
    """Build a rank-dimensional quasibox inside the hull of `a`'s columns.

    The witness columns are scaled by the certificate coefficients; rows
    whose scaled maximum is one coefficient, attained only there, form
    that column's block, and every other row is fixed at its scaled row
    maximum. When a fixed row cannot hold its value across the whole box
    (its maximum is only attained by scaled-down coefficients, which
    happens when coefficients collide with matrix entries), the
    coefficients are re-derived away from every entry and the pass is
    repeated; that always succeeds and is flagged `adjusted`.
    """
    cert = witness.certificate
    if witness.rank < 1 or cert is None:
        raise CertificateError("a witness of rank at least 1 is required")
    if cert.omitted_col is None:
        raise CertificateError("the witness certificate must be rectangular")
    k = witness.rank
    cols = witness.cols
    if len(witness.rows) != k or len(cols) != k + 1:
        raise CertificateError("witness index sets do not match its rank")
    top = a.submatrix(witness.rows, cols)
    if not verify_certificate(top, cert):
        raise CertificateError("the certificate does not certify the witness submatrix")
    lam = dict(cert.lambdas)
    omitted = cert.omitted_col
    joins, alpha, m, kappa, sound = _derive(a, cols, lam, omitted)
    adjusted = False
    if not sound:
        found = trapezoidalize(top)
        if found is None:
            raise CertificateError("witness submatrix admits no trapezoidal ordering")
        fresh = certificate_from_trapezoidal(top, *found, avoid=tuple(a.entries()))
        lam = dict(fresh.lambdas)
        omitted = fresh.omitted_col
        joins, alpha, m, kappa, sound = _derive(a, cols, lam, omitted)
        if not sound:
            raise CertificateError("coefficient normalization failed")
        adjusted = True
    certified_local = sorted(lam)
    half = kappa / 2
    box = Quasibox(
        ambient=a.nrows,
        blocks=tuple(frozenset(joins[s]) for s in certified_local),
        levels=tuple(lam[s] - half for s in certified_local),
        epsilon=half,
        fixed=dict(alpha),
    )
    return QuasiboxDerivation(
        columns=tuple(cols),
        omitted_column=cols[omitted],
        certified_columns=tuple(cols[s] for s in certified_local),
        lambdas=tuple(lam[s] for s in certified_local),
        m_values=tuple(m[s] for s in certified_local),
        alpha=dict(alpha),
        kappa=kappa,
        adjusted=adjusted,
        box=box,
    )


def _gap_pool(lo: Fraction, hi: Fraction, den: int, count: int) -> list[Fraction]:
    # Up to `count` grid points strictly inside (lo, hi), spread around the
    # middle with a two-step stride so distinct picks stay separated.
    first = math.floor(lo * den) + 1
    last = math.ceil(hi * den) - 1
    if first > last:
        return []
    mid = (first + last) // 2
    picks: list[int] = []
    for step in range(count):
        for idx in ((mid,) if step == 0 else (mid + 2 * step, mid - 2 * step)):
            if first <= idx <= last and idx not in picks:
                picks.append(idx)
        if len(picks) >= count:
            break
    return [Fraction(i, den) for i in sorted(picks[:count])]


def _block_labelings(d: int, k: int):
    # Assign each coordinate a block 0..k-1 or -1 (fixed), every block
    # nonempty; block ids appear in first-use order so relabelings are
    # not enumerated twice.
    labels = [-1] * d

    def rec(i: int, used: int):
        if i == d:
            if used == k:
                yield tuple(labels)
            return
        for lab in range(-1, min(used + 1, k)):
            labels[i] = lab
            yield from rec(i + 1, used + 1 if lab == used else used)
        labels[i] = -1

    yield from rec(0, 0)


def dimension_lower_bound(a: Matrix, denominator: int) -> tuple[int, Quasibox | None]:
    """Certificate-free dimension bound via direct quasibox search.

    Tries k from large to small and returns the first k for which some
    candidate quasibox passes exact hull-membership tests on its bottom
    corner and its k single-block-raised corners; those corners span the
    whole box as a max-min combination, so success proves the box, and
    hence a k-cube, lies inside the hull. Candidates are anchored to the
    critical values (matrix entries plus 0 and 1): block levels are
    1/denominator grid points strictly inside gaps between consecutive
    criticals, fixed coordinates take values from their own row, and the
    half-width is the grid-floored distance to the nearest critical,
    shrunk below the separation of levels sharing a gap. The bound is
    exact when the denominator is generous: gaps of the entry grid
    should be at least about 2k+2 grid steps wide, e.g. denominator =
    2(k+1) times a common denominator of the entries.
    """
    if denominator < 1:
        raise ValueError("denominator must be positive")
    d, n = a.shape
    crit = sorted({ZERO, ONE} | set(a.entries()))
    gaps = [(crit[i], crit[i + 1]) for i in range(len(crit) - 1)]
    row_lo = [min(r) for r in a.rows]
    row_hi = [max(r) for r in a.rows]
    ahat = homogenize(a)
    one_step = Fraction(1, denominator)

    def member(z: tuple[Fraction, ...]) -> bool:
        return span_membership(ahat, z + (ONE,)).member

    def gap_of(v: Fraction) -> tuple[Fraction, Fraction]:
        for lo, hi in gaps:
            if lo < v < hi:
                return lo, hi
        raise AssertionError("candidate level collided with a critical value")

    for k in range(min(d, n - 1), 0, -1):
        pool = [p for lo, hi in gaps for p in _gap_pool(lo, hi, denominator, k)]
        for labeling in _block_labelings(d, k):
            blocks = tuple(
                frozenset(i for i in range(d) if labeling[i] == c) for c in range(k)
            )
            fixed_coords = [i for i in range(d) if labeling[i] == -1]
            block_pools = []
            for b in blocks:
                blo = max(row_lo[i] for i in b)
                bhi = min(row_hi[i] for i in b)
                block_pools.append([p for p in pool if blo < p < bhi])
            if any(not bp for bp in block_pools):
                continue
            fixed_pools = [sorted(set(a.rows[i])) for i in fixed_coords]
            for levels in product(*block_pools):
                if len(set(levels)) != k:
                    continue
                eps = ONE
                level_gaps = []
                for mu in levels:
                    lo, hi = gap_of(mu)
                    level_gaps.append((lo, hi))
                    eps = min(eps, mu - lo, hi - mu)
                for c in range(k):
                    for c2 in range(c + 1, k):
                        if level_gaps[c] == level_gaps[c2]:
                            sep = abs(levels[c] - levels[c2]) - one_step
                            if sep < eps:
                                eps = sep
                eps = Fraction(math.floor(eps * denominator), denominator)
                if eps <= 0:
                    continue
                half = eps / 2
                for fixed_values in product(*fixed_pools):
                    base = [ZERO] * d
                    for c, b in enumerate(blocks):
                        for i in b:
                            base[i] = levels[c] - half
                    for i, v in zip(fixed_coords, fixed_values):
                        base[i] = v
                    if not member(tuple(base)):
                        continue
                    ok = True
                    for c in range(k):
                        z = list(base)
                        for i in blocks[c]:
                            z[i] = levels[c] + half
                        if not member(tuple(z)):
                            ok = False
                            break
                    if ok:
                        box = Quasibox(
                            ambient=d,
                            blocks=blocks,
                            levels=tuple(levels),
                            epsilon=half,
                            fixed=dict(zip(fixed_coords, fixed_values)),
                        )
                        return k, box
    return 0, None


def quasibox_is_polytrope_check(box: Quasibox, samples: int = 25, seed: int = 0) -> bool:
    """Sampled check that a quasibox is max-min convex.

    Draws random pairs inside the box, decomposes the max-min segment
    between them, and verifies that every piece endpoint and midpoint
    stays inside the box.
    """
    rng = random.Random(seed)
    grain = 64

    def draw() -> Vector:
        values = tuple(
            box.levels[c] - box.epsilon + 2 * box.epsilon * Fraction(rng.randint(0, grain), grain)
            for c in range(len(box.blocks))
        )
        return quasibox_point(box, values)

    for _ in range(samples):
        u, v = draw(), draw()
        if not (quasibox_contains(box, u) and quasibox_contains(box, v)):
            return False
        seg = decompose(u, v)
        for piece in seg.pieces:
            lo, hi = piece.beta_interval
            points = (piece.start, piece.end, piece_point(piece, (lo + hi) / 2))
            if not all(quasibox_contains(box, p) for p in points):
                return False
    return True
