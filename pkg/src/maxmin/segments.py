"""Max-min segments and their decomposition into conventional pieces.

For comparable endpoints x <= y the segment is the curve

    z(beta) = x (+) (beta (x) y),   beta in [0, 1],

whose coordinates follow a three-way split: coordinate i equals beta while
x_i <= beta <= y_i (it is "active"), stays at x_i while beta <= x_i, and
stays at y_i once beta >= y_i. Between two consecutive coordinate values
the active set is constant, so the curve is a polyline whose vertices sit
at coordinate values of x and y. A d-dimensional comparable segment breaks
into at most 2d-1 such conventional pieces; an incomparable pair x, y is
handled through the join x (+) y, giving at most 2d-2 pieces in total.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction

from .core import ShapeError, Vector, vec_oplus, _check_same_dim

__all__ = [
    "NotComparableError",
    "ElementaryPiece",
    "SegmentDecomposition",
    "segment_point",
    "decompose_comparable",
    "decompose",
    "is_ordinary",
    "piece_point",
    "piece_contains",
]


class NotComparableError(ValueError):
    """Endpoints are not componentwise ordered the way the operation needs."""


def _leq(x: Vector, y: Vector) -> bool:
    return all(a <= b for a, b in zip(x, y))


def segment_point(x: Vector, y: Vector, beta: Fraction) -> Vector:
    """Evaluate z(beta) = x (+) (beta (x) y) for comparable endpoints x <= y.

    Coordinatewise this is the clamp max(x_i, min(beta, y_i)).
    """
    _check_same_dim(x, y)
    if not _leq(x, y):
        raise NotComparableError("segment_point requires x <= y componentwise")
    out = []
    for a, b in zip(x, y):
        v = beta if beta <= b else b
        out.append(a if a >= v else v)
    return tuple(out)


@dataclass(frozen=True)
class ElementaryPiece:
    """One conventional segment of a decomposition.

    `active` coordinates equal beta throughout beta_interval; `low`
    coordinates are pinned at the min-side endpoint's value, `high` at the
    max-side endpoint's value. The three sets partition the coordinates.
    `start` and `end` are in traversal order of the enclosing
    decomposition; on pieces traversed against the beta direction (the
    second half of an incomparable decomposition) start = z(beta_hi) and
    end = z(beta_lo).
    """

    beta_interval: tuple[Fraction, Fraction]
    start: Vector
    end: Vector
    active: frozenset[int]
    low: frozenset[int]
    high: frozenset[int]


@dataclass(frozen=True)
class SegmentDecomposition:
    """Polyline form of a max-min segment.

    Pieces are ordered so the walk reads endpoints[0] -> ... ->
    endpoints[1], passing through `junction` (the join x (+) y) when the
    endpoints are incomparable. Consecutive pieces share an endpoint.
    """

    endpoints: tuple[Vector, Vector]
    comparable: bool
    junction: Vector | None
    pieces: tuple[ElementaryPiece, ...]

    def breakpoints(self) -> tuple[Fraction, ...]:
        """Sorted distinct beta values bounding the pieces."""
        vals = set()
        for p in self.pieces:
            vals.update(p.beta_interval)
        return tuple(sorted(vals))


def piece_point(piece: ElementaryPiece, beta: Fraction) -> Vector:
    """Point of the piece at parameter beta (active coords = beta)."""
    lo, hi = piece.beta_interval
    if not (lo <= beta <= hi):
        raise ValueError(f"beta {beta} outside piece interval [{lo}, {hi}]")
    # Static coordinates agree at both ends, so start works as the template.
    return tuple(
        beta if i in piece.active else piece.start[i] for i in range(len(piece.start))
    )


def piece_contains(piece: ElementaryPiece, point: Vector) -> bool:
    """Exact test that `point` lies on the piece (orientation-free)."""
    if len(point) != len(piece.start):
        return False
    lo, hi = piece.beta_interval
    level = None
    for i, v in enumerate(point):
        if i in piece.active:
            if level is None:
                level = v
            elif v != level:
                return False
        elif v != piece.start[i]:
            return False
    if level is None:
        return True
    return lo <= level <= hi


def decompose_comparable(x: Vector, y: Vector) -> SegmentDecomposition:
    """Decompose a comparable segment (x <= y required) into pieces.

    Cut points are the coordinate values of x and y. On each open gap the
    active set is constant; gaps with an empty active set contribute
    nothing (the curve stands still), and adjacent gaps with the same
    active set are merged, since the curve is one straight segment across
    a cut that only retires coordinates with x_i = y_i.
    """
    _check_same_dim(x, y)
    if not _leq(x, y):
        raise NotComparableError("decompose_comparable requires x <= y componentwise")
    if x == y:
        return SegmentDecomposition((x, y), True, None, ())

    cuts = sorted(set(x) | set(y))
    d = len(x)
    spans: list[tuple[Fraction, Fraction, frozenset[int]]] = []
    for lo, hi in zip(cuts, cuts[1:]):
        mid = (lo + hi) / 2
        active = frozenset(i for i in range(d) if x[i] <= mid <= y[i])
        if not active:
            continue
        if spans and spans[-1][2] == active:
            plo, _, _ = spans.pop()
            spans.append((plo, hi, active))
        else:
            spans.append((lo, hi, active))

    pieces = []
    for lo, hi, active in spans:
        start = segment_point(x, y, lo)
        end = segment_point(x, y, hi)
        low = frozenset(i for i in range(d) if i not in active and x[i] >= hi)
        high = frozenset(i for i in range(d) if i not in active and i not in low)
        pieces.append(ElementaryPiece((lo, hi), start, end, active, low, high))
    return SegmentDecomposition((x, y), True, None, tuple(pieces))


def _reversed_pieces(pieces: tuple[ElementaryPiece, ...]) -> tuple[ElementaryPiece, ...]:
    return tuple(replace(p, start=p.end, end=p.start) for p in reversed(pieces))


def decompose(x: Vector, y: Vector) -> SegmentDecomposition:
    """Decompose the segment between arbitrary endpoints.

    Comparable endpoints delegate to `decompose_comparable`, reoriented if
    needed so the pieces read x -> y. Incomparable endpoints split at the
    junction x (+) y: the walk climbs from x to the junction, then descends
    to y.
    """
    _check_same_dim(x, y)
    if _leq(x, y):
        return decompose_comparable(x, y)
    if _leq(y, x):
        base = decompose_comparable(y, x)
        return SegmentDecomposition((x, y), True, None, _reversed_pieces(base.pieces))
    top = vec_oplus(x, y)
    up = decompose_comparable(x, top)
    down = decompose_comparable(y, top)
    return SegmentDecomposition(
        (x, y), False, top, up.pieces + _reversed_pieces(down.pieces)
    )


def is_ordinary(y: Vector, u: tuple[Fraction, ...]) -> bool:
    """Whether [y, y + u] in the max-min sense is the plain segment.

    u is a nonnegative displacement with y + u still in the unit cube.
    The criterion: on the support of u, all y_i agree and all u_i agree.
    Otherwise the max-min segment picks up points off the line y + t*u.
    """
    _check_same_dim(y, u)
    tip = []
    for a, du in zip(y, u):
        if du < 0:
            raise ValueError(f"displacement {du} is negative")
        s = a + du
        if s > 1:
            raise ValueError(f"y + u leaves the unit cube (coordinate {s})")
        tip.append(s)
    support = [i for i, du in enumerate(u) if du != 0]
    if not support:
        return True
    i0 = support[0]
    return all(y[i] == y[i0] and u[i] == u[i0] for i in support)
