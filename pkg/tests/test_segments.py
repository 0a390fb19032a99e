import random
from fractions import Fraction

import pytest

from maxmin import (
    NotComparableError,
    decompose,
    decompose_comparable,
    is_ordinary,
    piece_contains,
    piece_point,
    segment_point,
    vec_oplus,
    vec_otimes,
    vector,
)


def F(s):
    return Fraction(s)


class TestSegmentPoint:
    def test_clamps_each_coordinate(self):
        x, y = vector([".2", ".5"]), vector([".6", ".9"])
        assert segment_point(x, y, F(".4")) == vector([".4", ".5"])

    def test_beta_zero_gives_x(self):
        x, y = vector([".2", ".5"]), vector([".6", ".9"])
        assert segment_point(x, y, F("0")) == x

    def test_beta_one_gives_y(self):
        x, y = vector([".2", ".5"]), vector([".6", ".9"])
        assert segment_point(x, y, F("1")) == y

    def test_requires_comparable(self):
        with pytest.raises(NotComparableError):
            segment_point(vector([".7", ".3"]), vector([".2", ".6"]), F(".5"))


class TestDecomposeComparable:
    def test_three_pieces_in_dimension_two(self):
        x, y = vector([".2", ".5"]), vector([".6", ".9"])
        dec = decompose_comparable(x, y)
        assert dec.comparable and dec.junction is None
        assert len(dec.pieces) == 3
        p0, p1, p2 = dec.pieces
        assert p0.beta_interval == (F(".2"), F(".5"))
        assert p0.active == frozenset({0})
        assert p0.low == frozenset({1})
        assert (p0.start, p0.end) == (x, vector([".5", ".5"]))
        assert p1.beta_interval == (F(".5"), F(".6"))
        assert p1.active == frozenset({0, 1})
        assert (p1.start, p1.end) == (vector([".5", ".5"]), vector([".6", ".6"]))
        assert p2.beta_interval == (F(".6"), F(".9"))
        assert p2.active == frozenset({1})
        assert p2.high == frozenset({0})
        assert (p2.start, p2.end) == (vector([".6", ".6"]), y)
        assert dec.breakpoints() == (F(".2"), F(".5"), F(".6"), F(".9"))

    def test_equal_endpoints_decompose_to_nothing(self):
        x = vector([".3", ".7"])
        dec = decompose_comparable(x, x)
        assert dec.pieces == ()
        assert dec.breakpoints() == ()

    def test_constant_coordinates_do_not_split(self):
        # the middle cut only retires coordinates with x_i = y_i,
        # so the two gaps merge into one straight piece
        x, y = vector([".2", ".4", ".4"]), vector([".6", ".4", ".4"])
        dec = decompose_comparable(x, y)
        assert len(dec.pieces) == 1
        piece = dec.pieces[0]
        assert piece.beta_interval == (F(".2"), F(".6"))
        assert piece.active == frozenset({0})
        assert (piece.start, piece.end) == (x, y)

    def test_rejects_incomparable(self):
        with pytest.raises(NotComparableError):
            decompose_comparable(vector([".7", ".3"]), vector([".2", ".6"]))


class TestDecompose:
    def test_incomparable_walks_through_junction(self):
        x, y = vector([".7", ".3"]), vector([".2", ".6"])
        dec = decompose(x, y)
        assert not dec.comparable
        assert dec.junction == vector([".7", ".6"])
        assert len(dec.pieces) == 2
        up, down = dec.pieces
        assert up.beta_interval == (F(".3"), F(".6"))
        assert up.active == frozenset({1})
        assert (up.start, up.end) == (x, vector([".7", ".6"]))
        assert down.beta_interval == (F(".2"), F(".7"))
        assert down.active == frozenset({0})
        assert (down.start, down.end) == (vector([".7", ".6"]), y)

    def test_reversed_comparable_keeps_traversal_order(self):
        x, y = vector([".6", ".9"]), vector([".2", ".5"])
        dec = decompose(x, y)
        assert dec.comparable
        assert dec.pieces[0].start == x
        assert dec.pieces[-1].end == y

    def test_pieces_chain(self):
        x, y = vector([".7", ".3", ".5"]), vector([".2", ".6", ".5"])
        dec = decompose(x, y)
        assert dec.pieces[0].start == x
        assert dec.pieces[-1].end == y
        for left, right in zip(dec.pieces, dec.pieces[1:]):
            assert left.end == right.start


class TestPieceHelpers:
    def test_piece_point_and_contains(self):
        dec = decompose_comparable(vector([".2", ".5"]), vector([".6", ".9"]))
        piece = dec.pieces[0]
        p = piece_point(piece, F(".3"))
        assert p == vector([".3", ".5"])
        assert piece_contains(piece, p)
        assert not piece_contains(piece, vector([".3", ".6"]))
        assert not piece_contains(piece, vector([".7", ".5"]))
        with pytest.raises(ValueError):
            piece_point(piece, F(".9"))


class TestIsOrdinary:
    def test_diagonal_moves_are_ordinary_when_aligned(self):
        assert is_ordinary(vector([".3", ".3"]), (F(".2"), F(".2")))

    def test_misaligned_base_is_not(self):
        assert not is_ordinary(vector([".3", ".4"]), (F(".2"), F(".2")))

    def test_misaligned_displacement_is_not(self):
        assert not is_ordinary(vector([".3", ".3"]), (F(".2"), F(".1")))

    def test_single_support_always_ordinary(self):
        assert is_ordinary(vector([".3", ".9"]), (F(".5"), F("0")))

    def test_zero_displacement_ordinary(self):
        assert is_ordinary(vector([".3", ".9"]), (F("0"), F("0")))

    def test_rejects_negative_or_escaping(self):
        with pytest.raises(ValueError):
            is_ordinary(vector([".3"]), (F("-1/10"),))
        with pytest.raises(ValueError):
            is_ordinary(vector([".9"]), (F(".2"),))


class TestRandomizedProperties:
    def test_sampled_points_lie_on_declared_pieces(self):
        rng = random.Random(7)
        for _ in range(150):
            d = rng.randint(1, 4)
            x = tuple(Fraction(rng.randint(0, 10), 10) for _ in range(d))
            y = tuple(Fraction(rng.randint(0, 10), 10) for _ in range(d))
            dec = decompose(x, y)
            bound = 2 * d - 1 if dec.comparable else 2 * d - 2
            assert len(dec.pieces) <= bound
            for left, right in zip(dec.pieces, dec.pieces[1:]):
                assert left.end == right.start
            for _ in range(20):
                beta = Fraction(rng.randint(0, 40), 40)
                for p in (
                    vec_oplus(x, vec_otimes(beta, y)),
                    vec_oplus(vec_otimes(beta, x), y),
                ):
                    ok = (
                        p in (x, y)
                        or any(piece_contains(piece, p) for piece in dec.pieces)
                    )
                    assert ok, (x, y, beta, p)

    def test_is_ordinary_matches_single_piece_decomposition(self):
        rng = random.Random(11)
        for _ in range(300):
            d = rng.randint(1, 4)
            y = tuple(Fraction(rng.randint(0, 8), 10) for _ in range(d))
            u = tuple(Fraction(rng.randint(0, 10 - int(10 * a)), 10) for a in y)
            tip = tuple(a + du for a, du in zip(y, u))
            dec = decompose_comparable(y, tip)
            assert is_ordinary(y, u) == (len(dec.pieces) <= 1)
