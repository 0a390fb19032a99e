from fractions import Fraction

import pytest

from maxmin import (
    Matrix,
    ShapeError,
    linear_combination,
    mat_vec,
    oplus,
    otimes,
    residual,
    scalar,
    scale_matrix,
    vec_oplus,
    vec_otimes,
    vector,
)


class TestScalar:
    def test_decimal_string_is_exact(self):
        assert scalar(".07") == Fraction(7, 100)

    def test_ratio_string(self):
        assert scalar("7/100") == Fraction(7, 100)

    def test_int_and_fraction_pass_through(self):
        assert scalar(1) == Fraction(1)
        assert scalar(Fraction(1, 3)) == Fraction(1, 3)

    def test_float_rejected(self):
        with pytest.raises(TypeError):
            scalar(0.07)

    def test_out_of_range_rejected(self):
        with pytest.raises(ValueError):
            scalar("1.5")
        with pytest.raises(ValueError):
            scalar("-1/10")


class TestVector:
    def test_builds_tuple_of_fractions(self):
        assert vector([".5", 1]) == (Fraction(1, 2), Fraction(1))

    def test_empty_rejected(self):
        with pytest.raises(ShapeError):
            vector([])


class TestScalarOps:
    def test_oplus_is_max(self):
        assert oplus(Fraction(3, 10), Fraction(1, 2)) == Fraction(1, 2)

    def test_otimes_is_min(self):
        assert otimes(Fraction(3, 10), Fraction(1, 2)) == Fraction(3, 10)

    def test_residual_saturates_at_one(self):
        assert residual(Fraction(3, 10), Fraction(1, 2)) == Fraction(1)

    def test_residual_caps_otherwise(self):
        assert residual(Fraction(1, 2), Fraction(3, 10)) == Fraction(3, 10)

    def test_residual_adjoint_to_otimes(self):
        # min(a, x) <= b exactly when x <= residual(a, b)
        grid = [Fraction(k, 4) for k in range(5)]
        for a in grid:
            for b in grid:
                r = residual(a, b)
                for x in grid:
                    assert (otimes(a, x) <= b) == (x <= r)


class TestVectorOps:
    def test_vec_oplus_coordinatewise(self):
        assert vec_oplus(vector([".1", ".7"]), vector([".4", ".2"])) == vector([".4", ".7"])

    def test_vec_oplus_dimension_mismatch(self):
        with pytest.raises(ShapeError):
            vec_oplus(vector([".1"]), vector([".1", ".2"]))

    def test_vec_otimes_caps_each_coordinate(self):
        assert vec_otimes(Fraction(1, 2), vector([".1", ".7"])) == vector([".1", ".5"])


class TestMatrix:
    def test_shape_and_access(self, a1):
        assert a1.shape == (3, 4)
        assert a1.row(1) == vector([".05", ".06", ".07", ".08"])
        assert a1.col(3) == vector([".04", ".08", ".12"])

    def test_entries_row_major_and_repeatable(self, a1):
        expected = tuple(Fraction(k, 100) for k in range(1, 13))
        assert tuple(a1.entries()) == expected
        assert tuple(a1.entries()) == expected

    def test_submatrix(self, a2):
        sub = a2.submatrix((0, 2), (0, 2, 3))
        assert sub.shape == (2, 3)
        assert sub.row(0) == vector([".01", ".07", ".10"])
        assert sub.row(1) == vector([".03", ".09", ".12"])

    def test_permuted_places_source_indices(self, a1):
        rearranged = a1.permuted((0, 1, 2), (3, 2, 1, 0))
        assert rearranged.row(0) == vector([".04", ".03", ".02", ".01"])

    def test_ragged_rows_rejected(self):
        with pytest.raises(ShapeError):
            Matrix.from_rows([[".1", ".2"], [".3"]])

    def test_entries_validated(self):
        with pytest.raises(ValueError):
            Matrix.from_rows([["2"]])


class TestProducts:
    def test_mat_vec_small(self):
        a = Matrix.from_rows([[".01", ".02"], [".05", ".06"]])
        assert mat_vec(a, vector(["1", "1"])) == vector([".02", ".06"])

    def test_mat_vec_ladder(self, a1):
        x = vector(["1", ".10", ".07", ".04"])
        assert mat_vec(a1, x) == vector([".04", ".07", ".10"])

    def test_mat_vec_dimension_mismatch(self, a1):
        with pytest.raises(ShapeError):
            mat_vec(a1, vector([".1", ".2"]))

    def test_linear_combination_matches_mat_vec(self, a1):
        x = vector([".5", "0", "1", ".25"])
        assert linear_combination(a1, x) == mat_vec(a1, x)

    def test_scale_matrix_caps_columns(self, a1):
        capped = scale_matrix(vector([".05"] * 4), a1)
        assert capped.row(0) == a1.row(0)
        assert capped.row(1) == vector([".05", ".05", ".05", ".05"])
        assert capped.row(2) == vector([".05", ".05", ".05", ".05"])

    def test_scaled_row_maxima_equal_product(self, a1):
        x = vector(["1", ".10", ".07", ".04"])
        scaled = scale_matrix(x, a1)
        maxima = tuple(max(scaled.row(i)) for i in range(scaled.nrows))
        assert maxima == mat_vec(a1, x)
