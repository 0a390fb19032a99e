"""Exact max-min (fuzzy) algebra over the unit interval.

Scalars are `fractions.Fraction` values in [0, 1] combined with max as
addition and min as multiplication. The package computes segment
decompositions, hull membership, strong-regularity certificates,
trapezoidal orderings, max-min rank (equal to the dimension of the hull
of a matrix's columns), solvability and uniqueness of linear systems,
and quasibox dimension witnesses, all in exact arithmetic.
"""

from .core import (
    Matrix,
    ONE,
    Scalar,
    ScalarLike,
    ShapeError,
    Vector,
    ZERO,
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
from .hull import (
    MembershipResult,
    homogenize,
    hull_membership,
    hull_raster_2d,
    span_membership,
)
from .linsys import SolutionReport, build_unique_system, solve
from .matrixfile import MatrixParseError, load_matrix, parse_matrix, parse_point
from .plot import render_hull_svg, write_plot2d
from .quasibox import (
    Quasibox,
    QuasiboxDerivation,
    dimension_lower_bound,
    quasibox_center,
    quasibox_contains,
    quasibox_from_certificate,
    quasibox_is_polytrope_check,
    quasibox_point,
)
from .regularity import (
    Certificate,
    CertificateError,
    RankWitness,
    certificate_from_trapezoidal,
    chain_condition,
    dimension,
    has_nonempty_interior,
    is_strongly_regular,
    is_trapezoidal,
    max_square_regular,
    rank,
    trapezoidalize,
    verify_certificate,
)
from .segments import (
    ElementaryPiece,
    NotComparableError,
    SegmentDecomposition,
    decompose,
    decompose_comparable,
    is_ordinary,
    piece_contains,
    piece_point,
    segment_point,
)

__version__ = "0.1.0"

__all__ = [
    "Matrix",
    "ONE",
    "Scalar",
    "ScalarLike",
    "ShapeError",
    "Vector",
    "ZERO",
    "linear_combination",
    "mat_vec",
    "oplus",
    "otimes",
    "residual",
    "scalar",
    "scale_matrix",
    "vec_oplus",
    "vec_otimes",
    "vector",
    "MembershipResult",
    "homogenize",
    "hull_membership",
    "hull_raster_2d",
    "span_membership",
    "SolutionReport",
    "build_unique_system",
    "solve",
    "MatrixParseError",
    "load_matrix",
    "parse_matrix",
    "parse_point",
    "render_hull_svg",
    "write_plot2d",
    "Quasibox",
    "QuasiboxDerivation",
    "dimension_lower_bound",
    "quasibox_center",
    "quasibox_contains",
    "quasibox_from_certificate",
    "quasibox_is_polytrope_check",
    "quasibox_point",
    "Certificate",
    "CertificateError",
    "RankWitness",
    "certificate_from_trapezoidal",
    "chain_condition",
    "dimension",
    "has_nonempty_interior",
    "is_strongly_regular",
    "is_trapezoidal",
    "max_square_regular",
    "rank",
    "trapezoidalize",
    "verify_certificate",
    "ElementaryPiece",
    "NotComparableError",
    "SegmentDecomposition",
    "decompose",
    "decompose_comparable",
    "is_ordinary",
    "piece_contains",
    "piece_point",
    "segment_point",
    "__version__",
]
