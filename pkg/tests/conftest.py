from fractions import Fraction

import pytest

from maxmin import Certificate, Matrix


@pytest.fixture(scope="session")
def a1():
    """3x4 ladder whose entries .01...12 increase along rows and columns."""
    return Matrix.from_rows([
        [".01", ".02", ".03", ".04"],
        [".05", ".06", ".07", ".08"],
        [".09", ".10", ".11", ".12"],
    ])


@pytest.fixture(scope="session")
def a2():
    """Column-major ladder of the same twelve values; max of each column
    stays below the min of the next, so its rank collapses to 2."""
    return Matrix.from_rows([
        [".01", ".04", ".07", ".10"],
        [".02", ".05", ".08", ".11"],
        [".03", ".06", ".09", ".12"],
    ])


@pytest.fixture(scope="session")
def cert_a1():
    """Hand-built certificate for a1: omit column 1, pair row i with
    column 4-i, coefficients just under each paired entry."""
    return Certificate(
        pi=(3, 2, 1),
        lambdas={1: Fraction(".10"), 2: Fraction(".07"), 3: Fraction(".04")},
        omitted_col=0,
    )


@pytest.fixture(scope="session")
def cert_a2_sub():
    """Hand-built certificate for a2.submatrix((0, 2), (0, 2, 3))."""
    return Certificate(
        pi=(2, 1),
        lambdas={1: Fraction(".09"), 2: Fraction(".08")},
        omitted_col=0,
    )


@pytest.fixture()
def write_matrix(tmp_path):
    """Factory writing a matrix file and returning its path as str."""
    def _write(a, name="matrix.txt"):
        lines = [f"{a.nrows} {a.ncols}"]
        for i in range(a.nrows):
            lines.append(" ".join(str(v) for v in a.row(i)))
        path = tmp_path / name
        path.write_text("\n".join(lines) + "\n")
        return str(path)
    return _write
