from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from homrep.errors import InvalidInputError, SingularMatrixError, SingularSeriesError
from homrep.homcore import hom_combinatorial
from homrep.numeric import (
    DenseMatrix,
    TruncatedSeries,
    close,
    det_cofactor,
    det_fraction_free,
    format_scalar,
    parse_scalar,
    poly_mul,
    series_reciprocal,
    solve_linear,
)
from homrep.vandermonde import build_V

from strategies import small_rationals


def test_scalar_parse_format_roundtrip():
    assert parse_scalar("3/6") == Fraction(1, 2)
    assert format_scalar(Fraction(1, 2)) == "1/2"
    assert format_scalar(Fraction(4, 2)) == "2"
    assert format_scalar(Fraction(-6, 4)) == "-3/2"
    assert parse_scalar("0.25", "approx") == 0.25
    assert format_scalar(0.1) == "0.1"
    with pytest.raises(InvalidInputError):
        parse_scalar("1/0")
    with pytest.raises(InvalidInputError):
        parse_scalar("abc")


@given(small_rationals, small_rationals, small_rationals)
def test_exact_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    for v in (a + b, a * b, a - c):
        assert v.denominator > 0
        assert Fraction(v.numerator, v.denominator) == v


def test_close_tolerance():
    assert close(1.0, 1.0 + 1e-12)
    assert not close(1.0, 1.0 + 1e-6)
    assert close(1.0, 1.0 + 1e-6, rtol=1e-5)
    assert not close(Fraction(1, 3), Fraction(1, 3) + Fraction(1, 10**30))


def test_series_reciprocal_examples():
    assert series_reciprocal(TruncatedSeries((1, -1), 3)).coeffs == (1, 1, 1, 1)
    # (1 - t)(1 - 2t) = 1 - 3t + 2t^2 -> (h_0, h_1, h_2)(1, 2)
    assert series_reciprocal(TruncatedSeries((1, -3, 2), 2)).coeffs == (1, 3, 7)
    assert series_reciprocal(TruncatedSeries((1,), 5)).coeffs == (1, 0, 0, 0, 0, 0)
    with pytest.raises(SingularSeriesError):
        series_reciprocal(TruncatedSeries((0, 1), 2))


@given(st.lists(small_rationals, min_size=0, max_size=16))
def test_series_reciprocal_inverts(tail):
    p = TruncatedSeries((Fraction(1),) + tuple(tail))
    prod = p * series_reciprocal(p)
    assert prod.coeffs == (1,) + (0,) * p.order


@given(st.lists(small_rationals, min_size=1, max_size=4))
def test_generating_function_gives_hom(x):
    poly = [1]
    for xj in x:
        poly = poly_mul(poly, [1, -xj])
    h = series_reciprocal(TruncatedSeries.from_poly(poly + [0] * 8, 8))
    assert list(h.coeffs) == [hom_combinatorial(x, m) for m in range(9)]


def test_det_examples():
    assert det_fraction_free(DenseMatrix.identity(3)) == 1
    V = build_V([1, 3], (1, 2)).matrix
    assert det_cofactor(V) == 4
    assert det_fraction_free(V) == 4
    rep = DenseMatrix.from_rows([[1, 2, 3], [4, 5, 6], [1, 2, 3]])
    assert det_fraction_free(rep) == 0


@st.composite
def square_matrices(draw, max_n=5):
    n = draw(st.integers(1, max_n))
    entries = draw(st.lists(small_rationals, min_size=n * n, max_size=n * n))
    return DenseMatrix(n, n, tuple(entries))


@given(square_matrices())
def test_bareiss_matches_cofactor(a):
    assert det_fraction_free(a) == det_cofactor(a)


@given(st.lists(st.lists(st.integers(-20, 20), min_size=4, max_size=4), min_size=4, max_size=4))
def test_bareiss_integer_matrices_stay_integral(rows):
    d = det_fraction_free(DenseMatrix.from_rows(rows))
    assert d == det_cofactor(DenseMatrix.from_rows(rows))
    assert Fraction(d).denominator == 1


def test_solve_linear_examples():
    assert solve_linear(DenseMatrix.identity(2), [5, 7]) == [5, 7]
    assert solve_linear(DenseMatrix.from_rows([[2]]), [1]) == [Fraction(1, 2)]
    with pytest.raises(SingularMatrixError):
        solve_linear(DenseMatrix.from_rows([[1, 2], [2, 4]]), [1, 1])


@given(square_matrices(4), st.lists(small_rationals, min_size=4, max_size=4))
def test_solve_linear_solution(a, rhs):
    rhs = rhs[: a.rows]
    if det_cofactor(a) == 0:
        with pytest.raises(SingularMatrixError):
            solve_linear(a, rhs)
        return
    x = solve_linear(a, rhs)
    assert [sum(a[i, j] * x[j] for j in range(a.cols)) for i in range(a.rows)] == rhs


def test_dense_matrix_shape_checks():
    with pytest.raises(InvalidInputError):
        DenseMatrix(2, 2, (1, 2, 3))
    with pytest.raises(InvalidInputError):
        DenseMatrix.from_rows([[1, 2], [3]])
