import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from homrep.coeffs import coeff_B
from homrep.errors import DegenerateInputError, InvalidInputError
from homrep.numeric import DenseMatrix, det_cofactor, det_fraction_free, inverse, solve_linear
from homrep.vandermonde import (
    adjugate_last_column_G,
    as_partition,
    build_G,
    build_G_hom_row,
    build_V,
    det_V_product,
    inverse_V_moucouf,
    inverse_last_column,
    moucouf_L_polynomial,
)

from strategies import distinct_points, points_and_kappa

F = Fraction
C = math.comb


def test_build_V_example():
    y1, y2 = F(3), F(-5, 2)
    V = build_V([y1, y2], (1, 2)).matrix
    assert V.tolist() == [[1, 1, 0], [y1, y2, 1], [y1**2, y2**2, 2 * y2]]
    assert build_V([F(4)], (1,)).matrix.tolist() == [[1]]
    assert build_V([2, 7], (1, 1)).matrix.tolist() == [[1, 1], [2, 7]]


def test_det_V_product_examples():
    assert det_V_product([1, 3], (1, 2)) == 4
    assert det_fraction_free(build_V([1, 3], (1, 2)).matrix) == 4
    assert det_V_product([F(5)], (3,)) == 1
    assert det_V_product([1, 2], (2, 1)) == 1


def test_build_G_hom_row_example_three():
    y1, y2, m = F(2), F(-1, 3), 4
    G = build_G((m,), (1, 2), [y1, y2])
    assert G.row(2) == [y1 ** (m + 2), y2 ** (m + 2), (m + 2) * y2 ** (m + 1)]
    assert G == build_G_hom_row(m, (1, 2), [y1, y2])


def test_build_G_five_by_five_example():
    y1, y2, m = F(3, 2), F(-2), 3
    expected = [
        [C(0, 0), 0, 0, C(0, 0), 0],
        [C(1, 0) * y1, C(1, 1), 0, C(1, 0) * y2, C(1, 1)],
        [C(2, 0) * y1**2, C(2, 1) * y1, C(2, 2), C(2, 0) * y2**2, C(2, 1) * y2],
        [C(3, 0) * y1**3, C(3, 1) * y1**2, C(3, 2) * y1, C(3, 0) * y2**3, C(3, 1) * y2**2],
        [C(m + 4, 0) * y1 ** (m + 4), C(m + 4, 1) * y1 ** (m + 3), C(m + 4, 2) * y1 ** (m + 2),
         C(m + 4, 0) * y2 ** (m + 4), C(m + 4, 1) * y2 ** (m + 3)],
    ]
    assert build_G((m,), (3, 2), [y1, y2]).tolist() == expected
    assert build_G_hom_row(m, (3, 2), [y1, y2]).tolist() == expected


def test_build_G_empty_partition_is_V():
    y, k = [F(1), F(4), F(-2)], (2, 1, 2)
    assert build_G((), k, y) == build_V(y, k).matrix
    assert build_G((0, 0), k, y) == build_V(y, k).matrix


def test_partition_validation():
    assert as_partition((3, 1, 0, 0)) == (3, 1)
    with pytest.raises(InvalidInputError):
        as_partition((1, 2))
    with pytest.raises(InvalidInputError):
        build_G((1, 1, 1), (1, 1), [1, 2])


def test_hom_row_last_row_m_zero():
    G = build_G_hom_row(0, (2, 1), [1, 2])
    # binomial(2, r-1) y^(2-r)
    assert G.row(2) == [1, 2, 4]
    assert det_fraction_free(G) == det_V_product([1, 2], (2, 1))


@settings(max_examples=40)
@given(points_and_kappa(max_n=4, max_N=6), st.integers(0, 6))
def test_hom_row_matches_general_G(yk, m):
    y, kappa = yk
    assert build_G_hom_row(m, kappa, y) == build_G((m,), kappa, y)


def test_inverse_examples():
    assert inverse_V_moucouf([F(7)], (1,)).tolist() == [[1]]
    inv = inverse_V_moucouf([0, 1], (1, 1))
    assert [inv.column(0), inv.column(1)] == [[1, 0], [-1, 1]]
    V = build_V([1, 2], (2, 1)).matrix
    inv = inverse_V_moucouf([1, 2], (2, 1))
    for j in range(3):
        unit = [1 if i == j else 0 for i in range(3)]
        assert solve_linear(V, unit) == inv.column(j)
    with pytest.raises(DegenerateInputError):
        inverse_V_moucouf([1, 1], (1, 1))


@settings(max_examples=60)
@given(points_and_kappa(max_n=4, max_N=6))
def test_det_product_formula(yk):
    y, kappa = yk
    assert det_fraction_free(build_V(y, kappa).matrix) == det_V_product(y, kappa)


@settings(max_examples=60)
@given(points_and_kappa(max_n=4, max_N=6))
def test_inverse_is_inverse(yk):
    y, kappa = yk
    N = sum(kappa)
    V = build_V(y, kappa).matrix
    inv = inverse_V_moucouf(y, kappa)
    assert V @ inv == DenseMatrix.identity(N)
    assert inv == inverse(V)
    assert inv.column(N - 1) == inverse_last_column(y, kappa)


def test_last_column_examples():
    assert inverse_last_column([1, 2], (2, 1)) == [-1, -1, 1]
    assert inverse_last_column([F(9)], (1,)) == [1]
    assert inverse_last_column([0, 1], (1, 1)) == [-1, 1]
    assert adjugate_last_column_G(0, (2, 1), [1, 2]) == [-1, -1, 1]
    assert adjugate_last_column_G(5, (2, 1), [1, 2]) == [-1, -1, 1]
    assert adjugate_last_column_G(0, (1, 1), [0, 1]) == [-1, 1]


@settings(max_examples=40)
@given(points_and_kappa(max_n=3, max_N=5), st.integers(0, 6))
def test_adjugate_by_cofactors(yk, m):
    y, kappa = yk
    N = sum(kappa)
    G = build_G_hom_row(m, kappa, y)
    adj_col = adjugate_last_column_G(m, kappa, y)
    # (adj G)_{k,N} is the (N,k) cofactor
    for k in range(N):
        cof = (-1) ** (N - 1 + k) * (det_cofactor(G.minor(N - 1, k)) if N > 1 else 1)
        assert cof == adj_col[k]
    expansion = sum(G[N - 1, k] * adj_col[k] for k in range(N))
    assert expansion == det_fraction_free(G)


@settings(max_examples=40)
@given(points_and_kappa(max_n=4, max_N=6))
def test_L_polynomial_degree_and_leading_coefficient(yk):
    y, kappa = yk
    N = sum(kappa)
    for s, kap in enumerate(kappa, start=1):
        for p in range(kap):
            L = moucouf_L_polynomial(y, kappa, s, p)
            assert len(L) == N
            lead = coeff_B(y, kappa, s, kap - (kap - p - 1))  # B_{s, p+1}
            assert L[N - 1] == lead


def test_float_inverse_close():
    y = [0.5, -1.0, 2.0]
    k = (2, 1, 2)
    V = build_V(y, k).matrix
    prod = V @ inverse_V_moucouf(y, k)
    for i in range(5):
        for j in range(5):
            assert prod[i, j] == pytest.approx(1.0 if i == j else 0.0, abs=1e-10)
