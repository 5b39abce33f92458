"""Closed-form evaluations of ``h_m(y^[kappa])`` and ``s_lambda(y^[kappa])``.

Routes:

* bialternant: ``det G_{(m),kappa}(y) / det V_kappa(y)``;
* expansion A: ``sum A_{s,r} C(m+r-1, r-1) y_s^m``;
* expansion B: ``sum B_{s,r} C(m+N-1, r-1) y_s^(m+N-r)``;
* :class:`ExpansionTable`: the A route regrouped as ``sum_s P_s(m) y_s^m``
  with ``P_s`` a polynomial in ``m`` whose coefficients come from Stirling
  numbers. Building it costs ``O(N)`` coefficients once; each later
  evaluation is ``O(N)`` operations plus one power per block.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .coeffs import CoefficientTable, coefficient_table
from .combinat import as_kappa, binomial_falling, expand_points, stirling_first_unsigned
from .errors import InvalidInputError
from .homcore import hom_combinatorial, require_distinct
from .numeric import DenseMatrix, det_fraction_free, is_exact, poly_eval, poly_mul
from .vandermonde import as_partition, build_G, build_G_hom_row, build_V


def _quotient(a, b):
    if is_exact(a) and is_exact(b):
        return Fraction(a) / b
    return a / b


def _check(y, kappa):
    kv = as_kappa(kappa)
    if len(y) != kv.n:
        raise InvalidInputError(f"{len(y)} points given for {kv.n} multiplicities")
    require_distinct(y)
    return kv


def hom_rep_bialternant(y: Sequence, kappa, m: int):
    kv = _check(y, kappa)
    num = det_fraction_free(build_G_hom_row(m, kv, y))
    den = det_fraction_free(build_V(y, kv).matrix)
    return _quotient(num, den)


def hom_rep_expansion_A(y: Sequence, kappa, m: int, table: CoefficientTable | None = None):
    kv = _check(y, kappa)
    if m < 0:
        raise InvalidInputError("degree must be nonnegative")
    A = table if table is not None else coefficient_table(y, kv, "A")
    total = 0
    for (s, r), a in A.items():
        total += a * binomial_falling(m + r - 1, r - 1) * y[s - 1] ** m
    return total


def hom_rep_expansion_B(y: Sequence, kappa, m: int, table: CoefficientTable | None = None):
    kv = _check(y, kappa)
    if m < 0:
        raise InvalidInputError("degree must be nonnegative")
    B = table if table is not None else coefficient_table(y, kv, "B")
    N = kv.N
    total = 0
    for (s, r), b in B.items():
        total += b * binomial_falling(m + N - 1, r - 1) * y[s - 1] ** (m + N - r)
    return total


def equivalence_check(y: Sequence, kappa, s: int, m: int) -> tuple:
    """Per-block sides ``sum_r C(m+r-1,r-1) A_{s,r}`` and
    ``sum_r C(m+N-1,r-1) B_{s,r} y_s^(N-r)``; they coincide."""
    kv = _check(y, kappa)
    if not 1 <= s <= kv.n:
        raise InvalidInputError(f"block {s} out of range")
    A = coefficient_table(y, kv, "A")
    B = coefficient_table(y, kv, "B")
    N = kv.N
    ys = y[s - 1]
    ks = kv.kappa[s - 1]
    lhs = sum(binomial_falling(m + r - 1, r - 1) * A[s, r] for r in range(1, ks + 1))
    rhs = sum(binomial_falling(m + N - 1, r - 1) * B[s, r] * ys ** (N - r) for r in range(1, ks + 1))
    return lhs, rhs


def _stirling_C(A: CoefficientTable, kv, s: int) -> list:
    ks = kv.kappa[s - 1]
    out = []
    for j in range(ks):
        c = 0
        for r in range(j + 1, ks + 1):
            c += A[s, r] * Fraction(stirling_first_unsigned(r, j + 1), math.factorial(r - 1))
        out.append(c)
    return out


@dataclass(frozen=True)
class ExpansionTable:
    """Cached coefficients plus ``P_s(m) = sum_j C_{s,j} m^j`` for every block."""

    y: tuple
    kappa: tuple
    family: str
    coefficients: CoefficientTable
    polynomials: tuple

    def __call__(self, m: int):
        return self.evaluate(m)

    def evaluate(self, m: int):
        if m < 0:
            raise InvalidInputError("degree must be nonnegative")
        mm = float(m) if isinstance(self.y[0], float) else m
        total = 0
        for ys, P in zip(self.y, self.polynomials):
            total += poly_eval(P, mm) * ys**m
        return total

    def degree(self, s: int) -> int:
        P = self.polynomials[s - 1]
        d = len(P) - 1
        while d >= 0 and P[d] == 0:
            d -= 1
        return d


def expansion_polynomials(y: Sequence, kappa, family: str = "A") -> ExpansionTable:
    """Build the per-block polynomials in ``m``.

    Family ``A`` uses the Stirling-number form; family ``B`` expands
    ``C(m+N-1, r-1) y_s^(N-r)`` as a polynomial in ``m`` directly.
    """
    kv = _check(y, kappa)
    approx = any(isinstance(v, float) for v in y)
    table = coefficient_table(y, kv, family)
    polys = []
    for s in range(1, kv.n + 1):
        if family == "A":
            P = _stirling_C(table, kv, s)
        else:
            P = _b_block_poly(table, kv, y, s)
        if approx:
            P = [float(c) for c in P]
        polys.append(tuple(P))
    return ExpansionTable(tuple(y), kv.kappa, family, table, tuple(polys))


def _b_block_poly(B, kv, y, s):
    N = kv.N
    ys = y[s - 1]
    ks = kv.kappa[s - 1]
    P = [0] * ks
    for r in range(1, ks + 1):
        # C(m+N-1, r-1) = prod_{i<r-1} (m + N-1-i) / (r-1)!
        poly = [Fraction(1)]
        for i in range(r - 1):
            poly = poly_mul(poly, [N - 1 - i, 1])
        scale = B[s, r] * ys ** (N - r) / math.factorial(r - 1)
        for j, c in enumerate(poly):
            P[j] += c * scale
    return P


def schur_rep_bialternant(lam: Sequence[int], y: Sequence, kappa):
    kv = _check(y, kappa)
    num = det_fraction_free(build_G(lam, kv, y))
    den = det_fraction_free(build_V(y, kv).matrix)
    return _quotient(num, den)


def schur_oracle_jacobi_trudi(lam: Sequence[int], x: Sequence):
    """``det [h_{lambda_i - i + j}(x)]`` with ``h`` of negative degree zero."""
    lam = as_partition(lam)
    ell = len(lam)
    if ell == 0:
        return 1
    cache = {}

    def h(d):
        if d < 0:
            return 0
        if d not in cache:
            cache[d] = hom_combinatorial(x, d)
        return cache[d]

    M = DenseMatrix.from_rows([[h(lam[i] - i + j) for j in range(ell)] for i in range(ell)])
    return det_fraction_free(M)


def semistandard_tableaux(lam: Sequence[int], N: int):
    """Yield every SSYT of shape ``lam`` with entries ``1..N`` as a list of rows."""
    lam = as_partition(lam)
    cells = [(i, j) for i, row in enumerate(lam) for j in range(row)]
    grid = [[0] * row for row in lam]

    def rec(idx):
        if idx == len(cells):
            yield [row[:] for row in grid]
            return
        i, j = cells[idx]
        lo = 1
        if j > 0:
            lo = max(lo, grid[i][j - 1])
        if i > 0:
            lo = max(lo, grid[i - 1][j] + 1)
        for v in range(lo, N + 1):
            grid[i][j] = v
            yield from rec(idx + 1)

    yield from rec(0)


def schur_oracle_tableaux(lam: Sequence[int], x: Sequence):
    """``s_lambda(x)`` as the sum of ``x^T`` over semistandard tableaux ``T``."""
    total = 0
    for T in semistandard_tableaux(lam, len(x)):
        term = 1
        for row in T:
            for v in row:
                term *= x[v - 1]
        total += term
    return total


def schur_rep_oracle(lam: Sequence[int], y: Sequence, kappa):
    """Jacobi-Trudi oracle evaluated at the expanded list ``y^[kappa]``."""
    return schur_oracle_jacobi_trudi(lam, expand_points(y, kappa))
