"""Confluent Vandermonde matrices, their generalization by a partition, and
the explicit block inverse."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .coeffs import coeff_B
from .combinat import as_kappa, binomial, gamma, rho
from .errors import InvalidInputError
from .homcore import require_distinct
from .numeric import (
    DenseMatrix,
    TruncatedSeries,
    det_fraction_free,
    poly_mul,
    poly_shift_power,
    series_reciprocal,
)


def as_partition(lam: Sequence[int]) -> tuple[int, ...]:
    """Validate a weakly decreasing sequence and drop trailing zeros."""
    lam = tuple(lam)
    if any((not isinstance(p, int)) or p < 0 for p in lam):
        raise InvalidInputError(f"partition parts must be nonnegative integers: {lam}")
    if any(a < b for a, b in zip(lam, lam[1:])):
        raise InvalidInputError(f"partition must be weakly decreasing: {lam}")
    while lam and lam[-1] == 0:
        lam = lam[:-1]
    return lam


@dataclass(frozen=True)
class ConfluentVandermonde:
    y: tuple
    kappa: tuple
    matrix: DenseMatrix


def _entry(j: int, shift: int, r: int, yq):
    # j, r are 1-based; shift is lambda_{N+1-j}
    e = j - r + shift
    if e < 0:
        return 0 * yq
    return binomial(j - 1 + shift, r - 1) * yq**e


def build_G(lam: Sequence[int], kappa, y: Sequence) -> DenseMatrix:
    """``G_{lambda,kappa}(y)``: row ``j`` column ``k = rho(q, r)`` holds
    ``C(j-1+lambda_{N+1-j}, r-1) y_q^(j-r+lambda_{N+1-j})`` (0 for negative exponent)."""
    kv = as_kappa(kappa)
    lam = as_partition(lam)
    if len(y) != kv.n:
        raise InvalidInputError(f"{len(y)} points given for {kv.n} multiplicities")
    N = kv.N
    if len(lam) > N:
        raise InvalidInputError(f"partition of length {len(lam)} exceeds N = {N}")
    cols = [gamma(kv, k) for k in range(1, N + 1)]
    rows = []
    for j in range(1, N + 1):
        p = N + 1 - j
        shift = lam[p - 1] if p <= len(lam) else 0
        rows.append([_entry(j, shift, r, y[q - 1]) for q, r in cols])
    return DenseMatrix.from_rows(rows)


def build_V(y: Sequence, kappa) -> ConfluentVandermonde:
    kv = as_kappa(kappa)
    return ConfluentVandermonde(tuple(y), kv.kappa, build_G((), kv, y))


def build_G_hom_row(m: int, kappa, y: Sequence) -> DenseMatrix:
    """``G_{(m),kappa}(y)``: the rows of ``V`` except the last, which is
    ``C(N-1+m, r-1) y_q^(m+N-r)``."""
    if m < 0:
        raise InvalidInputError("degree must be nonnegative")
    kv = as_kappa(kappa)
    V = build_V(y, kv).matrix
    N = kv.N
    last = []
    for k in range(1, N + 1):
        q, r = gamma(kv, k)
        last.append(binomial(N - 1 + m, r - 1) * y[q - 1] ** (m + N - r))
    rows = V.tolist()[:-1] + [last]
    return DenseMatrix.from_rows(rows)


def det_V_product(y: Sequence, kappa):
    """``prod_{j<k} (y_k - y_j)^(kappa_j kappa_k)``."""
    kv = as_kappa(kappa)
    out = 1
    for j in range(kv.n):
        for k in range(j + 1, kv.n):
            out *= (y[k] - y[j]) ** (kv.kappa[j] * kv.kappa[k])
    return out


def _taylor_of_F(y, kv, s, order):
    """Taylor coefficients ``F_s^(m)(y_s)/m!`` for ``m <= order``, from the
    reciprocal of ``prod_{q != s} (u + y_s - y_q)^kappa_q`` in ``u = t - y_s``."""
    ys = y[s - 1]
    prod = [1]
    for q in range(1, kv.n + 1):
        if q != s:
            prod = poly_mul(prod, poly_shift_power(y[q - 1] - ys, kv.kappa[q - 1]))
    return series_reciprocal(TruncatedSeries.from_poly(prod, order)).coeffs


def moucouf_L_polynomial(y: Sequence, kappa, s: int, p: int) -> list:
    """Coefficients (ascending powers of ``t``) of

    ``L_{s,p}(t) = prod_{q != s} (t - y_q)^kappa_q (t - y_s)^p sum_{m < kappa_s - p} F_s^(m)(y_s)/m! (t - y_s)^m``.
    """
    kv = as_kappa(kappa)
    ks = kv.kappa[s - 1]
    if not 0 <= p <= ks - 1:
        raise InvalidInputError(f"p = {p} outside 0..{ks - 1}")
    taylor = _taylor_of_F(y, kv, s, ks - p - 1)
    ys = y[s - 1]
    tail = [0]
    for mm, c in enumerate(taylor):
        term = [c * a for a in poly_shift_power(ys, mm)]
        tail = [a + b for a, b in _zip_pad(tail, term)]
    out = poly_mul(tail, poly_shift_power(ys, p))
    for q in range(1, kv.n + 1):
        if q != s:
            out = poly_mul(out, poly_shift_power(y[q - 1], kv.kappa[q - 1]))
    N = kv.N
    return (out + [0] * N)[:N] if len(out) <= N else out


def _zip_pad(a, b):
    n = max(len(a), len(b))
    return zip(list(a) + [0] * (n - len(a)), list(b) + [0] * (n - len(b)))


def inverse_V_moucouf(y: Sequence, kappa) -> DenseMatrix:
    """Explicit ``V_kappa(y)^-1``: row ``rho(s, r)`` lists the coefficients of
    ``L_{s,r-1}``, i.e. ``L_{s,r-1}^(j-1)(0)/(j-1)!`` in column ``j``."""
    kv = as_kappa(kappa)
    if len(y) != kv.n:
        raise InvalidInputError(f"{len(y)} points given for {kv.n} multiplicities")
    require_distinct(y)
    y = [Fraction(v) if isinstance(v, int) else v for v in y]
    rows = [moucouf_L_polynomial(y, kv, s, r - 1) for s, r in kv.pairs()]
    return DenseMatrix.from_rows(rows)


def inverse_last_column(y: Sequence, kappa) -> list:
    """Last column of ``V_kappa(y)^-1``: entry ``rho(s, r)`` is ``B_{y,kappa,s,r}``."""
    kv = as_kappa(kappa)
    out = [None] * kv.N
    for s, r in kv.pairs():
        out[rho(kv, (s, r)) - 1] = coeff_B(y, kv, s, r)
    return out


def adjugate_last_column_G(m: int, kappa, y: Sequence) -> list:
    """Last column of ``adj G_{(m),kappa}(y)``; it does not depend on ``m``."""
    if m < 0:
        raise InvalidInputError("degree must be nonnegative")
    det = det_V_product(y, kappa)
    return [b * det for b in inverse_last_column(y, kappa)]


def det_G(lam: Sequence[int], kappa, y: Sequence):
    return det_fraction_free(build_G(lam, kappa, y))
