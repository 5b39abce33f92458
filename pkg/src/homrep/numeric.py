"""Scalars, dense matrices, polynomials in one variable and truncated series.

Two scalar realizations are supported everywhere:

* exact: :class:`fractions.Fraction` (``int`` is accepted and promoted),
* approximate: binary64 ``float``.

Arithmetic is duck-typed, so every routine below works for either kind.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import InvalidInputError, SingularMatrixError, SingularSeriesError

EXACT = "exact"
APPROX = "approx"


@dataclass(frozen=True)
class Settings:
    """Numerical knobs; the defaults are used unless a caller overrides them."""

    rtol: float = 1e-9
    min_separation: float = 1e-8
    pole_warn_separation: float = 1e-6
    term_cap: int = 10**6


DEFAULTS = Settings()


def parse_scalar(text: str, mode: str = EXACT):
    """Parse ``"p/q"`` / ``"p"`` (exact) or a decimal literal (approx)."""
    text = text.strip()
    try:
        if mode == EXACT:
            return Fraction(text)
        if mode == APPROX:
            return float(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise InvalidInputError(f"cannot parse scalar {text!r}: {exc}") from None
    raise InvalidInputError(f"unknown arithmetic mode {mode!r}")


def format_scalar(x) -> str:
    if isinstance(x, float):
        return repr(x)
    return str(Fraction(x))


def convert(x, mode: str):
    return Fraction(x) if mode == EXACT else float(x)


def is_exact(x) -> bool:
    return isinstance(x, (int, Fraction))


def close(a, b, rtol: float = DEFAULTS.rtol) -> bool:
    """Exact equality for exact scalars, relative tolerance otherwise."""
    if is_exact(a) and is_exact(b):
        return a == b
    a, b = float(a), float(b)
    return abs(a - b) <= rtol * max(abs(a), abs(b)) or a == b


# --- polynomials, coefficient lists from the constant term upward ---------


def poly_mul(a: Sequence, b: Sequence) -> list:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return out


def poly_shift_power(c, k: int) -> list:
    """Coefficients of ``(t - c)**k``."""
    return [math.comb(k, i) * (-c) ** (k - i) for i in range(k + 1)]


def poly_eval(p: Sequence, t):
    acc = 0
    for c in reversed(p):
        acc = acc * t + c
    return acc


def poly_derivative(p: Sequence, times: int = 1) -> list:
    """Formal derivative: ``(f_0, f_1, ..., f_m) -> (f_1, 2 f_2, ..., m f_m)``."""
    p = list(p)
    for _ in range(times):
        p = [i * c for i, c in enumerate(p)][1:]
    return p


# --- truncated power series ----------------------------------------------


@dataclass(frozen=True)
class TruncatedSeries:
    """``c_0 + c_1 t + ... + c_M t^M``; every product is cut back to order ``M``."""

    coeffs: tuple
    order: int = field(default=-1)

    def __post_init__(self):
        coeffs = tuple(self.coeffs)
        order = self.order if self.order >= 0 else len(coeffs) - 1
        if order < 0:
            raise InvalidInputError("series needs at least one coefficient")
        coeffs = (coeffs + (0,) * (order + 1))[: order + 1]
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "order", order)

    def __getitem__(self, i):
        return self.coeffs[i]

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        M = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = [sum(a[i] * b[k - i] for i in range(k + 1)) for k in range(M + 1)]
        return TruncatedSeries(out, M)

    @classmethod
    def from_poly(cls, p: Sequence, order: int) -> "TruncatedSeries":
        return cls(tuple(p[: order + 1]), order)


def series_reciprocal(p: TruncatedSeries) -> TruncatedSeries:
    """Multiplicative inverse of ``p`` modulo ``t^(M+1)``."""
    c0 = p.coeffs[0]
    if c0 == 0:
        raise SingularSeriesError("constant term is zero")
    inv0 = 1 / Fraction(c0) if is_exact(c0) else 1 / c0
    out = [inv0]
    for k in range(1, p.order + 1):
        acc = sum(p.coeffs[i] * out[k - i] for i in range(1, k + 1))
        out.append(-acc * inv0)
    return TruncatedSeries(out, p.order)


# --- dense matrices --------------------------------------------------------


@dataclass(frozen=True)
class DenseMatrix:
    """Row-major matrix; ``m[i, j]`` uses 0-based Python indices."""

    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(self.entries))
        if self.rows < 1 or self.cols < 1 or len(self.entries) != self.rows * self.cols:
            raise InvalidInputError("entries do not match the declared shape")

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence]) -> "DenseMatrix":
        rows = [list(r) for r in rows]
        if not rows or any(len(r) != len(rows[0]) for r in rows):
            raise InvalidInputError("ragged or empty matrix")
        return cls(len(rows), len(rows[0]), tuple(x for r in rows for x in r))

    @classmethod
    def identity(cls, n: int) -> "DenseMatrix":
        return cls(n, n, tuple(1 if i == j else 0 for i in range(n) for j in range(n)))

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> list:
        return list(self.entries[i * self.cols:(i + 1) * self.cols])

    def column(self, j: int) -> list:
        return [self.entries[i * self.cols + j] for i in range(self.rows)]

    def tolist(self) -> list[list]:
        return [self.row(i) for i in range(self.rows)]

    def __matmul__(self, other: "DenseMatrix") -> "DenseMatrix":
        if self.cols != other.rows:
            raise InvalidInputError("shape mismatch in matrix product")
        cols = [other.column(j) for j in range(other.cols)]
        return DenseMatrix.from_rows(
            [[sum(a * b for a, b in zip(self.row(i), c)) for c in cols] for i in range(self.rows)]
        )

    def minor(self, i: int, j: int) -> "DenseMatrix":
        return DenseMatrix.from_rows(
            [r[:j] + r[j + 1:] for k, r in enumerate(self.tolist()) if k != i]
        )


def _abs_key(x):
    return abs(x)


def det_fraction_free(a: DenseMatrix):
    """Determinant by Bareiss elimination.

    Every division is exact, so integer input stays integral throughout; row
    swaps pick the pivot of largest magnitude, which also keeps the float
    realization stable. Singular input returns 0.
    """
    if a.rows != a.cols:
        raise InvalidInputError("determinant of a non-square matrix")
    n = a.rows
    m = a.tolist()
    sign = 1
    prev = 1
    for k in range(n - 1):
        p = max(range(k, n), key=lambda i: _abs_key(m[i][k]))
        if m[p][k] == 0:
            return 0 * m[0][0]
        if p != k:
            m[k], m[p] = m[p], m[k]
            sign = -sign
        pivot = m[k][k]
        for i in range(k + 1, n):
            mi, mk = m[i], m[k]
            for j in range(k + 1, n):
                v = mi[j] * pivot - mi[k] * mk[j]
                mi[j] = v // prev if isinstance(v, int) and isinstance(prev, int) else v / prev
            mi[k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def det_cofactor(a: DenseMatrix):
    """Laplace expansion along the first row; exponential cost, test oracle only."""
    if a.rows == 1:
        return a[0, 0]
    total = 0
    for j in range(a.cols):
        if a[0, j] != 0:
            total += (-1) ** j * a[0, j] * det_cofactor(a.minor(0, j))
    return total


def _inv(x):
    return 1 / Fraction(x) if is_exact(x) else 1 / x


def solve_linear(a: DenseMatrix, rhs: Sequence) -> list:
    """Solve ``a x = rhs`` by Gauss-Jordan elimination with partial pivoting."""
    n = a.rows
    if a.cols != n or len(rhs) != n:
        raise InvalidInputError("solve_linear needs a square system")
    m = [row + [b] for row, b in zip(a.tolist(), rhs)]
    for k in range(n):
        p = max(range(k, n), key=lambda i: _abs_key(m[i][k]))
        if m[p][k] == 0:
            raise SingularMatrixError("matrix is singular")
        m[k], m[p] = m[p], m[k]
        inv = _inv(m[k][k])
        m[k] = [x * inv for x in m[k]]
        for i in range(n):
            if i != k and m[i][k] != 0:
                f = m[i][k]
                m[i] = [x - f * y for x, y in zip(m[i], m[k])]
    return [m[i][n] for i in range(n)]


def inverse(a: DenseMatrix) -> DenseMatrix:
    n = a.rows
    cols = [solve_linear(a, [1 if i == j else 0 for i in range(n)]) for j in range(n)]
    return DenseMatrix.from_rows([[cols[j][i] for j in range(n)] for i in range(n)])
