"""Reference evaluators of complete homogeneous polynomials ``h_m``.

These are deliberately straightforward; downstream modules use them as
oracles.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

from .combinat import as_kappa, binomial, weak_compositions
from .errors import DegenerateInputError, InvalidInputError, SizeError
from .numeric import DEFAULTS, is_exact, poly_derivative


def _one_like(x: Sequence):
    return 1.0 if any(isinstance(v, float) for v in x) else 1


def hom_combinatorial(x: Sequence, m: int, term_cap: int = DEFAULTS.term_cap):
    """Sum of every degree-``m`` monomial in ``x``.

    Refuses requests with more than ``term_cap`` monomials; use the
    expansion routes for those.
    """
    if m < 0:
        raise InvalidInputError("degree must be nonnegative")
    N = len(x)
    if N == 0:
        return 1 if m == 0 else 0
    terms = binomial(N + m - 1, m)
    if terms > term_cap:
        raise SizeError(
            f"h_{m} in {N} variables has {terms} monomials (cap {term_cap}); "
            "use the bialternant or expansion routes"
        )
    total = 0
    for k in weak_compositions(N, m):
        term = 1
        for xj, kj in zip(x, k):
            if kj:
                term *= xj**kj
        total += term
    return total * _one_like(x)


def hom_recurrence(x: Sequence, m: int):
    """``h_m`` by adding variables one at a time; ``O(N m)`` operations."""
    if m < 0:
        raise InvalidInputError("degree must be nonnegative")
    # row[d] = h_d(x_1..x_j)
    row = [1] + [0] * m
    for xj in x:
        for d in range(1, m + 1):
            row[d] = row[d] + xj * row[d - 1]
    return row[m]


def require_distinct(points: Sequence, min_separation: float = DEFAULTS.min_separation):
    """Raise unless the points are pairwise distinct.

    Exact points must differ; approximate points must be at least
    ``min_separation`` apart.
    """
    for i in range(len(points)):
        for j in range(i + 1, len(points)):
            a, b = points[i], points[j]
            if is_exact(a) and is_exact(b):
                if a == b:
                    raise DegenerateInputError(f"points {i + 1} and {j + 1} coincide ({a})")
            elif abs(a - b) < min_separation:
                raise DegenerateInputError(
                    f"points {i + 1} and {j + 1} are closer than {min_separation:g}"
                )


def hom_distinct(x: Sequence, m: int, min_separation: float = DEFAULTS.min_separation):
    """``sum_j x_j^(m+N-1) / prod_{k != j} (x_j - x_k)`` for pairwise distinct points."""
    if m < 0:
        raise InvalidInputError("degree must be nonnegative")
    require_distinct(x, min_separation)
    N = len(x)
    total = 0
    for j, xj in enumerate(x):
        den = 1
        for k, xk in enumerate(x):
            if k != j:
                den *= xj - xk
        num = xj ** (m + N - 1)
        total += Fraction(num) / den if is_exact(num) and is_exact(den) else num / den
    return total


def hom_rep_combinatorial(y: Sequence, kappa, m: int, term_cap: int = DEFAULTS.term_cap):
    """``h_m(y^[kappa])`` summing over ``M_{n,m}`` with grouped multiplicities."""
    kv = as_kappa(kappa)
    if len(y) != kv.n:
        raise InvalidInputError(f"{len(y)} points given for {kv.n} multiplicities")
    if m < 0:
        raise InvalidInputError("degree must be nonnegative")
    terms = binomial(kv.n + m - 1, m)
    if terms > term_cap:
        raise SizeError(f"{terms} grouped monomials exceed the cap {term_cap}")
    total = 0
    for k in weak_compositions(kv.n, m):
        term = 1
        for yj, kapj, kj in zip(y, kv.kappa, k):
            if kj:
                term *= binomial(kapj + kj - 1, kj) * yj**kj
        total += term
    return total * _one_like(y)


def hom_single_repeated(t, r: int, m: int):
    """``h_m(t, ..., t)`` with ``r`` copies; zero for negative ``m``."""
    if r < 1:
        raise InvalidInputError("repetition count must be positive")
    if m < 0:
        return 0 * t
    return binomial(r + m - 1, r - 1) * t**m


def hom_single_via_derivative(t, r: int, m: int):
    """Same value as :func:`hom_single_repeated`, via the formal derivative
    ``(1/(r-1)!) d^(r-1)/dt^(r-1) t^(m+r-1)``."""
    if m < 0:
        return 0 * t
    deg = m + r - 1
    mono = [0] * deg + [1]
    d = poly_derivative(mono, r - 1)
    # only the t^m coefficient survives
    coeff = d[m]
    assert coeff % math.factorial(r - 1) == 0
    return coeff // math.factorial(r - 1) * t**m


def gomezllata_shift(x: Sequence, m: int):
    """``sum_k binomial(m+n-1, m-k) h_k(x)``, which equals ``h_m(1+x_1, ..., 1+x_n)``."""
    if m < 0:
        raise InvalidInputError("degree must be nonnegative")
    n = len(x)
    return sum(binomial(m + n - 1, m - k) * hom_recurrence(x, k) for k in range(m + 1))
