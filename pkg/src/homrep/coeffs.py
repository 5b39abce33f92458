"""Partial-fraction coefficients ``A_{y,kappa,s,r}`` and ``B_{y,kappa,s,r}``.

``B`` are the coefficients of ``1/prod (t - y_j)^kappa_j`` over the monic
poles ``(t - y_s)^-r``; ``A`` those of ``1/prod (1 - y_j t)^kappa_j`` over the
unital poles ``(1 - y_s t)^-r``. Both reduce to ``h_{kappa_s - r}`` of
transformed points with repetitions.
"""

from __future__ import annotations

import math
import random
import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .combinat import as_kappa, binomial, weak_compositions
from .errors import InvalidInputError
from .homcore import hom_rep_combinatorial, require_distinct
from .numeric import DEFAULTS, DenseMatrix, is_exact, solve_linear

MONIC = "monic"
UNITAL = "unital"


def _div(a, b):
    if is_exact(a) and is_exact(b):
        return Fraction(a) / b
    return a / b


def _validate(y, kappa, s=None, r=None):
    kv = as_kappa(kappa)
    if len(y) != kv.n:
        raise InvalidInputError(f"{len(y)} points given for {kv.n} multiplicities")
    require_distinct(y)
    if any(isinstance(v, float) for v in y) and kv.n > 1:
        sep = min(abs(a - b) for i, a in enumerate(y) for b in y[i + 1:])
        if sep < DEFAULTS.pole_warn_separation:
            warnings.warn(
                f"pole separation {sep:g} is tiny; coefficients may be badly scaled",
                RuntimeWarning,
                stacklevel=3,
            )
    if s is not None:
        if not (1 <= s <= kv.n and 1 <= r <= kv.kappa[s - 1]):
            raise InvalidInputError(f"(s, r) = {(s, r)} is not in Q_kappa")
    return kv


def _compositions(n, m):
    # with no other blocks the only weight reachable is 0
    if n == 0:
        return [()] if m == 0 else []
    return weak_compositions(n, m)


def _others(kv, s):
    return [d for d in range(1, kv.n + 1) if d != s]


def coeff_B(y: Sequence, kappa, s: int, r: int, method: str = "hom"):
    """Monic partial-fraction coefficient at pole ``y_s`` of order ``r``.

    ``method="multisum"`` evaluates the expanded multisum instead of calling
    ``h``; both agree.
    """
    kv = _validate(y, kappa, s, r)
    others = _others(kv, s)
    ys = y[s - 1]
    sign = -1 if (kv.N - kv.kappa[s - 1]) % 2 else 1
    deg = kv.kappa[s - 1] - r
    if method == "hom":
        z = [_div(1, y[d - 1] - ys) for d in others]
        lam = [kv.kappa[d - 1] for d in others]
        pref = sign
        for zd, ld in zip(z, lam):
            pref *= zd**ld
        inner = hom_rep_combinatorial(z, lam, deg) if others else (1 if deg == 0 else 0)
        return pref * inner
    if method == "multisum":
        total = 0
        for k in _compositions(len(others), deg):
            term = 1
            for d, kd in zip(others, k):
                kapd = kv.kappa[d - 1]
                term *= binomial(kapd + kd - 1, kd) * _div(1, (y[d - 1] - ys) ** (kapd + kd))
            total += term
        return sign * total
    raise InvalidInputError(f"unknown method {method!r}")


def coeff_A(y: Sequence, kappa, s: int, r: int, method: str = "hom"):
    """Unital partial-fraction coefficient at pole ``1/y_s`` of order ``r``."""
    kv = _validate(y, kappa, s, r)
    others = _others(kv, s)
    ys = y[s - 1]
    deg = kv.kappa[s - 1] - r
    if method == "hom":
        den = 1
        for d in others:
            den *= (y[d - 1] - ys) ** kv.kappa[d - 1]
        pref = _div((-ys) ** (kv.N - kv.kappa[s - 1]), den)
        w = [_div(y[d - 1], y[d - 1] - ys) for d in others]
        lam = [kv.kappa[d - 1] for d in others]
        inner = hom_rep_combinatorial(w, lam, deg) if others else (1 if deg == 0 else 0)
        return pref * inner
    if method == "multisum":
        sign = -1 if (kv.N - kv.kappa[s - 1]) % 2 else 1
        total = 0
        for k in _compositions(len(others), deg):
            term = 1
            for d, kd in zip(others, k):
                kapd = kv.kappa[d - 1]
                yd = y[d - 1]
                term *= binomial(kapd + kd - 1, kd) * _div(
                    ys**kapd * yd**kd, (yd - ys) ** (kapd + kd)
                )
            total += term
        return sign * total
    raise InvalidInputError(f"unknown method {method!r}")


def a_from_b(y: Sequence, kappa, s: int, r: int):
    """``A`` recovered from ``B`` evaluated at the reciprocal points ``1/y``."""
    kv = as_kappa(kappa)
    if any(v == 0 for v in y):
        raise InvalidInputError("a_from_b needs nonzero points")
    inv_y = [_div(1, v) for v in y]
    b = coeff_B(inv_y, kv, s, r)
    ys = y[s - 1]
    sign = -1 if (kv.N - r) % 2 else 1
    scale = _div(1, ys ** (kv.kappa[s - 1] - r))
    for d in _others(kv, s):
        scale = _div(scale, y[d - 1] ** kv.kappa[d - 1])
    return sign * scale * b


@dataclass(frozen=True)
class CoefficientTable:
    family: str
    values: dict

    def __getitem__(self, sr):
        return self.values[sr]

    def __len__(self):
        return len(self.values)

    def items(self):
        return self.values.items()


def coefficient_table(y: Sequence, kappa, family: str = "A", method: str = "hom") -> CoefficientTable:
    kv = as_kappa(kappa)
    fn = {"A": coeff_A, "B": coeff_B}.get(family)
    if fn is None:
        raise InvalidInputError(f"unknown coefficient family {family!r}")
    return CoefficientTable(family, {(s, r): fn(y, kv, s, r, method) for s, r in kv.pairs()})


@dataclass(frozen=True)
class PartialFractionTerm:
    normalization: str
    s: int
    r: int
    coefficient: object


def partial_fraction_monic(y: Sequence, kappa) -> list[PartialFractionTerm]:
    """Terms ``B/(t - y_s)^r`` summing to ``1/prod (t - y_j)^kappa_j``."""
    kv = as_kappa(kappa)
    return [PartialFractionTerm(MONIC, s, r, coeff_B(y, kv, s, r)) for s, r in kv.pairs()]


def partial_fraction_unital(y: Sequence, kappa) -> list[PartialFractionTerm]:
    """Terms ``A/(1 - y_s t)^r`` summing to ``1/prod (1 - y_j t)^kappa_j``."""
    kv = as_kappa(kappa)
    return [PartialFractionTerm(UNITAL, s, r, coeff_A(y, kv, s, r)) for s, r in kv.pairs()]


def _pole_factor(normalization, ys, t):
    return t - ys if normalization == MONIC else 1 - ys * t


def evaluate_terms(terms: Sequence[PartialFractionTerm], y: Sequence, t):
    return sum(_div(term.coefficient, _pole_factor(term.normalization, y[term.s - 1], t) ** term.r)
               for term in terms)


def evaluate_rational(y: Sequence, kappa, t, normalization: str = MONIC):
    """The left-hand side ``1/prod (t - y_j)^kappa_j`` (or the unital form)."""
    den = 1
    for yj, kj in zip(y, as_kappa(kappa)):
        den *= _pole_factor(normalization, yj, t) ** kj
    return _div(1, den)


def sample_points(y: Sequence, count: int, seed: int = 0, normalization: str = MONIC,
                  bound: int = 9) -> list[Fraction]:
    """``count`` distinct small rationals avoiding every pole, drawn reproducibly."""
    rng = random.Random(seed)
    poles = set()
    for v in y:
        if normalization == MONIC:
            poles.add(Fraction(v))
        elif v != 0:
            poles.add(1 / Fraction(v))
    out: list[Fraction] = []
    while len(out) < count:
        t = Fraction(rng.randint(-bound * 4, bound * 4), rng.randint(1, bound))
        if t not in poles and t not in out:
            out.append(t)
    return out


def solve_partial_fraction(y: Sequence, kappa, normalization: str = MONIC, seed: int = 0) -> dict:
    """Recover the coefficients from ``N`` sample evaluations by a linear solve.

    An independent route to :func:`coefficient_table` that never touches ``h``.
    """
    kv = as_kappa(kappa)
    pairs = list(kv.pairs())
    ts = sample_points(y, kv.N, seed, normalization)
    rows = [[_div(1, _pole_factor(normalization, y[s - 1], t) ** r) for s, r in pairs] for t in ts]
    rhs = [evaluate_rational(y, kv, t, normalization) for t in ts]
    sol = solve_linear(DenseMatrix.from_rows(rows), rhs)
    return dict(zip(pairs, sol))


def derivative_F_at_pole(y: Sequence, kappa, s: int, m: int):
    """``F_s^(m)(y_s)`` with ``F_s = prod_{d != s} (t - y_d)^-kappa_d``.

    Computed by the general Leibniz rule over the factors; valid for
    ``0 <= m <= kappa_s - 1``, where it equals ``m! B_{y,kappa,s,kappa_s-m}``.
    """
    kv = _validate(y, kappa)
    if not 1 <= s <= kv.n:
        raise InvalidInputError(f"block {s} out of range")
    if not 0 <= m <= kv.kappa[s - 1] - 1:
        raise InvalidInputError(f"derivative order {m} outside 0..{kv.kappa[s - 1] - 1}")
    others = _others(kv, s)
    ys = y[s - 1]
    total = 0
    for k in _compositions(len(others), m):
        term = Fraction(math.factorial(m))
        for d, kd in zip(others, k):
            kapd = kv.kappa[d - 1]
            # k-th derivative of (t - y_d)^-kappa_d at y_s
            deriv = _div((-1) ** kd * math.factorial(kapd + kd - 1),
                         math.factorial(kapd - 1) * (ys - y[d - 1]) ** (kapd + kd))
            term = term / math.factorial(kd) * deriv
        total += term
    return total if not any(isinstance(v, float) for v in y) else float(total)
