"""Grid sweep that checks every route against every other one, exactly."""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator

from .coeffs import (
    MONIC,
    UNITAL,
    evaluate_rational,
    evaluate_terms,
    partial_fraction_monic,
    partial_fraction_unital,
    sample_points,
)
from .combinat import expand_points
from .expansions import (
    expansion_polynomials,
    hom_rep_bialternant,
    hom_rep_expansion_A,
    hom_rep_expansion_B,
)
from .homcore import hom_recurrence, hom_rep_combinatorial
from .numeric import DenseMatrix
from .vandermonde import build_V, inverse_V_moucouf, inverse_last_column

HOM_METHODS = ("combinatorial", "bialternant", "expansionA", "expansionB")


@dataclass(frozen=True)
class GridBounds:
    max_n: int = 4
    max_N: int = 7
    max_m: int = 8
    bound: int = 9  # numerators in [-bound, bound], denominators in [1, bound]


@dataclass
class CrosscheckReport:
    bounds: GridBounds
    seed: int
    cases: int = 0
    passed: int = 0
    failed: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.failed == 0


def compositions(N: int, n: int) -> Iterator[tuple[int, ...]]:
    """Compositions of ``N`` into ``n`` positive parts, lexicographically."""
    if n == 1:
        yield (N,)
        return
    for first in range(1, N - n + 2):
        for rest in compositions(N - first, n - 1):
            yield (first,) + rest


def random_points(n: int, rng: random.Random, bound: int = 9) -> list[Fraction]:
    pts: list[Fraction] = []
    while len(pts) < n:
        v = Fraction(rng.randint(-bound, bound), rng.randint(1, bound))
        if v not in pts:
            pts.append(v)
    return pts


def grid_cases(bounds: GridBounds, seed: int = 0) -> list[tuple[tuple, tuple]]:
    cases = []
    for N in range(1, bounds.max_N + 1):
        for n in range(1, min(bounds.max_n, N) + 1):
            for kappa in compositions(N, n):
                rng = random.Random(f"{seed}:{kappa}")
                cases.append((tuple(random_points(n, rng, bounds.bound)), kappa))
    return cases


def hom_all_routes(y, kappa, m: int) -> dict:
    return {
        "combinatorial": hom_rep_combinatorial(y, kappa, m),
        "bialternant": hom_rep_bialternant(y, kappa, m),
        "expansionA": hom_rep_expansion_A(y, kappa, m),
        "expansionB": hom_rep_expansion_B(y, kappa, m),
    }


def _fmt(y, kappa, **extra):
    d = {"y": [str(v) for v in y], "kappa": list(kappa)}
    d.update(extra)
    return d


def check_case(args) -> tuple[int, list]:
    """Run every check for one ``(y, kappa)``; returns (checks run, failures)."""
    y, kappa, max_m, seed, inject_fault = args
    checks = 0
    failures = []
    table = expansion_polynomials(y, kappa)
    flat = expand_points(y, kappa)
    for m in range(max_m + 1):
        vals = hom_all_routes(y, kappa, m)
        vals["recurrence"] = hom_recurrence(flat, m)
        vals["stirling_table"] = table(m)
        if inject_fault and m == max_m:
            vals["expansionB"] += 1
        checks += 1
        if len(set(vals.values())) != 1:
            failures.append(_fmt(y, kappa, check="hom", m=m,
                                 values={k: str(v) for k, v in vals.items()}))

    N = sum(kappa)
    for norm, terms in ((MONIC, partial_fraction_monic(y, kappa)),
                        (UNITAL, partial_fraction_unital(y, kappa))):
        for t in sample_points(y, N + 1, seed, norm):
            checks += 1
            if evaluate_terms(terms, y, t) != evaluate_rational(y, kappa, t, norm):
                failures.append(_fmt(y, kappa, check=f"partial_fraction_{norm}", t=str(t)))

    V = build_V(y, kappa).matrix
    inv = inverse_V_moucouf(y, kappa)
    checks += 2
    if V @ inv != DenseMatrix.identity(N):
        failures.append(_fmt(y, kappa, check="inverse"))
    if inv.column(N - 1) != inverse_last_column(y, kappa):
        failures.append(_fmt(y, kappa, check="inverse_last_column"))
    return checks, failures


def run_crosscheck(bounds: GridBounds = GridBounds(), seed: int = 0, jobs: int = 1,
                   inject_fault: bool = False) -> CrosscheckReport:
    """Sweep the grid; results are aggregated in grid order whatever ``jobs`` is."""
    cases = grid_cases(bounds, seed)
    work = [(y, kappa, bounds.max_m, seed, inject_fault and i == 0)
            for i, (y, kappa) in enumerate(cases)]
    report = CrosscheckReport(bounds, seed, cases=len(cases))
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(check_case, work, chunksize=4))
    else:
        results = [check_case(w) for w in work]
    for checks, failures in results:
        report.failed += len(failures)
        report.passed += checks - len(failures)
        report.failures.extend(failures)
    return report
