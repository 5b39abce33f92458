"""Timing harness for the determinant route versus the cached expansion table."""

from __future__ import annotations

import random
import statistics
import time
from dataclasses import dataclass

from .combinat import expand_points
from .errors import SizeError
from .expansions import ExpansionTable, expansion_polynomials, hom_rep_bialternant
from .homcore import hom_combinatorial


@dataclass(frozen=True)
class BenchRow:
    N: int
    m: int
    method: str
    nanos: int


def bench_points(n: int, seed: int = 0) -> list[float]:
    """``n`` points in (-1, 1), pairwise at least 0.1 apart, so huge powers stay finite."""
    rng = random.Random(seed)
    pts: list[float] = []
    while len(pts) < n:
        v = round(rng.uniform(-0.95, 0.95), 2)
        if all(abs(v - p) >= 0.1 for p in pts):
            pts.append(v)
    return pts


def even_kappa(N: int, n: int) -> tuple[int, ...]:
    base, extra = divmod(N, n)
    return tuple(base + (1 if i < extra else 0) for i in range(n))


def time_table_eval(table: ExpansionTable, m: int, sweep: int = 1000, repeats: int = 5) -> int:
    """Median over ``repeats`` of the mean per-evaluation time for ``m .. m+sweep-1``."""
    samples = []
    ms = range(m, m + sweep)
    for _ in range(repeats):
        t0 = time.perf_counter_ns()
        for mm in ms:
            table(mm)
        samples.append((time.perf_counter_ns() - t0) / sweep)
    return int(statistics.median(samples))


def run_bench(N: int = 12, ms=(10**3, 10**6, 10**9), n: int = 4, seed: int = 0,
              sweep: int = 1000, log=None) -> list[BenchRow]:
    y = bench_points(n, seed)
    kappa = even_kappa(N, n)
    rows: list[BenchRow] = []

    t0 = time.perf_counter_ns()
    table = expansion_polynomials(y, kappa)
    rows.append(BenchRow(N, 0, "table_build", time.perf_counter_ns() - t0))

    for m in ms:
        t0 = time.perf_counter_ns()
        hom_rep_bialternant(y, kappa, m)
        rows.append(BenchRow(N, m, "bialternant", time.perf_counter_ns() - t0))

        rows.append(BenchRow(N, m, "table_eval", time_table_eval(table, m, sweep)))

        try:
            t0 = time.perf_counter_ns()
            hom_combinatorial(expand_points(y, kappa), m)
            rows.append(BenchRow(N, m, "combinatorial", time.perf_counter_ns() - t0))
        except SizeError as exc:
            if log is not None:
                log(f"combinatorial route refused N={N} m={m}: {exc}")
    return rows
