"""Index bookkeeping for repeated variables and exact combinatorial numbers.

Flat indices ``k`` and block/offset pairs ``(q, r)`` are 1-based, as in the
usual notation ``y^[kappa] = (y_1 repeated kappa_1 times, ..., y_n repeated
kappa_n times)``.
"""

from __future__ import annotations

import bisect
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, NamedTuple, Sequence

from .errors import InvalidInputError


def partial_sums(kappa: Sequence[int]) -> tuple[int, ...]:
    """Return ``(sigma_0, ..., sigma_n)`` with ``sigma_0 = 0``.

    >>> partial_sums((6, 4, 7, 1))
    (0, 6, 10, 17, 18)
    """
    if len(kappa) == 0:
        raise InvalidInputError("multiplicity vector must be nonempty")
    sums = [0]
    for k in kappa:
        if not isinstance(k, int) or k < 1:
            raise InvalidInputError(f"multiplicities must be positive integers, got {k!r}")
        sums.append(sums[-1] + k)
    return tuple(sums)


@dataclass(frozen=True)
class MultiplicityVector:
    kappa: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "kappa", tuple(self.kappa))
        object.__setattr__(self, "_sigma", partial_sums(self.kappa))

    @property
    def n(self) -> int:
        return len(self.kappa)

    @property
    def N(self) -> int:
        return self._sigma[-1]

    @property
    def sigma(self) -> tuple[int, ...]:
        return self._sigma

    def __len__(self):
        return len(self.kappa)

    def __iter__(self):
        return iter(self.kappa)

    def __getitem__(self, i):
        return self.kappa[i]

    def pairs(self) -> Iterator["IndexPair"]:
        """Enumerate ``Q_kappa`` in lexicographic order."""
        for q, kq in enumerate(self.kappa, start=1):
            for r in range(1, kq + 1):
                yield IndexPair(q, r)


def as_kappa(kappa) -> MultiplicityVector:
    if isinstance(kappa, MultiplicityVector):
        return kappa
    return MultiplicityVector(tuple(kappa))


class IndexPair(NamedTuple):
    q: int
    r: int


def rho(kappa, pair) -> int:
    """Flat index ``sigma_{q-1} + r`` of the pair ``(q, r)``."""
    kv = as_kappa(kappa)
    q, r = pair
    if not (1 <= q <= kv.n and 1 <= r <= kv.kappa[q - 1]):
        raise InvalidInputError(f"pair {(q, r)} is not in Q_kappa for kappa={kv.kappa}")
    return kv.sigma[q - 1] + r


def gamma(kappa, k: int) -> IndexPair:
    """Inverse of :func:`rho`."""
    kv = as_kappa(kappa)
    if not 1 <= k <= kv.N:
        raise InvalidInputError(f"flat index {k} outside 1..{kv.N}")
    # largest q with sigma_{q-1} < k
    q = bisect.bisect_left(kv.sigma, k)
    return IndexPair(q, k - kv.sigma[q - 1])


def expand_points(y: Sequence, kappa) -> list:
    """Repeat ``y_q`` exactly ``kappa_q`` times, block by block."""
    kv = as_kappa(kappa)
    if len(y) != kv.n:
        raise InvalidInputError(f"{len(y)} points given for {kv.n} multiplicities")
    out = []
    for yq, kq in zip(y, kv.kappa):
        out.extend([yq] * kq)
    return out


def weak_compositions(n: int, m: int) -> Iterator[tuple[int, ...]]:
    """Lazily yield all ``n``-tuples of nonnegative integers summing to ``m``.

    Tuples come out in lexicographic order; there are ``binomial(n+m-1, n-1)``
    of them.
    """
    if n < 0 or m < 0:
        raise InvalidInputError("n and m must be nonnegative")
    if n == 0:
        if m > 0:
            raise InvalidInputError("no composition of a positive weight into 0 parts")
        yield ()
        return

    buf = [0] * n

    def rec(pos, remaining):
        if pos == n - 1:
            buf[pos] = remaining
            yield tuple(buf)
            return
        for part in range(remaining + 1):
            buf[pos] = part
            yield from rec(pos + 1, remaining - part)

    yield from rec(0, m)


def group_composition(kappa, beta: Sequence[int]) -> tuple[int, ...]:
    """Sum ``beta`` over each block of positions; length ``N`` -> length ``n``."""
    kv = as_kappa(kappa)
    if len(beta) != kv.N:
        raise InvalidInputError(f"composition has length {len(beta)}, expected {kv.N}")
    s = kv.sigma
    return tuple(sum(beta[s[q]:s[q + 1]]) for q in range(kv.n))


def preimage_cardinality(kappa, alpha: Sequence[int]) -> int:
    """Number of ``beta`` in ``M_{N,|alpha|}`` grouped onto ``alpha``."""
    kv = as_kappa(kappa)
    if len(alpha) != kv.n:
        raise InvalidInputError("alpha must have one entry per block")
    out = 1
    for kp, ap in zip(kv.kappa, alpha):
        out *= binomial(kp + ap - 1, ap)
    return out


def binomial(a: int, b: int) -> int:
    """Exact binomial coefficient, zero when ``b`` lies outside ``[0, a]``."""
    if b < 0 or a < 0 or b > a:
        return 0
    return math.comb(a, b)


def binomial_falling(a: int, b: int) -> int:
    """``binomial(a, b)`` as a product of ``b`` falling factors.

    Intended for huge ``a`` and small ``b`` (e.g. ``binomial(m+N-1, r-1)``
    with ``m`` around 1e9); cost is ``O(b)`` big-integer operations.
    """
    if b < 0 or a < 0 or b > a:
        return 0
    num = 1
    for i in range(b):
        num *= a - i
    return num // math.factorial(b)


@lru_cache(maxsize=None)
def stirling_first_unsigned(a: int, b: int) -> int:
    """Unsigned Stirling numbers of the first kind, ``[a over b]``."""
    if a < 0 or b < 0:
        return 0
    if a == 0 and b == 0:
        return 1
    if a == 0 or b == 0:
        return 0
    return (a - 1) * stirling_first_unsigned(a - 1, b) + stirling_first_unsigned(a - 1, b - 1)


def binomial_sum_sides(l: int, q: int, m: int, n: int) -> tuple[int, int]:
    """Both sides of ``sum_j C(l-j, m) C(q+j, n) = C(l+q+1, m+n+1)``; equal when ``n >= q >= 0``."""
    lhs = sum(binomial(l - j, m) * binomial(q + j, n) for j in range(l + 1))
    return lhs, binomial(l + q + 1, m + n + 1)
