"""Combinatorial kernels: binomials with the zero-extension convention,
rising factorials, and Stirling numbers of the second kind."""

from __future__ import annotations

import math
from functools import lru_cache

from .exact import Rat, as_rat

factorial = math.factorial


def binomial(n: int, k: int) -> int:
    """Binomial coefficient C(n, k) for arbitrary integer n.

    Returns 0 for k < 0 and, when n >= 0, for k > n.  For negative n the
    value is the falling-factorial generalization
    n(n-1)...(n-k+1)/k!, which is never zero.
    """
    if k < 0:
        return 0
    if n >= 0:
        return math.comb(n, k) if k <= n else 0
    num = 1
    for j in range(k):
        num *= n - j
    return num // factorial(k)


def pochhammer(beta, v: int) -> Rat:
    """Rising factorial beta(beta+1)...(beta+v-1); empty product is 1."""
    if v < 0:
        raise ValueError("pochhammer index must be nonnegative")
    beta = as_rat(beta)
    acc = Rat(1)
    for j in range(v):
        acc *= beta + j
    return acc


class StirlingTable:
    """Memoized triangle of Stirling partition numbers S2(c, d).

    Rows are built on demand from the recurrence
    S2(c, d) = d*S2(c-1, d) + S2(c-1, d-1) with S2(0, 0) = 1.
    Construction is single-writer; lookups after that are read-only.
    """

    def __init__(self, c_max: int = 0):
        self._rows = [[1]]
        self._extend(c_max)

    def _extend(self, c_max: int):
        while len(self._rows) <= c_max:
            prev = self._rows[-1]
            c = len(self._rows)
            row = [0] * (c + 1)
            for d in range(1, c + 1):
                row[d] = d * prev[d] if d < len(prev) else 0
                row[d] += prev[d - 1]
            self._rows.append(row)

    def value(self, c: int, d: int) -> int:
        if c < 0 or d < 0 or d > c:
            return 0
        self._extend(c)
        return self._rows[c][d]


_SHARED_TABLE = StirlingTable()


def stirling2(c: int, d: int) -> int:
    """Stirling number of the second kind via the shared recurrence table."""
    return _SHARED_TABLE.value(c, d)


@lru_cache(maxsize=None)
def stirling2_alt_sum(c: int, d: int) -> Rat:
    """S2(c, d) from the alternating sum (1/d!) sum_v (-1)^v C(d,v) (d-v)^c,
    with 0^0 = 1.  Kept separate from the recurrence so the two routes can
    cross-check each other."""
    if c < 0 or d < 0 or d > c:
        return Rat(0)
    total = 0
    for v in range(d + 1):
        base = d - v
        power = 1 if c == 0 else base**c
        total += (-1) ** v * binomial(d, v) * power
    return Rat(total, factorial(d))
