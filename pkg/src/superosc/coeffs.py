"""Superoscillation coefficient polynomials c_k(n, x), the band-limited
sequence F_n built from them, and numeric convergence profiling.

The k-th Fourier weight of F_n(x, a) = (cos(x/n) + i a sin(x/n))^n is

    c_k(n, a) = C(n, k) ((1+a)/2)^(n-k) ((1-a)/2)^k,

extended by zero outside 0 <= k <= n.  Each frequency 1 - 2k/n stays in
[-1, 1] while the limit e^{iax} oscillates at |a| > 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import mpmath as mp

from .combinat import binomial
from .exact import ExpSeries, Poly, Rat, series_exp_linear, series_shift_tk

#: (1+x)/2 and (1-x)/2 as exact polynomials
HALF_1_PLUS_X = Poly((Rat(1, 2), Rat(1, 2)))
HALF_1_MINUS_X = Poly((Rat(1, 2), Rat(-1, 2)))


@lru_cache(maxsize=None)
def half_power(plus: bool, e: int) -> Poly:
    base = HALF_1_PLUS_X if plus else HALF_1_MINUS_X
    return base**e


@lru_cache(maxsize=None)
def c_coeff(k: int, n: int) -> Poly:
    """C(n,k) ((1+x)/2)^(n-k) ((1-x)/2)^k; the zero polynomial when k is
    outside 0..n."""
    if n < 0:
        raise ValueError("sequence index n must be >= 0")
    if k < 0 or k > n:
        return Poly()
    return half_power(True, n - k) * half_power(False, k) * binomial(n, k)


def c_derivative(k: int, n: int) -> Poly:
    """Termwise derivative d/dx of c_k(n, x)."""
    return c_coeff(k, n).derivative()


def c_recurrence_rhs(k: int, n: int) -> Poly:
    """((1-x)/2) c_{k-1}(n,x) + ((1+x)/2) c_k(n,x), which telescopes to
    c_k(n+1, x)."""
    return HALF_1_MINUS_X * c_coeff(k - 1, n) + HALF_1_PLUS_X * c_coeff(k, n)


@lru_cache(maxsize=None)
def g_series(k: int, order: int) -> ExpSeries:
    """(1/k!) (t(1-x)/2)^k exp(t(x+1)/2); its t^v/v! coefficient is
    c_k(v, x) exactly."""
    if k < 0:
        raise ValueError("k must be >= 0")
    if k > order:
        raise ValueError(f"k={k} exceeds truncation order {order}")
    base = series_exp_linear(HALF_1_PLUS_X, order)
    shifted = series_shift_tk(base, k)
    return shifted.scale(half_power(False, k) / math.factorial(k))


def f_eval(n: int, a: float, x: float) -> complex:
    """(cos(x/n) + i a sin(x/n))^n in product form; well conditioned for
    any n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    theta = x / n
    return complex(math.cos(theta), a * math.sin(theta)) ** n


def fourier_sum_precision(n: int, a: float, extra_log2: float = 0.0) -> int:
    """Working precision (bits) for Fourier-form sums: they add terms of
    total magnitude max(1,|a|)^n to produce an O(1) value, so the
    precision must absorb that cancellation."""
    return 80 + int(n * math.log2(1.0 + abs(a)) + extra_log2)


def f_eval_fourier(n: int, a: float, x: float) -> complex:
    """Same value as f_eval via the Fourier sum
    sum_k c_k(n,a) e^{i(1-2k/n)x}.

    The sum cancels max(1,|a|)^n of magnitude, far beyond float64, so it
    runs at a scaled precision; each exponential is cos + i sin per term.
    Serves as the independent cross-check of the product form.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    with mp.workprec(fourier_sum_precision(n, a)):
        u = (1 + mp.mpf(a)) / 2
        w = (1 - mp.mpf(a)) / 2
        total = mp.mpc(0)
        for k in range(n + 1):
            phi = mp.mpf(n - 2 * k) / n * x
            weight = mp.binomial(n, k) * u ** (n - k) * w**k
            total += weight * mp.mpc(mp.cos(phi), mp.sin(phi))
        return complex(total)


@dataclass(frozen=True)
class GridResult:
    """Sampled values and sup errors of a sequence against its limit."""

    xs: tuple
    values: dict
    sup_error: dict

    def sup_errors_in_order(self, n_list) -> list:
        return [self.sup_error[n] for n in n_list]


def sample_grid(x_lo: float, x_hi: float, samples: int) -> tuple:
    if samples < 1:
        raise ValueError("need at least one sample")
    if samples == 1:
        return (x_lo,)
    if x_lo >= x_hi:
        raise ValueError("empty sample range")
    step = (x_hi - x_lo) / (samples - 1)
    return tuple(x_lo + i * step for i in range(samples))


def convergence_profile(
    n_list, a: float, x_lo: float, x_hi: float, samples: int
) -> GridResult:
    """Sup over the sample grid of |F_n(x,a) - e^{iax}| for each n."""
    if not n_list:
        raise ValueError("n_list must be nonempty")
    xs = sample_grid(x_lo, x_hi, samples)
    values = {}
    sup_error = {}
    for n in n_list:
        vals = tuple(f_eval(n, a, x) for x in xs)
        errs = [abs(v - complex(math.cos(a * x), math.sin(a * x))) for v, x in zip(vals, xs)]
        values[n] = vals
        sup_error[n] = max(errs)
    return GridResult(xs=xs, values=values, sup_error=sup_error)
