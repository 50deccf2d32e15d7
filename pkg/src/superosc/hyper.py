"""Generalized hypergeometric series pFq, exact and floating-point, plus
the beta-weighted integral representation of the confluent case and the
Stirling-number closed forms for parameter lists like (c+1,...,c+1; c,...,c).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from scipy.integrate import quad

from .combinat import binomial, factorial, stirling2
from .exact import (
    ExpSeries,
    ONE_POLY,
    Poly,
    Rat,
    as_rat,
    series_exp_linear,
    series_shift_tk,
)

#: stop the float partial sum after this many consecutive negligible terms
#: (terms are not monotone for negative upper parameters)
_STABLE_TERMS = 10
_MAX_TERMS = 100_000


def _is_nonpositive_integer(r) -> bool:
    return r.denominator == 1 and r.numerator <= 0


@dataclass(frozen=True)
class HyperSpec:
    """Parameter lists (upper; lower) of a generalized hypergeometric
    series sum_m [prod (upper_j)_rising^m / prod (lower_j)_rising^m] z^m/m!.

    Lower parameters must avoid 0, -1, -2, ... where the series is
    undefined.
    """

    upper: tuple
    lower: tuple

    def __init__(self, upper, lower):
        object.__setattr__(self, "upper", tuple(as_rat(b) for b in upper))
        object.__setattr__(self, "lower", tuple(as_rat(g) for g in lower))
        for g in self.lower:
            if _is_nonpositive_integer(g):
                raise ValueError(f"lower parameter {g} is a nonpositive integer")

    @property
    def p(self) -> int:
        return len(self.upper)

    @property
    def q(self) -> int:
        return len(self.lower)


@lru_cache(maxsize=None)
def pfq_series(spec: HyperSpec, zscale: Poly, order: int) -> ExpSeries:
    """Exact truncation of the hypergeometric series at z = zscale*t.

    In the exponential convention the t^m/m! coefficient is
    (prod (b_j)_rising^m / prod (g_j)_rising^m) * zscale^m.  No convergence
    condition applies to a formal truncation.
    """
    coeffs = []
    ratio = Rat(1)
    zpow = ONE_POLY
    for m in range(order + 1):
        if m:
            num = Rat(1)
            for b in spec.upper:
                num *= b + (m - 1)
            den = Rat(1)
            for g in spec.lower:
                den *= g + (m - 1)
            ratio = ratio * num / den
            zpow = zpow * zscale
        coeffs.append(zpow * ratio)
    return ExpSeries(coeffs)


def pfq_eval_float(spec: HyperSpec, z: float, tol: float) -> float:
    """Partial sum of the series at a real argument, entire case (p <= q)
    only.  Stops once _STABLE_TERMS consecutive terms are below
    tol*(1+|sum|)."""
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    if spec.p > spec.q:
        raise ValueError("float evaluation supports only p <= q (entire case)")
    total = 0.0
    term = 1.0
    small = 0
    m = 0
    while m < _MAX_TERMS:
        total += term
        if abs(term) < tol * (1.0 + abs(total)):
            small += 1
            if small >= _STABLE_TERMS:
                return total
        else:
            small = 0
        num = 1.0
        for b in spec.upper:
            num *= float(b) + m
        den = 1.0
        for g in spec.lower:
            den *= float(g) + m
        term = term * num / den * z / (m + 1)
        m += 1
    raise RuntimeError("hypergeometric series did not stabilize")


def kummer_integral(mu, sigma, u: float) -> float:
    """Confluent hypergeometric value 1F1(mu; sigma; u) from the
    beta-weighted integral

        Gamma(sigma)/(Gamma(mu)Gamma(sigma-mu))
            * int_0^1 e^{u w} w^{mu-1} (1-w)^{sigma-mu-1} dw,

    valid for sigma > mu > 0.  Adaptive quadrature with absolute-error
    target 1e-10; mu >= 1 keeps the integrand free of an endpoint
    singularity at w = 0.
    """
    mu = as_rat(mu)
    sigma = as_rat(sigma)
    if not sigma > mu > 0:
        raise ValueError("integral representation requires sigma > mu > 0")
    if mu < 1:
        raise ValueError("mu < 1 puts an integrable singularity at w=0; unsupported")
    mu_f = float(mu)
    sig_f = float(sigma)
    prefactor = math.gamma(sig_f) / (math.gamma(mu_f) * math.gamma(sig_f - mu_f))

    def integrand(w: float) -> float:
        return math.exp(u * w) * w ** (mu_f - 1.0) * (1.0 - w) ** (sig_f - mu_f - 1.0)

    value, _err = quad(integrand, 0.0, 1.0, epsabs=1e-12, epsrel=1e-12, limit=200)
    return prefactor * value


@lru_cache(maxsize=None)
def exp_moment_series(k: int, order: int, zscale: Poly, power: int = 1) -> ExpSeries:
    """Series whose t^v/v! coefficient is zscale^v / (v+k)^power.

    For power=1 this is int_0^1 e^{zscale*t*u} u^{k-1} du expanded
    termwise; power=2 is the once-more (v+k)-damped variant.  Needs k >= 1
    (k = 0 makes the v = 0 term diverge)."""
    if k < 1:
        raise ValueError("moment series needs k >= 1")
    coeffs = []
    zpow = ONE_POLY
    for v in range(order + 1):
        if v:
            zpow = zpow * zscale
        coeffs.append(zpow * (Rat(1, v + k) ** power))
    return ExpSeries(coeffs)


@lru_cache(maxsize=None)
def miller_paris_rhs(
    a: int, c: int, variant: str = "general", order: int = 12, zscale: Poly = ONE_POLY
) -> ExpSeries:
    """Stirling-number closed form matching the series with upper
    parameters (c+1,...,c+1) and lower (c,...,c), a copies each.

    variant="general":
        c^{-a} e^z sum_{v<=a} C(a,v) c^{a-v} sum_{d<=v} S2(v,d) z^d
    variant="c_equals_1" (requires c=1):
        e^z sum_{v<=a} S2(a+1, v+1) z^v
    with z = zscale*t.
    """
    if c < 1:
        raise ValueError("lower parameter c must be >= 1")
    if a < 0:
        raise ValueError("repetition count a must be >= 0")
    expz = series_exp_linear(zscale, order)

    def z_power_term(d: int, scalar: Rat) -> ExpSeries:
        # scalar * z^d * e^z as a series in t, z = zscale*t
        return series_shift_tk(expz, d).scale(Poly.const(scalar) * zscale**d)

    if variant == "general":
        total = ExpSeries.zero(order)
        for v in range(a + 1):
            outer = Rat(binomial(a, v) * c ** (a - v), c**a)
            for d in range(v + 1):
                s2 = stirling2(v, d)
                if s2:
                    total = total + z_power_term(d, outer * s2)
        return total
    if variant == "c_equals_1":
        if c != 1:
            raise ValueError("variant c_equals_1 requires c = 1")
        total = ExpSeries.zero(order)
        for v in range(a + 1):
            s2 = stirling2(a + 1, v + 1)
            if s2:
                total = total + z_power_term(v, Rat(s2))
        return total
    raise ValueError(f"unknown variant {variant!r}")


def miller_paris_lhs(a: int, c: int, order: int = 12, zscale: Poly = ONE_POLY) -> ExpSeries:
    """The hypergeometric side: series with a copies of c+1 over a copies
    of c, truncated at the given order."""
    spec = HyperSpec((c + 1,) * a, (c,) * a)
    return pfq_series(spec, zscale, order)
