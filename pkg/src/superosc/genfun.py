"""The two generating-function families built from repeated-parameter
hypergeometric blocks, their closed forms, and the identity verifier.

Family 1 uses blocks with upper parameters (k,...,k) over (k+1,...,k+1);
family 2 swaps them.  Both share the prefactor (1/k!)((1-x)t/2)^k and the
argument ((1+x)/2)t, and are weighted sums over alpha_0..alpha_m with
scalar weights C(j,l)(-2k/n)^(j-l).

Every closed form is checked against the definitional series, which is
the ground truth here.  Several closed forms circulate in two variants:
the form as printed in standard displays ("printed") and the form the
definitional series actually forces ("corrected"); the verifier reports
both rather than silently repairing anything.  The corrections are:

* family-1, m=1: the moment-integral term needs an extra factor k
  (prefactor k*alpha_1/k!, not alpha_1/k!).
* family-1, m=2: the leading scalar is (n^2 a0 - 2kn a1 + 4k^2 a2)/n^2
  (printed: 4nk^2 a2), the tail prefactors are ((1-x)t/2)^k (printed:
  power 1), and the two moment sums carry factors k and k^2.
* family-2, m=1 and m=2: tail prefactors ((1-x)t/2)^k (printed: power 1),
  and for m=2 the same leading-scalar repair.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from . import classical
from .coeffs import HALF_1_PLUS_X, half_power, c_coeff, c_derivative, c_recurrence_rhs, g_series
from .combinat import binomial, factorial, stirling2
from .exact import (
    DEFAULT_ORDER,
    ExpSeries,
    Poly,
    Rat,
    as_rat,
    series_exp_linear,
    series_shift_tk,
)
from .hyper import HyperSpec, miller_paris_lhs, miller_paris_rhs, exp_moment_series, pfq_series
from .report import (
    Divergence,
    IdentityReport,
    MISMATCH,
    PRINTED_MISMATCH,
    REPORT_SCHEMA,
    VERIFIED,
)

__all__ = [
    "GenFunParams",
    "IdentityReport",
    "REPORT_SCHEMA",
    "IDENTITY_IDS",
    "b2_explicit",
    "b2_k1_explicit",
    "b_extract",
    "run_suite",
    "s1_m1_closed",
    "s1_m2_closed",
    "s2_m1_closed",
    "s2_m2_closed",
    "s1_series",
    "s2_series",
    "s2_stirling_closed",
    "verify_identity",
]


@dataclass(frozen=True)
class GenFunParams:
    """Parameter bundle (m, k, n, alphas) shared by both families."""

    m: int
    k: int
    n: int
    alphas: tuple

    def __init__(self, m: int, k: int, n: int, alphas):
        alphas = tuple(as_rat(a) for a in alphas)
        if m < 0 or k < 0:
            raise ValueError("m and k must be >= 0")
        if n < 1:
            raise ValueError("n must be >= 1")
        if len(alphas) != m + 1:
            raise ValueError(f"need {m + 1} alpha values, got {len(alphas)}")
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "alphas", alphas)

    def weights(self) -> list:
        """w_l = sum_{j>=l} alpha_j C(j,l) (-2k/n)^(j-l) for l = 0..m."""
        base = Rat(-2 * self.k, self.n)
        out = []
        for l in range(self.m + 1):
            acc = Rat(0)
            for j in range(l, self.m + 1):
                acc += self.alphas[j] * binomial(j, l) * base ** (j - l)
            out.append(acc)
        return out

    def json_dict(self) -> dict:
        return {
            "m": self.m,
            "k": self.k,
            "n": self.n,
            "alphas": [str(a) for a in self.alphas],
        }


def _apply_prefactor(series: ExpSeries, k: int, shift: int = None) -> ExpSeries:
    """Multiply by (1/k!)((1-x)t/2)^shift (shift defaults to k)."""
    s = k if shift is None else shift
    return series_shift_tk(series, s).scale(half_power(False, s) / Rat(factorial(k)))


@lru_cache(maxsize=None)
def _hyper_block(l: int, k: int, family: int, order: int) -> ExpSeries:
    if family == 1:
        spec = HyperSpec((k,) * l, (k + 1,) * l)
    else:
        spec = HyperSpec((k + 1,) * l, (k,) * l)
    return pfq_series(spec, HALF_1_PLUS_X, order)


@lru_cache(maxsize=None)
def _prefixed_block(l: int, k: int, family: int, order: int) -> ExpSeries:
    return _apply_prefactor(_hyper_block(l, k, family, order), k)


def _family_series(p: GenFunParams, family: int, order: int) -> ExpSeries:
    if p.k > order:
        raise ValueError(f"k={p.k} exceeds truncation order {order}")
    if family == 2 and p.k == 0 and p.m >= 1:
        raise ValueError("family-2 blocks have lower parameter k; k=0 is excluded")
    total = ExpSeries.zero(order)
    for l, w in enumerate(p.weights()):
        if w == 0:
            continue
        total = total + _prefixed_block(l, p.k, family, order).scale(w)
    return total


def s1_series(p: GenFunParams, order: int = DEFAULT_ORDER) -> ExpSeries:
    """Definitional series of family 1 (upper k, lower k+1)."""
    return _family_series(p, 1, order)


def s2_series(p: GenFunParams, order: int = DEFAULT_ORDER) -> ExpSeries:
    """Definitional series of family 2 (upper k+1, lower k); k >= 1 when
    m >= 1."""
    return _family_series(p, 2, order)


def b_extract(series: ExpSeries, v: int) -> Poly:
    """Coefficient of t^v/v!."""
    return series.coefficient(v)


def _require(p: GenFunParams, m: int):
    if p.m != m:
        raise ValueError(f"this closed form is the m={m} case, got m={p.m}")
    if p.k < 1:
        raise ValueError("closed form needs k >= 1 (moment integral diverges at k=0)")


def s1_m1_closed(p: GenFunParams, order: int = DEFAULT_ORDER):
    """Printed and corrected single-integral closed forms of family 1 at
    m=1; the corrected one carries the factor k restored on the moment
    term."""
    _require(p, 1)
    a0, a1 = p.alphas
    k, n = p.k, p.n
    lead = a0 + a1 * Rat(-2 * k, n)
    g = g_series(k, order).scale(lead)
    moment = _apply_prefactor(exp_moment_series(k, order, HALF_1_PLUS_X, 1), k)
    printed = g + moment.scale(a1)
    corrected = g + moment.scale(a1 * k)
    return printed, corrected


def s1_m2_closed(p: GenFunParams, order: int = DEFAULT_ORDER):
    """Printed and corrected closed forms of family 1 at m=2 (two moment
    tails).  See the module docstring for the three printed defects."""
    _require(p, 2)
    a0, a1, a2 = p.alphas
    k, n = p.k, p.n
    lead_corr = a0 + a1 * Rat(-2 * k, n) + a2 * Rat(4 * k * k, n * n)
    lead_printed = a0 + a1 * Rat(-2 * k, n) + a2 * Rat(4 * k * k, n)
    w1 = a1 + a2 * Rat(-4 * k, n)
    j1 = exp_moment_series(k, order, HALF_1_PLUS_X, 1)
    j2 = exp_moment_series(k, order, HALF_1_PLUS_X, 2)
    printed = (
        g_series(k, order).scale(lead_printed)
        + _apply_prefactor(j1, k, shift=1).scale(w1)
        + _apply_prefactor(j2, k, shift=1).scale(a2)
    )
    corrected = (
        g_series(k, order).scale(lead_corr)
        + _apply_prefactor(j1, k).scale(w1 * k)
        + _apply_prefactor(j2, k).scale(a2 * k * k)
    )
    return printed, corrected


def s2_m1_closed(p: GenFunParams, order: int = DEFAULT_ORDER):
    """Printed and corrected closed forms of family 2 at m=1; printed has
    the tail prefactor at power 1 instead of k."""
    _require(p, 1)
    a0, a1 = p.alphas
    k, n = p.k, p.n
    g = g_series(k, order).scale(a0 + a1 * Rat(-2 * k, n))
    block = _hyper_block(1, k, 2, order)
    printed = g + _apply_prefactor(block, k, shift=1).scale(a1)
    corrected = g + _apply_prefactor(block, k).scale(a1)
    return printed, corrected


def s2_m2_closed(p: GenFunParams, order: int = DEFAULT_ORDER):
    """Printed and corrected closed forms of family 2 at m=2."""
    _require(p, 2)
    a0, a1, a2 = p.alphas
    k, n = p.k, p.n
    lead_corr = a0 + a1 * Rat(-2 * k, n) + a2 * Rat(4 * k * k, n * n)
    lead_printed = a0 + a1 * Rat(-2 * k, n) + a2 * Rat(4 * k * k, n)
    w1 = a1 + a2 * Rat(-4 * k, n)
    b1 = _hyper_block(1, k, 2, order)
    b2 = _hyper_block(2, k, 2, order)
    printed = (
        g_series(k, order).scale(lead_printed)
        + _apply_prefactor(b1, k, shift=1).scale(w1)
        + _apply_prefactor(b2, k, shift=1).scale(a2)
    )
    corrected = (
        g_series(k, order).scale(lead_corr)
        + _apply_prefactor(b1, k).scale(w1)
        + _apply_prefactor(b2, k).scale(a2)
    )
    return printed, corrected


@lru_cache(maxsize=None)
def _stirling_block(l: int, k: int, order: int) -> ExpSeries:
    """Prefixed Stirling expansion of the family-2 block:
    (1/k!)((1-x)t/2)^k k^{-l} e^z sum_c C(l,c) k^{l-c} sum_d S2(c,d) z^d
    with z = ((1+x)/2) t."""
    if l >= 1 and k == 0:
        raise ValueError("Stirling expansion needs k >= 1 for l >= 1")
    expz = series_exp_linear(HALF_1_PLUS_X, order)
    inner = ExpSeries.zero(order)
    for c in range(l + 1):
        outer = Rat(binomial(l, c) * k ** (l - c), k**l if l else 1)
        for d in range(c + 1):
            s2 = stirling2(c, d)
            if s2:
                inner = inner + series_shift_tk(expz, d).scale(
                    half_power(True, d) * (outer * s2)
                )
    return _apply_prefactor(inner, k)


def s2_stirling_closed(p: GenFunParams, order: int = DEFAULT_ORDER) -> ExpSeries:
    """Family-2 series rebuilt from Stirling partition numbers instead of
    Pochhammer ratios; must agree with s2_series exactly."""
    if p.k == 0 and p.m >= 1:
        raise ValueError("needs k >= 1 when m >= 1")
    if p.k > order:
        raise ValueError(f"k={p.k} exceeds truncation order {order}")
    total = ExpSeries.zero(order)
    for l, w in enumerate(p.weights()):
        if w == 0:
            continue
        total = total + _stirling_block(l, p.k, order).scale(w)
    return total


@lru_cache(maxsize=None)
def _b2_block(k: int, v: int, l: int) -> Poly:
    """R_{k,v,l} = sum_{c<=l} C(l,c) sum_{d<=c} C(v,d) d! S2(c,d) k^{-c}
    ((1+x)/2)^d c_k(v-d, x)."""
    acc = Poly()
    for c in range(l + 1):
        for d in range(c + 1):
            s2 = stirling2(c, d)
            cv = binomial(v, d)
            if not s2 or not cv:
                continue
            scalar = Rat(binomial(l, c) * cv * factorial(d) * s2, k**c if c else 1)
            acc = acc + half_power(True, d) * c_coeff(k, v - d) * scalar
    return acc


def b2_explicit(v: int, p: GenFunParams) -> Poly:
    """Coefficient of t^v/v! in the family-2 series, written directly in
    terms of Stirling numbers and c_k; k >= 1."""
    if p.k < 1:
        raise ValueError("explicit coefficient formula needs k >= 1")
    if v < 0:
        raise ValueError("v must be >= 0")
    acc = Poly()
    for l, w in enumerate(p.weights()):
        if w == 0:
            continue
        acc = acc + _b2_block(p.k, v, l) * w
    return acc


def b2_k1_explicit(v: int, p: GenFunParams) -> Poly:
    """The k = 1 coefficient formula, fully explicit:

        (1-x) sum_j alpha_j sum_l C(j,l)(-2/n)^(j-l)
              sum_c C(v,c+1)(c+1)! S2(l+1,c+1) (1+x)^(v-1) / 2^v.
    """
    if p.k != 1:
        raise ValueError("this formula is the k = 1 specialization")
    if v < 0:
        raise ValueError("v must be >= 0")
    if v == 0:
        return Poly()
    one_minus_x = Poly((Rat(1), Rat(-1)))
    one_plus_x = Poly((Rat(1), Rat(1)))
    scalar = Rat(0)
    for l, w in enumerate(p.weights()):
        inner = 0
        for c in range(l + 1):
            inner += binomial(v, c + 1) * factorial(c + 1) * stirling2(l + 1, c + 1)
        scalar += w * inner
    return one_minus_x * one_plus_x ** (v - 1) * (scalar / Rat(2**v))


# ---------------------------------------------------------------------------
# identity verifier


def _series_report(identity_id, params, lhs, rhs, order) -> IdentityReport:
    v = lhs.first_difference(rhs)
    if v is None:
        return IdentityReport(identity_id, params, order, VERIFIED)
    return IdentityReport(
        identity_id,
        params,
        order,
        MISMATCH,
        Divergence(v=v, lhs=str(lhs.coefficient(v)), rhs=str(rhs.coefficient(v))),
    )


def _poly_seq_report(identity_id, params, pairs, order) -> IdentityReport:
    for v, (lhs, rhs) in enumerate(pairs):
        if lhs != rhs:
            return IdentityReport(
                identity_id,
                params,
                order,
                MISMATCH,
                Divergence(v=v, lhs=str(lhs), rhs=str(rhs)),
            )
    return IdentityReport(identity_id, params, order, VERIFIED)


def _dual_report(identity_id, params, printed, corrected, reference, order, variant) -> IdentityReport:
    corr_v = corrected.first_difference(reference)
    if variant == "corrected":
        return _series_report(identity_id, params, corrected, reference, order)
    if variant == "printed":
        printed_v = printed.first_difference(reference)
        if printed_v is None:
            return _series_report(identity_id, params, corrected, reference, order)
        if corr_v is None:
            return IdentityReport(
                identity_id,
                params,
                order,
                PRINTED_MISMATCH,
                Divergence(
                    v=printed_v,
                    lhs=str(printed.coefficient(printed_v)),
                    rhs=str(reference.coefficient(printed_v)),
                ),
            )
        return _series_report(identity_id, params, corrected, reference, order)
    raise ValueError(f"unknown variant {variant!r}")


def _params_from(params: dict) -> GenFunParams:
    return GenFunParams(
        m=params["m"], k=params["k"], n=params["n"], alphas=params["alphas"]
    )


def _check_g_closed_form(params, order):
    k = params["k"]
    lhs = g_series(k, order)
    rhs = ExpSeries([c_coeff(k, v) for v in range(order + 1)])
    return _series_report("g-closed-form", {"k": k}, lhs, rhs, order)


def _check_recurrence(params, order):
    k, n = params["k"], params["n"]
    return _poly_seq_report(
        "recurrence",
        {"k": k, "n": n},
        [(c_recurrence_rhs(k, n), c_coeff(k, n + 1))],
        order,
    )


def _check_derivative(params, order):
    k, n = params["k"], params["n"]
    rhs = (c_coeff(k, n - 1) - c_coeff(k - 1, n - 1)) * Rat(n, 2)
    return _poly_seq_report(
        "derivative", {"k": k, "n": n}, [(c_derivative(k, n), rhs)], order
    )


def _check_dual_closed(identity_id, params, order):
    p = _params_from(params)
    variant = params.get("variant", "printed")
    builder = {
        "s1-m1": (s1_m1_closed, s1_series),
        "s1-m2": (s1_m2_closed, s1_series),
        "s2-m1": (s2_m1_closed, s2_series),
        "s2-m2": (s2_m2_closed, s2_series),
    }[identity_id]
    printed, corrected = builder[0](p, order)
    reference = builder[1](p, order)
    out_params = p.json_dict()
    out_params["variant"] = variant
    return _dual_report(identity_id, out_params, printed, corrected, reference, order, variant)


def _check_s2_stirling(params, order):
    p = _params_from(params)
    return _series_report(
        "s2-stirling", p.json_dict(), s2_stirling_closed(p, order), s2_series(p, order), order
    )


def _check_ay2(params, order):
    p = _params_from(params)
    series = s2_series(p, order)
    pairs = [(b2_explicit(v, p), b_extract(series, v)) for v in range(order + 1)]
    return _poly_seq_report("ay-2", p.json_dict(), pairs, order)


def _check_b2_k1(params, order):
    p = _params_from(params)
    if p.k != 1:
        raise ValueError("b2-k1 is the k = 1 formula")
    series = s2_series(p, order)
    pairs = [(b2_k1_explicit(v, p), b_extract(series, v)) for v in range(order + 1)]
    return _poly_seq_report("b2-k1", p.json_dict(), pairs, order)


def _check_miller_paris(params, order):
    a, c = params["a"], params["c"]
    lhs = miller_paris_lhs(a, c, order)
    rhs = miller_paris_rhs(a, c, "general", order)
    return _series_report("miller-paris", {"a": a, "c": c}, lhs, rhs, order)


def _check_16a(params, order):
    a = params["a"]
    lhs = miller_paris_lhs(a, 1, order)
    rhs = miller_paris_rhs(a, 1, "c_equals_1", order)
    return _series_report("16a", {"a": a}, lhs, rhs, order)


def _check_bernstein_map(params, order):
    k, v = params["k"], params["v"]
    lhs = c_coeff(k, v).compose(classical.ONE_MINUS_2Y)
    rhs = classical.bernstein(k, v)
    return _poly_seq_report("bernstein-map", {"k": k, "v": v}, [(lhs, rhs)], order)


def _check_hermite_conv(params, order):
    return classical.hermite_conv_theorem(params["k"], params["n"], order)


def _check_heat_equation(params, order):
    n = params["n"]
    residual = classical.heat_residual(n)
    if residual.is_zero:
        return IdentityReport("heat-equation", {"n": n}, order, VERIFIED)
    return IdentityReport(
        "heat-equation",
        {"n": n},
        order,
        MISMATCH,
        Divergence(v=0, lhs=residual.to_string(), rhs="0"),
    )


def _check_hermite_kummer(params, order):
    n = params["n"]
    return _poly_seq_report(
        "hermite-kummer",
        {"n": n},
        [(classical.hermite(n), classical.hermite_from_kummer(n))],
        order,
    )


_CHECKS = {
    "recurrence": _check_recurrence,
    "derivative": _check_derivative,
    "g-closed-form": _check_g_closed_form,
    "s1-m1": lambda p, o: _check_dual_closed("s1-m1", p, o),
    "s1-m2": lambda p, o: _check_dual_closed("s1-m2", p, o),
    "s2-m1": lambda p, o: _check_dual_closed("s2-m1", p, o),
    "s2-m2": lambda p, o: _check_dual_closed("s2-m2", p, o),
    "s2-stirling": _check_s2_stirling,
    "ay-2": _check_ay2,
    "b2-k1": _check_b2_k1,
    "bernstein-map": _check_bernstein_map,
    "miller-paris": _check_miller_paris,
    "16a": _check_16a,
    "hermite-conv": _check_hermite_conv,
    "heat-equation": _check_heat_equation,
    "hermite-kummer": _check_hermite_kummer,
}

IDENTITY_IDS = tuple(_CHECKS)


def verify_identity(identity_id: str, params: dict, order: int = DEFAULT_ORDER) -> IdentityReport:
    """Compare both sides of one catalogued identity at one parameter
    point, coefficientwise and exactly; never raises on mismatch."""
    try:
        check = _CHECKS[identity_id]
    except KeyError:
        raise ValueError(
            f"unknown identity {identity_id!r}; known: {', '.join(IDENTITY_IDS)}"
        ) from None
    return check(params, order)


# ---------------------------------------------------------------------------
# parameter grids

DEFAULT_ALPHA_SET = (Rat(-1), Rat(1, 2), Rat(1))


def _alpha_tuples(m: int, alpha_set):
    return itertools.product(alpha_set, repeat=m + 1)


def suite_points(name: str, max_n: int = 10, max_k: int = 6, max_m: int = 3, alpha_set=DEFAULT_ALPHA_SET):
    """Default parameter grid for one identity, as (identity_id, params)
    pairs."""
    if name == "g-closed-form":
        for k in range(max_k + 1):
            yield name, {"k": k}
    elif name == "recurrence":
        for n in range(max_n + 1):
            for k in range(n + 2):
                yield name, {"k": k, "n": n}
    elif name == "derivative":
        for n in range(1, max_n + 1):
            for k in range(n + 1):
                yield name, {"k": k, "n": n}
    elif name in ("s1-m1", "s2-m1"):
        for k in range(1, max_k + 1):
            for n in range(1, max_n + 1):
                for alphas in _alpha_tuples(1, alpha_set):
                    yield name, {"m": 1, "k": k, "n": n, "alphas": alphas}
    elif name in ("s1-m2", "s2-m2"):
        for k in range(1, max_k + 1):
            for n in range(1, max_n + 1):
                for alphas in _alpha_tuples(2, alpha_set):
                    yield name, {"m": 2, "k": k, "n": n, "alphas": alphas}
    elif name in ("s2-stirling", "ay-2"):
        for m in range(max_m + 1):
            for k in range(1, max_k + 1):
                for n in range(1, max_n + 1):
                    for alphas in _alpha_tuples(m, alpha_set):
                        yield name, {"m": m, "k": k, "n": n, "alphas": alphas}
    elif name == "b2-k1":
        for m in range(max_m + 1):
            for n in range(1, max_n + 1):
                for alphas in _alpha_tuples(m, alpha_set):
                    yield name, {"m": m, "k": 1, "n": n, "alphas": alphas}
    elif name == "miller-paris":
        for a in range(4):
            for c in range(1, 5):
                yield name, {"a": a, "c": c}
    elif name == "16a":
        for a in range(4):
            yield name, {"a": a}
    elif name == "bernstein-map":
        for v in range(9):
            for k in range(v + 1):
                yield name, {"k": k, "v": v}
    elif name == "hermite-conv":
        for n in range(max_n + 1):
            for k in range(n + 1):
                yield name, {"k": k, "n": n}
    elif name == "heat-equation":
        for n in range(9):
            yield name, {"n": n}
    elif name == "hermite-kummer":
        for n in range(12):
            yield name, {"n": n}
    else:
        raise ValueError(f"unknown suite {name!r}")


def run_suite(
    name: str,
    order: int = DEFAULT_ORDER,
    max_n: int = 10,
    max_k: int = 6,
    max_m: int = 3,
    alpha_set=DEFAULT_ALPHA_SET,
):
    """Run one suite (or "all") over its default grid; returns the report
    list in deterministic order."""
    names = IDENTITY_IDS if name == "all" else (name,)
    reports = []
    for suite in names:
        for identity_id, params in suite_points(suite, max_n, max_k, max_m, alpha_set):
            reports.append(verify_identity(identity_id, params, order))
    return reports
