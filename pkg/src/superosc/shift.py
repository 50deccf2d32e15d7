"""Generalized superoscillating sums: derivative sequences, power-law
frequency maps, and polynomial (g, h) supershift sequences, with sup-error
profiling against their limits.

All of these are Fourier-type sums sum_j c_j(n,a) W(k_j) e^{i Phi(k_j) x}
with k_j = 1 - 2j/n, so they inherit the max(1,|a|)^n cancellation of the
plain sequence and are summed at scaled precision (see coeffs)."""

from __future__ import annotations

import math
from dataclasses import dataclass

import mpmath as mp

from .coeffs import GridResult, fourier_sum_precision, sample_grid


@dataclass(frozen=True)
class EntireFnSpec:
    """Real-coefficient polynomial standing in for an entire function;
    evaluation is Horner at real or complex arguments."""

    coeffs: tuple

    def __init__(self, coeffs):
        cs = tuple(float(c) for c in coeffs)
        if not cs:
            cs = (0.0,)
        object.__setattr__(self, "coeffs", cs)

    @classmethod
    def from_string(cls, text: str) -> "EntireFnSpec":
        """Parse "c0,c1,..." ascending-power float coefficients."""
        return cls(float(part) for part in text.split(","))

    def __call__(self, z):
        acc = 0.0 if not isinstance(z, mp.mpc) else mp.mpc(0)
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc


IDENTITY_FN = EntireFnSpec((0.0, 1.0))
ONE_FN = EntireFnSpec((1.0,))


def _weighted_sum(n: int, a: float, x: float, weight, phase) -> complex:
    """sum_j c_j(n,a) weight(k_j) e^{i phase(k_j) x} at scaled precision;
    weight maps an mpf to mpf/mpc, phase maps an mpf to mpf."""
    if n < 1:
        raise ValueError("n must be >= 1")
    with mp.workprec(fourier_sum_precision(n, a)):
        u = (1 + mp.mpf(a)) / 2
        w = (1 - mp.mpf(a)) / 2
        total = mp.mpc(0)
        for j in range(n + 1):
            cj = mp.binomial(n, j) * u ** (n - j) * w**j
            if cj == 0:
                continue
            kj = mp.mpf(n - 2 * j) / n
            phi = phase(kj) * x
            total += cj * weight(kj) * mp.mpc(mp.cos(phi), mp.sin(phi))
        return complex(total)


def dpf_eval(n: int, a: float, x: float, p: int) -> complex:
    """p-th x-derivative of the superoscillating sum:
    sum_j c_j(n,a) (i k_j)^p e^{i k_j x}; p = 0 recovers the sequence."""
    if p < 0:
        raise ValueError("derivative order must be >= 0")
    return _weighted_sum(n, a, x, lambda kj: (1j * kj) ** p, lambda kj: kj)


def z_eval(n: int, a: float, x: float, m: int, p: int) -> complex:
    """Power-law variant sum_j c_j(n,a) (i k_j)^(m p) e^{i k_j^m x}."""
    if m < 1:
        raise ValueError("frequency power m must be >= 1")
    if p < 0:
        raise ValueError("derivative order must be >= 0")
    return _weighted_sum(n, a, x, lambda kj: (1j * kj) ** (m * p), lambda kj: kj**m)


def y_eval(n: int, a: float, x: float, g: EntireFnSpec, h: EntireFnSpec) -> complex:
    """Supershift sum sum_j c_j(n,a) h(k_j) e^{i g(k_j) x}; tends to
    h(a) e^{i g(a) x} on compact sets.

    The weight is h evaluated at the band-limited frequency k_j itself:
    that is the form the infinite-order operator argument produces, and
    the only one whose limit is h(a) e^{i g(a) x} (a weight h(i k_j)
    would converge to h(ia) e^{i g(a) x} instead)."""
    return _weighted_sum(n, a, x, lambda kj: h(kj), lambda kj: g(kj))


def y_weights(n: int, a: float, h: EntireFnSpec) -> list:
    """The generalized Fourier weights E_j(n,a) = c_j(n,a) h(k_j),
    exposed for inspection (their frequencies k_j stay in [-1, 1])."""
    if n < 1:
        raise ValueError("n must be >= 1")
    with mp.workprec(fourier_sum_precision(n, a)):
        u = (1 + mp.mpf(a)) / 2
        w = (1 - mp.mpf(a)) / 2
        out = []
        for j in range(n + 1):
            cj = mp.binomial(n, j) * u ** (n - j) * w**j
            kj = mp.mpf(n - 2 * j) / n
            out.append(complex(cj * h(kj)))
        return out


def _limit_fn(kind: str, a: float, p: int = 0, m: int = 1, g: EntireFnSpec = None, h: EntireFnSpec = None):
    if kind == "dpf":
        amp = (1j * a) ** p
        freq = a
    elif kind == "z":
        amp = (1j * a) ** (m * p)
        freq = a**m
    elif kind == "y":
        amp = complex(h(a))
        freq = g(a)
    else:
        raise ValueError(f"unknown kind {kind!r}")
    return lambda x: amp * complex(math.cos(freq * x), math.sin(freq * x))


def _eval_fn(kind: str, a: float, p: int = 0, m: int = 1, g: EntireFnSpec = None, h: EntireFnSpec = None):
    if kind == "dpf":
        return lambda n, x: dpf_eval(n, a, x, p)
    if kind == "z":
        return lambda n, x: z_eval(n, a, x, m, p)
    if kind == "y":
        return lambda n, x: y_eval(n, a, x, g, h)
    raise ValueError(f"unknown kind {kind!r}")


def limit_profile(
    kind: str,
    a: float,
    n_list,
    x_lo: float,
    x_hi: float,
    samples: int,
    p: int = 0,
    m: int = 1,
    g: EntireFnSpec = IDENTITY_FN,
    h: EntireFnSpec = ONE_FN,
) -> GridResult:
    """Sup error of the chosen sum against its stated limit, per n."""
    if not n_list:
        raise ValueError("n_list must be nonempty")
    xs = sample_grid(x_lo, x_hi, samples)
    evaluate = _eval_fn(kind, a, p, m, g, h)
    limit = _limit_fn(kind, a, p, m, g, h)
    values = {}
    sup_error = {}
    for n in n_list:
        vals = tuple(evaluate(n, x) for x in xs)
        sup_error[n] = max(abs(v - limit(x)) for v, x in zip(vals, xs))
        values[n] = vals
    return GridResult(xs=xs, values=values, sup_error=sup_error)
