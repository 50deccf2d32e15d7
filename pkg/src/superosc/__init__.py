"""Exact generating-function toolkit for superoscillation coefficients.

Everything symbolic is computed over arbitrary-precision rationals and
compared coefficientwise; everything numeric carries an explicit
tolerance or a precision scaled to the conditioning of the sum.
"""

from .exact import DEFAULT_ORDER, ExpSeries, Poly, Rat, as_rat, series_exp_linear, series_mul, series_shift_tk
from .combinat import StirlingTable, binomial, factorial, pochhammer, stirling2, stirling2_alt_sum
from .hyper import (
    HyperSpec,
    exp_moment_series,
    kummer_integral,
    miller_paris_lhs,
    miller_paris_rhs,
    pfq_eval_float,
    pfq_series,
)
from .coeffs import (
    GridResult,
    c_coeff,
    c_derivative,
    c_recurrence_rhs,
    convergence_profile,
    f_eval,
    f_eval_fourier,
    g_series,
)
from .genfun import (
    GenFunParams,
    IDENTITY_IDS,
    b2_explicit,
    b2_k1_explicit,
    b_extract,
    run_suite,
    s1_m1_closed,
    s1_m2_closed,
    s1_series,
    s2_m1_closed,
    s2_m2_closed,
    s2_series,
    s2_stirling_closed,
    verify_identity,
)
from .classical import (
    BiPoly,
    bernstein,
    gould_hopper,
    heat_residual,
    hermite,
    hermite_conv_theorem,
    hermite_from_kummer,
    hermite_generating_series,
    hermite_via_gould_hopper,
)
from .report import IdentityReport, REPORT_SCHEMA
from .shift import EntireFnSpec, dpf_eval, limit_profile, y_eval, y_weights, z_eval

__version__ = "0.1.0"
