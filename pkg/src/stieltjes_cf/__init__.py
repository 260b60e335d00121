"""Exact continued-fraction tools for Stieltjes moment sequences with
support in [xi, inf) or [0, xi]."""

from .series import (
    TruncatedSeries,
    ZeroConstantTerm,
    rat,
    rat_str,
    series_add,
    series_mul,
    series_reciprocal,
    series_scale,
    series_sub,
)
from .cfrac import (
    JCoefficients,
    MomentSequence,
    NotSFracRepresentable,
    SCoefficients,
    contract,
    j_expand,
    s_expand,
    s_extract,
)
from .transforms import binomial_transform, j_shift
from .certify import (
    CertVerdict,
    GSequence,
    GZeroInterval,
    InfeasibleBase,
    NegativeG,
    NonStandardInput,
    RouteMismatch,
    Status,
    alpha_from_g,
    certify_wall,
    certify_xi_stieltjes,
    dual_route_check,
    g0_max,
    g_from_alpha,
    rebase_g0,
)
from .oracle import (
    DiscreteMeasure,
    HankelReport,
    hankel_report,
    moments,
    random_measure,
    translate,
)

__version__ = "0.1.0"
