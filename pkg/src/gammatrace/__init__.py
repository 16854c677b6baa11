"""Exact p-adic hypergeometric functions and traces of Frobenius of elliptic curves."""
from .elliptic import (
    AdmissibleTransform,
    WeierstrassCurve,
    a3_special,
    ap_enumerate,
    ap_legendre_sum,
    apply_transform,
    invariants,
    j_invariant,
    to_short_form,
)
from .errors import GammaTraceError
from .gamma import gamma_sweep, gamma_value
from .gauss import PiRingElement, ap_via_gauss, gauss_sum_gk, point_count_via_theta, theta_reconstruct
from .hypergeom_f import CharTuple, f_eval, lennon_trace
from .hypergeom_g import TRACE_PARAMS, GParams, delta_bound, g_eval
from .modforms import QSeries, build_f, euler_product
from .padic import PadicNumber, centered_lift, reduce_rational, teichmuller
from .verify import trace_via_c6, trace_via_g, verify_range

__version__ = "0.1.0"
