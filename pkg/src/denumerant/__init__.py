"""Sylvester denumerants d(t; a) as exact quasi-polynomials.

d(t; a) counts nonnegative integer solutions of a_1 x_1 + ... + a_N x_N = t.
It is computed as a sum of Sylvester waves W_f(t; a), one per divisor f
of some a_i, either exactly over the cyclotomic rings Q[x]/<Phi_f>
(:func:`all_waves`) or with floating roots of unity (:func:`float_all_waves`).
"""

from .cyclotomic import (
    CycCtx,
    CycElem,
    cyclotomic_poly,
    divisor_union,
    divisors,
    get_ctx,
    inverse_one_minus,
    mod_xf_reduce,
    standard_form,
)
from .floatwaves import FloatWave, float_all_waves, float_denumerant, float_wave_f
from .gtodd import GtdSpec, gtodd_sequence
from .oracle import DpTable, dp_count, dp_stream, primroot_sum_check
from .poly import Poly, poly_derivative, poly_divrem, poly_eval, poly_mul
from .quasipoly import QuasiPolynomial, qp_add, qp_combine, qp_eval
from .series import (
    TruncSeries,
    h_series,
    h_y_series,
    ts_exp,
    ts_log,
    ts_mul,
    ts_scale_arg,
    ts_sum_scaled,
)
from .waves import (
    SequenceError,
    all_waves,
    combined,
    denumerant,
    validate_sequence,
    wave_f,
    wave_f_trace,
    wave_one,
)

__version__ = "0.1.0"
