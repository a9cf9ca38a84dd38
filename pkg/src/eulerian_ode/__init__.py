"""Exact computation of Eulerian polynomials, the coefficient triangle of
the nonlinear ODE satisfied by 1 / (exp(x (t - 1)) - t), and checks of the
identities that connect them."""

from .eulerian import (
    eq4_verify,
    eulerian_number_oracle,
    eulerian_poly,
    eulerian_table,
    higher_eulerian_poly,
)
from .identities import eq37_consistency, sweep, theorem2_verify, theorem3_verify
from .kernel import IntPoly, IntSeries
from .report import VerificationReport
from .triangle import (
    coeff_closed_form,
    coeff_single_sum,
    derivative_bootstrap,
    routes_cross_check,
    triangle_recurrence,
)

__version__ = "0.1.0"
