"""
Nonsymmetric Jack polynomials over ℚ(κ).
"""

from .engine import JackEngine, knop_sahi_report
from .kappa import KAPPA_FIELD, KappaPoly, KappaRational, kappa, linear_factors, split
from .multipoly import MultiPoly
from .operators import (
    commute_check,
    divided_difference,
    divided_difference_by_division,
    monomial_image,
    u_apply,
    xi_eigenvalue,
)
from .report import JackReport, knop_sahi_ok, trailing_coeff_ok, xi_specialization_match
from .zeta import monomial_count, processing_order, zeta
