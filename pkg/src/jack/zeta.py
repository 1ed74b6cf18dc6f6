"""
Nonsymmetric Jack polynomials by back-substitution.

ζ_α = x^α + Σ_{β ⊲ α} A_β x^β.  Candidates β are processed in descending
order of (β⁺, β) lexicographically, a linear extension of ⊳.  For each β the
smallest i with α_i ≠ β_i separates the eigenvalues, and comparing the
coefficients of x^β in U_i ζ_α = ξ_i(α) ζ_α gives

    A_β = Σ_{γ ⊳ β} A_γ ⟨U_i x^γ, x^β⟩ / (ξ_i(α) − ξ_i(β)).
"""

from math import comb
from typing import Dict, List

from loguru import logger

from ..combinatorics import Composition, bounded_compositions, sort_info, triangle_greater
from ..core import InfeasibleBoundsError
from .kappa import KAPPA_FIELD, KappaRational, from_affine
from .multipoly import Exponent, MultiPoly
from .operators import monomial_image, xi_eigenvalue

__all__ = ["monomial_count", "check_feasible", "processing_order", "zeta"]


def monomial_count(weight: int, N: int) -> int:
    """Number of monomials of degree `weight` in N variables."""
    if N == 0:
        return 1 if weight == 0 else 0
    return comb(weight + N - 1, N - 1)


def check_feasible(alpha: Composition, N: int, cap: int) -> None:
    if N < alpha.length:
        raise InfeasibleBoundsError(f"N={N} is shorter than ℓ(α)={alpha.length} for {alpha}")
    count = monomial_count(alpha.weight, N)
    if count > cap:
        raise InfeasibleBoundsError(
            f"ζ_{alpha} in {N} variables spans {count} monomials, above the feasibility cap {cap}"
        )


def processing_order(alpha: Composition, N: int) -> List[Composition]:
    """α followed by every β ⊲ α in N slots, descending in the chosen linear extension."""
    alpha = alpha.padded(N)
    below = [beta for beta in bounded_compositions(alpha.weight, N) if triangle_greater(alpha, beta)]
    below.sort(key=lambda beta: (sort_info(beta).alpha_plus.parts, beta.parts), reverse=True)
    return [alpha] + below


def _separating_index(alpha: Composition, beta: Composition) -> int:
    for i, (a, b) in enumerate(zip(alpha, beta), start=1):
        if a != b:
            return i
    raise RuntimeError(f"no separating index between {alpha} and {beta}")


def zeta(alpha: Composition, N: int, cap: int = 20000) -> MultiPoly:
    check_feasible(alpha, N, cap)
    order = processing_order(alpha, N)
    alpha = order[0]

    separator: Dict[Exponent, int] = {}
    denominators: Dict[Exponent, KappaRational] = {}
    for beta in order[1:]:
        i = _separating_index(alpha, beta)
        separator[beta.parts] = i
        denominators[beta.parts] = from_affine(xi_eigenvalue(alpha, i, N) - xi_eigenvalue(beta, i, N))

    # contributions Σ A_γ ⟨U_i x^γ, x^β⟩ for β's own separating index, pushed forward as γ is fixed
    pending: Dict[Exponent, KappaRational] = {}
    coefficients: Dict[Exponent, KappaRational] = {}

    for gamma in order:
        key = gamma.parts
        if gamma is alpha:
            value = KAPPA_FIELD.one
        else:
            value = pending.pop(key, KAPPA_FIELD.zero) / denominators[key]
        if not value:
            continue
        coefficients[key] = value
        for i in range(1, N + 1):
            for target, coeff in monomial_image(i, key):
                if target != key and separator.get(target) == i:
                    pending[target] = pending.get(target, KAPPA_FIELD.zero) + value * from_affine(coeff)

    logger.debug(f"ζ_{alpha}: {len(coefficients)} nonzero of {len(order)} candidate monomials")
    return MultiPoly(N, coefficients)
