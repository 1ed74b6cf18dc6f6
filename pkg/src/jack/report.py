"""
Checks on ζ_α that tie its poles to critical pairs.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from loguru import logger

from ..combinatorics import Composition, hook_factors_all, pad_common
from ..core import UncertifiedPairError
from ..critical import is_critical_pair
from .kappa import KappaPoly, hook_product_element, lcm_of_denominators, split, trailing_coefficient
from .multipoly import MultiPoly
from .operators import xi_eigenvalue

__all__ = [
    "JackReport",
    "knop_sahi_ok",
    "trailing_coeff_ok",
    "xi_specialization_match",
]


@dataclass
class JackReport:
    alpha: Composition
    N: int
    zeta: MultiPoly
    denominator_lcm: KappaPoly
    pole_factors: Dict[Tuple[int, int], int]
    knop_sahi_ok: bool
    trailing_coeff_ok: Optional[bool]
    pole_partners: Dict[Tuple[int, int], List[Composition]] = field(default_factory=dict)

    @property
    def hook_factors(self) -> List[Tuple[int, int]]:
        return sorted({f.reduced() for f in hook_factors_all(self.alpha)})

    def unpartnered_poles(self) -> List[Tuple[int, int]]:
        return [pole for pole in self.pole_factors if not self.pole_partners.get(pole)]

    def to_dict(self) -> dict:
        return {
            "alpha": list(self.alpha),
            "N": self.N,
            "zeta": self.zeta.to_dict(),
            "denominator_lcm": self.denominator_lcm.to_list(),
            "pole_factors": [{"m": m, "n": n, "multiplicity": k} for (m, n), k in self.pole_factors.items()],
            "knop_sahi_ok": self.knop_sahi_ok,
            "trailing_coeff_ok": self.trailing_coeff_ok,
            "pole_partners": {
                f"{m},{n}": [list(p) for p in partners] for (m, n), partners in self.pole_partners.items()
            },
        }


def knop_sahi_ok(alpha: Composition, zeta: MultiPoly) -> bool:
    """Every coefficient of h(α,κ+1)·ζ_α lies in ℕ₀[κ]."""
    h = hook_product_element(alpha)
    for exponent, coeff in zeta:
        numer, denom = split(h * coeff)
        if denom.degree > 0:
            logger.warning(f"h·A at x^{exponent} of ζ_{alpha} is not a polynomial: {h * coeff}")
            return False
        if not numer.is_nonnegative_integral():
            logger.warning(f"h·A at x^{exponent} of ζ_{alpha} has coefficients outside ℕ₀: {numer}")
            return False
    return True


def trailing_coeff_ok(alpha: Composition, zeta: MultiPoly) -> Optional[bool]:
    """Coefficient of x_{k+1}…x_{k+l} (k = ℓ(α), l = |α|) against l!κ^l/h(α,κ+1); None if N < k+l."""
    k, l = alpha.length, alpha.weight
    if zeta.N < k + l:
        return None
    exponent = tuple(1 if k < position <= k + l else 0 for position in range(1, zeta.N + 1))
    return zeta[exponent] == trailing_coefficient(alpha)


def build_report(alpha: Composition, N: int, zeta: MultiPoly) -> JackReport:
    alpha = alpha.padded(N)
    lcm, poles = lcm_of_denominators(c for _, c in zeta)
    return JackReport(
        alpha=alpha,
        N=N,
        zeta=zeta,
        denominator_lcm=lcm,
        pole_factors=poles,
        knop_sahi_ok=knop_sahi_ok(alpha, zeta),
        trailing_coeff_ok=trailing_coeff_ok(alpha, zeta),
    )


def xi_specialization_match(alpha: Composition, beta: Composition, m: int, n: int) -> bool:
    """At κ = −n/m the eigenvalue vectors of a certified pair coincide."""
    if is_critical_pair(alpha, beta, m, n) is None:
        raise UncertifiedPairError(f"({alpha}, {beta}) is not a (−{n}/{m})-critical pair")
    alpha, beta = pad_common(alpha, beta)
    value = Fraction(-n, m)
    N = alpha.N
    return all(
        xi_eigenvalue(alpha, i, N).at(value) == xi_eigenvalue(beta, i, N).at(value) for i in range(1, N + 1)
    )
