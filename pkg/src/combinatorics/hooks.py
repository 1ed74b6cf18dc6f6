"""
Leg-lengths, hook-lengths and hook-length products of compositions.

For a node (i,j) of α, 1 <= j <= α_i,

    L(α;i,j)   = #{l > i: j <= α_l <= α_i} + #{l < i: j <= α_l + 1 <= α_i}
    h(α,t;i,j) = α_i − j + t + κ L(α;i,j)

and h(α,t) is the product over all nodes (rows with α_i = 0 contribute nothing).
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple

from sympy import Poly, Rational, Symbol
from sympy.polys.domains import QQ

from .affine import KAPPA_PLUS_ONE, KappaAffine, reduce_pair
from .composition import Composition, Node, iter_nodes
from .deformed import DeformedValue, deformed_values

__all__ = [
    "leg_length",
    "leg_length_deformed",
    "leg_nodes",
    "arm_nodes",
    "HookFactor",
    "hook_factor",
    "hook_factors_all",
    "factor_multiplicity",
    "hook_product",
]

_KAPPA = Symbol("kappa")


def _rational(value: Fraction) -> Rational:
    return Rational(value.numerator, value.denominator)


def leg_length(alpha: Composition, node: Node) -> int:
    i, j = Node(*node).validate(alpha)
    a_i = alpha[i]
    below = sum(1 for l in range(i + 1, alpha.N + 1) if j <= alpha[l] <= a_i)
    above = sum(1 for l in range(1, i) if j <= alpha[l] + 1 <= a_i)
    return below + above


def leg_length_deformed(alpha: Composition, node: Node) -> int:
    """#{l: j − iυ − 1 < α̃_l < α̃_i}."""
    i, j = Node(*node).validate(alpha)
    values = deformed_values(alpha)
    lower = DeformedValue(j - 1, i)
    upper = values[i - 1]
    return sum(1 for v in values if lower < v < upper)


def leg_nodes(alpha: Composition, node: Node) -> List[Tuple[int, int]]:
    """The leg as diagram cells; cells in column 0 can occur for rows above."""
    i, j = Node(*node).validate(alpha)
    a_i = alpha[i]
    cells = [(l, j - 1) for l in range(1, i) if j - 1 <= alpha[l] < a_i]
    cells += [(l, j) for l in range(i + 1, alpha.length + 1) if j <= alpha[l] <= a_i]
    return cells


def arm_nodes(alpha: Composition, node: Node) -> List[Tuple[int, int]]:
    i, j = Node(*node).validate(alpha)
    return [(i, l) for l in range(j + 1, alpha[i] + 1)]


@dataclass(frozen=True)
class HookFactor:
    """The linear factor slope·κ + intercept attached to a node."""

    slope: Fraction
    intercept: Fraction
    node: Node

    @property
    def affine(self) -> KappaAffine:
        return KappaAffine(self.slope, self.intercept)

    def reduced(self) -> Tuple[int, int]:
        return reduce_pair(self.slope, self.intercept)

    def same_zero(self, m: int, n: int) -> bool:
        return self.reduced() == reduce_pair(m, n)

    def as_pair(self) -> Tuple[int, int]:
        """(m, n) for integral factors."""
        if not self.affine.is_integral():
            raise ValueError(f"hook factor {self} is not integral")
        return (int(self.slope), int(self.intercept))

    def __str__(self) -> str:
        return str(self.affine)


def hook_factor(alpha: Composition, node: Node, t: KappaAffine = KAPPA_PLUS_ONE) -> HookFactor:
    node = Node(*node)
    legs = leg_length(alpha, node)
    i, j = node
    return HookFactor(
        slope=t.slope + legs,
        intercept=alpha[i] - j + t.intercept,
        node=node,
    )


def hook_factors_all(alpha: Composition, t: KappaAffine = KAPPA_PLUS_ONE) -> List[HookFactor]:
    return [hook_factor(alpha, node, t) for node in iter_nodes(alpha)]


def factor_multiplicity(alpha: Composition, m: int, n: int) -> int:
    """Number of hook factors of h(α,κ+1) proportional to mκ+n."""
    if m <= 0 or n <= 0:
        raise ValueError(f"factor mκ+n needs positive m and n, got ({m}, {n})")
    return sum(1 for factor in hook_factors_all(alpha) if factor.same_zero(m, n))


def hook_product(alpha: Composition, t: KappaAffine = KAPPA_PLUS_ONE) -> Tuple[Fraction, ...]:
    """Coefficients of h(α,t) in κ, lowest degree first; () for the zero product."""
    product = Poly(1, _KAPPA, domain=QQ)
    for factor in hook_factors_all(alpha, t):
        product *= Poly([_rational(factor.slope), _rational(factor.intercept)], _KAPPA, domain=QQ)
    if product.is_zero:
        return ()
    return tuple(Fraction(int(c.p), int(c.q)) for c in reversed(product.all_coeffs()))
