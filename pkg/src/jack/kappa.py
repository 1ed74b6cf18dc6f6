"""
Exact arithmetic in ℚ(κ).

Coefficients of ζ_α live in the sympy rational function field ℚ(κ); every
element is kept as a cancelled fraction whose denominator is a primitive
integer polynomial with positive leading coefficient.  KappaPoly is the plain
coefficient-list view used for reports and factorization.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Dict, Iterable, List, Tuple, Union

from sympy import Poly, Rational, Symbol
from sympy.polys.domains import QQ
from sympy.polys.fields import FracElement, field

from ..combinatorics import KAPPA_PLUS_ONE, Composition, KappaAffine, hook_factors_all, reduce_pair
from ..core import FactorizationError

__all__ = [
    "KAPPA_FIELD",
    "kappa",
    "KappaRational",
    "KappaPoly",
    "qq",
    "from_affine",
    "hook_product_element",
    "split",
    "linear_factors",
    "lcm_of_denominators",
    "trailing_coefficient",
]

KAPPA_FIELD, kappa = field("kappa", QQ)
KappaRational = FracElement

_SYMBOL = Symbol("kappa")


def qq(value: Union[int, Fraction]):
    value = Fraction(value)
    return QQ(value.numerator, value.denominator)


def _to_fraction(c) -> Fraction:
    r = QQ.to_sympy(c)
    return Fraction(int(r.p), int(r.q))


def from_affine(expr: KappaAffine) -> KappaRational:
    return kappa * qq(expr.slope) + qq(expr.intercept)


@dataclass(frozen=True)
class KappaPoly:
    """Polynomial in κ, lowest degree first; the zero polynomial is ()."""

    coefficients: Tuple[Fraction, ...] = ()

    def __post_init__(self) -> None:
        coeffs = [Fraction(c) for c in self.coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coefficients", tuple(coeffs))

    @classmethod
    def from_element(cls, poly) -> "KappaPoly":
        """From a univariate sympy PolyElement."""
        terms = dict(poly.terms())
        degree = max((e[0] for e in terms), default=-1)
        return cls(tuple(_to_fraction(terms.get((d,), QQ.zero)) for d in range(degree + 1)))

    def to_element(self) -> KappaRational:
        ring = KAPPA_FIELD.ring
        poly = ring.from_dict({(d,): qq(c) for d, c in enumerate(self.coefficients) if c})
        return KAPPA_FIELD(poly)

    @classmethod
    def from_sympy(cls, poly: Poly) -> "KappaPoly":
        return cls(tuple(Fraction(int(c.p), int(c.q)) for c in reversed(poly.all_coeffs())))

    def to_sympy(self) -> Poly:
        expr = sum(Rational(c.numerator, c.denominator) * _SYMBOL**d for d, c in enumerate(self.coefficients))
        return Poly(expr, _SYMBOL)

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return not self.coefficients

    def __call__(self, value: Union[int, Fraction]) -> Fraction:
        result = Fraction(0)
        for c in reversed(self.coefficients):
            result = result * value + c
        return result

    def is_nonnegative_integral(self) -> bool:
        return all(c.denominator == 1 and c >= 0 for c in self.coefficients)

    def primitive(self) -> Tuple[Fraction, "KappaPoly"]:
        """(content, primitive part) with integer coprime coefficients and positive leading term."""
        if self.is_zero():
            return Fraction(0), self
        scale, integral = self.to_sympy().clear_denoms(convert=True)
        content, part = integral.primitive()
        if part.LC() < 0:
            content, part = -content, -part
        return Fraction(int(content), int(scale)), KappaPoly.from_sympy(part)

    def to_list(self) -> List[str]:
        return [str(c) for c in self.coefficients]

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        return str(self.to_sympy().as_expr()).replace("kappa", "κ")


def split(value: KappaRational) -> Tuple[KappaPoly, KappaPoly]:
    """(numerator, denominator) with the denominator primitive and positive-leading."""
    numer = KappaPoly.from_element(value.numer)
    denom = KappaPoly.from_element(value.denom)
    content, denom = denom.primitive()
    numer = KappaPoly(tuple(c / content for c in numer.coefficients))
    return numer, denom


def hook_product_element(alpha: Composition, t: KappaAffine = KAPPA_PLUS_ONE) -> KappaRational:
    product = KAPPA_FIELD.one
    for factor in hook_factors_all(alpha, t):
        product *= from_affine(factor.affine)
    return product


def trailing_coefficient(alpha: Composition) -> KappaRational:
    """l!κ^l / h(α,κ+1) with l = |α|."""
    l = alpha.weight
    return kappa**l * factorial(l) / hook_product_element(alpha)


def linear_factors(poly: KappaPoly) -> Dict[Tuple[int, int], int]:
    """Factor into reduced mκ+n (m > 0) with multiplicities; anything nonlinear is an error."""
    if poly.is_zero():
        raise FactorizationError("cannot factor the zero polynomial")
    _, factors = poly.to_sympy().factor_list()
    result: Dict[Tuple[int, int], int] = {}
    for factor, multiplicity in factors:
        if factor.degree() == 0:
            continue
        if factor.degree() > 1:
            raise FactorizationError(f"denominator {poly} has the nonlinear factor {factor.as_expr()}")
        a, b = (Fraction(int(c.p), int(c.q)) for c in factor.all_coeffs())
        m, n = reduce_pair(a, b)
        if m < 0:
            m, n = -m, -n
        result[(m, n)] = result.get((m, n), 0) + multiplicity
    return dict(sorted(result.items()))


def lcm_of_denominators(values: Iterable[KappaRational]) -> Tuple[KappaPoly, Dict[Tuple[int, int], int]]:
    """The least common multiple of the denominators and its linear factorization."""
    poles: Dict[Tuple[int, int], int] = {}
    for value in values:
        _, denom = split(value)
        if denom.degree < 1:
            continue
        for key, multiplicity in linear_factors(denom).items():
            poles[key] = max(poles.get(key, 0), multiplicity)
    product = Poly(1, _SYMBOL)
    for (m, n), multiplicity in sorted(poles.items()):
        product *= Poly(m * _SYMBOL + n, _SYMBOL) ** multiplicity
    return KappaPoly.from_sympy(product), dict(sorted(poles.items()))
