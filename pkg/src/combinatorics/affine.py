"""
Affine expressions sκ + c in the parameter κ with rational coefficients.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Tuple, Union

__all__ = ["KappaAffine", "KAPPA_PLUS_ONE", "reduce_pair"]

Number = Union[int, Fraction]


def reduce_pair(m: Number, n: Number) -> Tuple[int, int]:
    """Primitive integer form of (m, n), up to a positive scalar: (4,6) -> (2,3)."""
    m, n = Fraction(m), Fraction(n)
    scale = m.denominator * n.denominator
    a, b = int(m * scale), int(n * scale)
    g = gcd(a, b)
    if g == 0:
        return (0, 0)
    return (a // g, b // g)


@dataclass(frozen=True)
class KappaAffine:
    slope: Fraction
    intercept: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "slope", Fraction(self.slope))
        object.__setattr__(self, "intercept", Fraction(self.intercept))

    def __add__(self, other: "KappaAffine") -> "KappaAffine":
        if isinstance(other, (int, Fraction)):
            return KappaAffine(self.slope, self.intercept + other)
        return KappaAffine(self.slope + other.slope, self.intercept + other.intercept)

    def __sub__(self, other: "KappaAffine") -> "KappaAffine":
        return KappaAffine(self.slope - other.slope, self.intercept - other.intercept)

    def __mul__(self, scalar: Number) -> "KappaAffine":
        return KappaAffine(self.slope * scalar, self.intercept * scalar)

    __rmul__ = __mul__

    def at(self, kappa: Number) -> Fraction:
        return self.slope * kappa + self.intercept

    def reduced(self) -> Tuple[int, int]:
        return reduce_pair(self.slope, self.intercept)

    def is_integral(self) -> bool:
        return self.slope.denominator == 1 and self.intercept.denominator == 1

    def __str__(self) -> str:
        slope, intercept = self.slope, self.intercept
        if slope == 0:
            return str(intercept)
        head = "κ" if slope == 1 else f"{slope}κ"
        if intercept == 0:
            return head
        sign = "+" if intercept > 0 else "-"
        return f"{head}{sign}{abs(intercept)}"


KAPPA_PLUS_ONE = KappaAffine(1, 1)
