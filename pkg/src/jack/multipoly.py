"""
Sparse polynomials in x_1..x_N with coefficients in ℚ(κ).
"""

from typing import Dict, Iterator, Mapping, Optional, Tuple, Union

from ..combinatorics import Composition
from .kappa import KAPPA_FIELD, KappaRational, split

__all__ = ["Exponent", "MultiPoly"]

Exponent = Tuple[int, ...]
Scalar = Union[int, KappaRational]


class MultiPoly(object):
    """Mapping exponent vector -> coefficient; zero coefficients are never stored."""

    __slots__ = ("N", "terms")

    def __init__(self, N: int, terms: Optional[Mapping[Exponent, Scalar]] = None) -> None:
        self.N = N
        self.terms: Dict[Exponent, KappaRational] = {}
        for exponent, coeff in (terms or {}).items():
            self._add_term(tuple(exponent), KAPPA_FIELD(coeff) if isinstance(coeff, int) else coeff)

    @classmethod
    def monomial(cls, exponent: Union[Exponent, Composition], coeff: Scalar = 1) -> "MultiPoly":
        exponent = tuple(exponent)
        return cls(len(exponent), {exponent: coeff})

    @classmethod
    def constant(cls, N: int, coeff: Scalar = 1) -> "MultiPoly":
        return cls(N, {(0,) * N: coeff})

    def _add_term(self, exponent: Exponent, coeff: KappaRational) -> None:
        if len(exponent) != self.N:
            raise ValueError(f"exponent {exponent} does not have {self.N} variables")
        if any(e < 0 for e in exponent):
            raise ValueError(f"negative exponent {exponent}")
        total = self.terms.get(exponent, KAPPA_FIELD.zero) + coeff
        if total:
            self.terms[exponent] = total
        else:
            self.terms.pop(exponent, None)

    def _check(self, other: "MultiPoly") -> None:
        if other.N != self.N:
            raise ValueError(f"dimension mismatch: {self.N} vs {other.N} variables")

    def __add__(self, other: "MultiPoly") -> "MultiPoly":
        self._check(other)
        result = self.copy()
        for exponent, coeff in other.terms.items():
            result._add_term(exponent, coeff)
        return result

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self.N, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "MultiPoly") -> "MultiPoly":
        return self + (-other)

    def scale(self, scalar: Scalar) -> "MultiPoly":
        if not scalar:
            return MultiPoly(self.N)
        return MultiPoly(self.N, {e: c * scalar for e, c in self.terms.items()})

    __mul__ = scale
    __rmul__ = scale

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.N == other.N and not (self - other).terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[Tuple[Exponent, KappaRational]]:
        """Terms in descending lexicographic order of exponents."""
        for exponent in sorted(self.terms, reverse=True):
            yield exponent, self.terms[exponent]

    def __getitem__(self, exponent: Union[Exponent, Composition]) -> KappaRational:
        return self.terms.get(tuple(exponent), KAPPA_FIELD.zero)

    def copy(self) -> "MultiPoly":
        result = MultiPoly(self.N)
        result.terms = dict(self.terms)
        return result

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def to_dict(self) -> dict:
        """Coefficients keyed by comma-joined exponents, as numerator/denominator lists in κ."""
        table = {}
        for exponent, coeff in self:
            numer, denom = split(coeff)
            table[",".join(map(str, exponent))] = {"numerator": numer.to_list(), "denominator": denom.to_list()}
        return table

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"({c})*x^{e}" for e, c in self)
