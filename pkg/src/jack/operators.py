"""
The commuting operators U_i and their eigenvalues.

    U_i p = ∂/∂x_i (x_i p) + κ Σ_{j≠i} (x_i p − x_j (i,j)p)/(x_i − x_j) − κ Σ_{j<i} (i,j)p

On a monomial every term has an integer affine coefficient, so monomial images
are cached as {exponent: KappaAffine} and lifted to ℚ(κ) when applied.
"""

from functools import lru_cache
from typing import Dict, Tuple

from sympy import div, symbols

from ..combinatorics import Composition, KappaAffine, rank_vector
from .kappa import from_affine
from .multipoly import Exponent, MultiPoly

__all__ = [
    "divided_difference",
    "divided_difference_by_division",
    "monomial_image",
    "u_apply",
    "xi_eigenvalue",
    "commute_check",
]


def _swap(exponent: Exponent, i: int, j: int) -> Exponent:
    swapped = list(exponent)
    swapped[i - 1], swapped[j - 1] = swapped[j - 1], swapped[i - 1]
    return tuple(swapped)


def _with(exponent: Exponent, i: int, a: int, j: int, b: int) -> Exponent:
    result = list(exponent)
    result[i - 1], result[j - 1] = a, b
    return tuple(result)


def divided_difference(i: int, j: int, exponent: Exponent) -> Dict[Exponent, int]:
    """(x_i x^a − x_j x^{(i,j)a}) / (x_i − x_j) in closed form."""
    u, v = exponent[i - 1], exponent[j - 1]
    if u > v:
        return {_with(exponent, i, u - t, j, v + t): 1 for t in range(u - v + 1)}
    if u == v:
        return {tuple(exponent): 1}
    return {_with(exponent, i, v - 1 - t, j, u + 1 + t): -1 for t in range(v - u - 1)}


def divided_difference_by_division(i: int, j: int, exponent: Exponent, N: int) -> Dict[Exponent, int]:
    """The same quotient by exact polynomial division; used to check the closed form."""
    xs = symbols(f"x1:{N + 1}")
    monomial = 1
    swapped = 1
    for position, (e, s) in enumerate(zip(exponent, _swap(exponent, i, j))):
        monomial *= xs[position] ** e
        swapped *= xs[position] ** s
    numerator = xs[i - 1] * monomial - xs[j - 1] * swapped
    quotient, remainder = div(numerator, xs[i - 1] - xs[j - 1], *xs)
    if remainder != 0:
        raise RuntimeError(f"x_{i} − x_{j} does not divide {numerator}")
    if quotient == 0:
        return {}
    return {tuple(monom): int(coeff) for monom, coeff in quotient.as_poly(*xs).terms()}


@lru_cache(maxsize=None)
def monomial_image(i: int, exponent: Exponent) -> Tuple[Tuple[Exponent, KappaAffine], ...]:
    """U_i x^a as (exponent, sκ + c) pairs, sorted by exponent."""
    N = len(exponent)
    if not 1 <= i <= N:
        raise IndexError(f"operator index {i} out of range 1..{N}")

    image: Dict[Exponent, KappaAffine] = {}

    def add(e: Exponent, value: KappaAffine) -> None:
        total = image.get(e, KappaAffine(0, 0)) + value
        if total.slope or total.intercept:
            image[e] = total
        else:
            image.pop(e, None)

    add(exponent, KappaAffine(0, exponent[i - 1] + 1))
    for j in range(1, N + 1):
        if j == i:
            continue
        for e, c in divided_difference(i, j, exponent).items():
            add(e, KappaAffine(c, 0))
        if j < i:
            add(_swap(exponent, i, j), KappaAffine(-1, 0))

    return tuple(sorted(image.items()))


def u_apply(i: int, p: MultiPoly, N: int) -> MultiPoly:
    if p.N != N:
        raise ValueError(f"dimension mismatch: polynomial in {p.N} variables, operator in {N}")
    result = MultiPoly(N)
    for exponent, coeff in p.terms.items():
        for target, value in monomial_image(i, exponent):
            result._add_term(target, coeff * from_affine(value))
    return result


def xi_eigenvalue(alpha: Composition, i: int, N: int) -> KappaAffine:
    """ξ_i(α) = (N − r(α,i))κ + α_i + 1."""
    alpha = alpha.padded(N)
    return KappaAffine(N - rank_vector(alpha)[i - 1], alpha[i] + 1)


def commute_check(i: int, j: int, p: MultiPoly, N: int) -> bool:
    return u_apply(i, u_apply(j, p, N), N) == u_apply(j, u_apply(i, p, N), N)
