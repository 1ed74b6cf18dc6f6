"""
Ranks, the sorting permutation and the partial orders on compositions.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import accumulate
from typing import Optional, Tuple

from .composition import Composition, pad_common

__all__ = [
    "rank_vector",
    "SortInfo",
    "sort_info",
    "dominates",
    "triangle_greater",
    "triangle_less",
    "parallel_ratio",
]


def _rank_order(alpha: Composition) -> Tuple[int, ...]:
    # larger parts first, ties by lower index
    return tuple(sorted(range(1, alpha.N + 1), key=lambda i: (-alpha[i], i)))


def rank_vector(alpha: Composition) -> Tuple[int, ...]:
    """r(α,i) = #{j: α_j > α_i} + #{j <= i: α_j = α_i}, as a permutation of 1..N."""
    ranks = [0] * alpha.N
    for position, i in enumerate(_rank_order(alpha), start=1):
        ranks[i - 1] = position
    return tuple(ranks)


@dataclass(frozen=True)
class SortInfo:
    """w with r(α, w(i)) = i, and the partition α⁺ with α⁺_i = α_{w(i)}."""

    w: Tuple[int, ...]
    alpha_plus: Composition

    def __call__(self, i: int) -> int:
        return self.w[i - 1]

    def inverse(self) -> Tuple[int, ...]:
        inv = [0] * len(self.w)
        for position, i in enumerate(self.w, start=1):
            inv[i - 1] = position
        return tuple(inv)


def sort_info(alpha: Composition) -> SortInfo:
    w = _rank_order(alpha)
    return SortInfo(w=w, alpha_plus=Composition(tuple(alpha[i] for i in w)))


def dominates(alpha: Composition, beta: Composition) -> bool:
    """α ≻ β: α ≠ β and every partial sum of α is at least that of β."""
    alpha, beta = pad_common(alpha, beta)
    if alpha == beta:
        return False
    return all(a >= b for a, b in zip(accumulate(alpha.parts), accumulate(beta.parts)))


def triangle_greater(alpha: Composition, beta: Composition) -> bool:
    """α ⊳ β: equal weight and either α⁺ ≻ β⁺, or α⁺ = β⁺ and α ≻ β."""
    if alpha.weight != beta.weight:
        return False
    alpha, beta = pad_common(alpha, beta)
    alpha_plus = sort_info(alpha).alpha_plus
    beta_plus = sort_info(beta).alpha_plus
    if alpha_plus == beta_plus:
        return dominates(alpha, beta)
    return dominates(alpha_plus, beta_plus)


def triangle_less(alpha: Composition, beta: Composition) -> bool:
    """α ⊲ β."""
    return triangle_greater(beta, alpha)


def parallel_ratio(alpha: Composition, beta: Composition) -> Optional[Fraction]:
    """
    The ratio c with α_i − β_i = c·(r(α,i) − r(β,i)) for every i, if the
    difference vectors are parallel and the rank difference is nonzero.

        (2,7,8,2,0,0), (5,1,2,5,3,3) -> -3/2
    """
    alpha, beta = pad_common(alpha, beta)
    diffs = [a - b for a, b in zip(alpha, beta)]
    rank_diffs = [ra - rb for ra, rb in zip(rank_vector(alpha), rank_vector(beta))]

    pivot = next((i for i, d in enumerate(rank_diffs) if d != 0), None)
    if pivot is None:
        return None
    ratio = Fraction(diffs[pivot], rank_diffs[pivot])
    if all(d == ratio * rd for d, rd in zip(diffs, rank_diffs)):
        return ratio
    return None
