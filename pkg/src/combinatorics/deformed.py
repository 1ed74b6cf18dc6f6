"""
Exact υ-deformed values a − bυ with υ = 1/(N+1).

Every b that occurs is an index in 0..N, so 0 <= bυ < 1 and comparisons reduce
to (a, −b) lexicographic order; no rationals are needed.
"""

from dataclasses import dataclass
from functools import total_ordering
from typing import Tuple

from .composition import Composition

__all__ = ["DeformedValue", "deformed", "deformed_values", "deformed_rank_vector"]


@total_ordering
@dataclass(frozen=True)
class DeformedValue:
    base: int
    upsilon_count: int

    def _key(self) -> Tuple[int, int]:
        return (self.base, -self.upsilon_count)

    def __lt__(self, other: "DeformedValue") -> bool:
        if not isinstance(other, DeformedValue):
            return NotImplemented
        return self._key() < other._key()

    def __add__(self, shift: int) -> "DeformedValue":
        if not isinstance(shift, int):
            return NotImplemented
        return DeformedValue(self.base + shift, self.upsilon_count)

    def __sub__(self, shift: int) -> "DeformedValue":
        if not isinstance(shift, int):
            return NotImplemented
        return DeformedValue(self.base - shift, self.upsilon_count)

    def difference(self, other: "DeformedValue") -> Tuple[int, int]:
        """(integer part, υ-multiplicity) of self − other; integral iff the υ part is 0."""
        return self.base - other.base, other.upsilon_count - self.upsilon_count

    def is_integral_difference(self, other: "DeformedValue") -> bool:
        return self.upsilon_count == other.upsilon_count

    def to_pair(self) -> Tuple[int, int]:
        return (self.base, self.upsilon_count)

    def __str__(self) -> str:
        if self.upsilon_count == 0:
            return str(self.base)
        return f"{self.base}-{self.upsilon_count}υ"


def deformed(alpha: Composition, i: int) -> DeformedValue:
    """α̃_i = α_i − iυ."""
    if not 1 <= i <= alpha.N:
        raise IndexError(f"index {i} out of range 1..{alpha.N}")
    return DeformedValue(alpha[i], i)


def deformed_values(alpha: Composition) -> Tuple[DeformedValue, ...]:
    return tuple(DeformedValue(a, i) for i, a in enumerate(alpha.parts, start=1))


def deformed_rank_vector(alpha: Composition) -> Tuple[int, ...]:
    """r(α̃,i) = #{j: α̃_j > α̃_i} + 1; equals rank_vector(α)."""
    values = deformed_values(alpha)
    return tuple(sum(1 for other in values if other > v) + 1 for v in values)
