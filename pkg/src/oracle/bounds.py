"""
Search bounds for the partner oracle.

Every partner β of α satisfies ℓ(β) <= ℓ(α)+|α|, so searching N_max = ℓ(α)+|α|
slots is exhaustive.  Smaller N_max finds exactly the partners with
ℓ(β) <= N_max and is marked incomplete.
"""

from dataclasses import dataclass
from typing import Optional

from loguru import logger

from ..combinatorics import Composition
from ..core import InfeasibleBoundsError

__all__ = ["SearchBounds", "RANK_MODE", "NAIVE_MODE"]

RANK_MODE = "rank"
NAIVE_MODE = "naive"


@dataclass(frozen=True)
class SearchBounds:
    n_max: Optional[int] = None
    mode: str = RANK_MODE
    factorial_cap: int = 9
    naive_cap: int = 7
    # set when a short N_max is the point of the search, e.g. poles in N variables
    expect_incomplete: bool = False

    def __post_init__(self) -> None:
        if self.mode not in (RANK_MODE, NAIVE_MODE):
            raise ValueError(f"unknown search mode {self.mode!r}, expected {RANK_MODE!r} or {NAIVE_MODE!r}")

    @property
    def cap(self) -> int:
        return self.factorial_cap if self.mode == RANK_MODE else self.naive_cap

    def resolve(self, alpha: Composition) -> "ResolvedBounds":
        """Fix N_max for α; an explicit N_max beyond the cap is refused, a default one is clipped."""
        full = alpha.length + alpha.weight
        if self.n_max is None:
            n_max = max(min(full, self.cap), alpha.length)
        else:
            n_max = self.n_max
        if n_max < alpha.length:
            raise InfeasibleBoundsError(f"N_max={n_max} is shorter than ℓ(α)={alpha.length} for {alpha}")
        if n_max > self.cap:
            raise InfeasibleBoundsError(
                f"N_max={n_max} exceeds the {self.mode} search cap {self.cap} for {alpha}"
            )
        complete = n_max >= full
        if not complete:
            log = logger.debug if self.expect_incomplete else logger.warning
            log(
                f"partner search for {alpha} limited to N_max={n_max} < ℓ(α)+|α|={full}; "
                "partners of greater length are not searched"
            )
        return ResolvedBounds(n_max, self.mode, complete)


@dataclass(frozen=True)
class ResolvedBounds:
    n_max: int
    mode: str
    complete: bool
