"""
The (−n/m)-critical pair check.

(α, β) is (−n/m)-critical when α ⊳ β and mκ+n divides
(r(β,i) − r(α,i))κ + α_i − β_i for every i, i.e.
(r(β,i) − r(α,i))·n = m·(α_i − β_i).
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from ..combinatorics import Composition, pad_common, rank_vector, triangle_greater

__all__ = [
    "CriticalPairCertificate",
    "CriticalPairCheck",
    "check_critical_pair",
    "is_critical_pair",
]


@dataclass(frozen=True)
class CriticalPairCertificate:
    """Witnesses q_i with (r(β,i) − r(α,i))κ + α_i − β_i = q_i·(mκ + n)."""

    alpha: Composition
    beta: Composition
    m: int
    n: int
    quotients: Tuple[Fraction, ...]

    def to_dict(self) -> dict:
        return {
            "alpha": list(self.alpha),
            "beta": list(self.beta),
            "m": self.m,
            "n": self.n,
            "quotients": [str(q) for q in self.quotients],
        }


@dataclass(frozen=True)
class CriticalPairCheck:
    certificate: Optional[CriticalPairCertificate]
    violated_index: Optional[int] = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.certificate is not None


def _validate_factor(m: int, n: int, extended: bool) -> None:
    if n == 0:
        raise ValueError("n = 0 is impossible for a critical pair (it would force α = β)")
    if n < 0:
        raise ValueError(f"n must be positive, got {n}")
    if m < 0:
        raise ValueError(f"m must be nonnegative, got {m}")
    if m == 0 and not extended:
        raise ValueError("m = 0 is only accepted with the extended flag")


def check_critical_pair(
    alpha: Composition, beta: Composition, m: int, n: int, extended: bool = False
) -> CriticalPairCheck:
    """Like is_critical_pair, but a refusal says which condition failed (index is 1-based)."""
    _validate_factor(m, n, extended)
    alpha, beta = pad_common(alpha, beta)

    if not triangle_greater(alpha, beta):
        return CriticalPairCheck(None, None, "α ⊳ β does not hold")

    quotients = []
    for i, (ra, rb, a, b) in enumerate(zip(rank_vector(alpha), rank_vector(beta), alpha, beta), 1):
        if (rb - ra) * n != m * (a - b):
            return CriticalPairCheck(
                None, i, f"{m}κ+{n} does not divide ({rb - ra})κ+({a - b}) at index {i}"
            )
        quotients.append(Fraction(a - b, n))

    return CriticalPairCheck(CriticalPairCertificate(alpha, beta, m, n, tuple(quotients)))


def is_critical_pair(
    alpha: Composition, beta: Composition, m: int, n: int, extended: bool = False
) -> Optional[CriticalPairCertificate]:
    return check_critical_pair(alpha, beta, m, n, extended).certificate
