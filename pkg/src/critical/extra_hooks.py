"""
Further hook-lengths divisible by mκ+n, read off the ξ-sequence past T.

A sign change α̃_{w(m+s)} > ξ_{m+s+1}, α̃_{w(m+s+1)} < ξ_{m+s+2} with s > T
and m+s+1 = m·q + i (1 <= i <= m) forces the hook-length at
(w(i), α_{w(i)} + 1 − nq) to equal q(mκ+n).
"""

from dataclasses import dataclass
from typing import List, Optional

from loguru import logger

from ..combinatorics import Composition, HookFactor, KappaAffine, Node, hook_factor
from .construct import construct_beta, xi_gap

__all__ = ["ExtraHook", "detect_extra_hooks"]


@dataclass(frozen=True)
class ExtraHook:
    node: Node
    predicted: KappaAffine
    factor: Optional[HookFactor]

    @property
    def verified(self) -> bool:
        return self.factor is not None and self.factor.affine == self.predicted

    def to_dict(self) -> dict:
        return {
            "node": list(self.node),
            "predicted": str(self.predicted),
            "factor": None if self.factor is None else str(self.factor),
            "verified": self.verified,
        }


def detect_extra_hooks(alpha: Composition, node: Node) -> List[ExtraHook]:
    _, trace = construct_beta(alpha, node)
    padded, w, l, m, n = trace.alpha, trace.w, trace.l, trace.m, trace.n

    found = []
    s = trace.T + 1
    while l + m + s + 1 <= trace.N:
        if xi_gap(padded, w, l, m, n, s) > 0 and xi_gap(padded, w, l, m, n, s + 1) < 0:
            q, i = divmod(m + s + 1 - 1, m)
            i += 1
            row = trace.row(i)
            candidate = Node(row, padded[row] + 1 - n * q)
            predicted = KappaAffine(q * m, q * n)
            try:
                factor = hook_factor(padded, candidate)
            except ValueError:
                factor = None
            hook = ExtraHook(candidate, predicted, factor)
            if not hook.verified:
                logger.warning(f"sign change at s={s} for {alpha} predicts {predicted} at {candidate}, got {factor}")
            found.append(hook)
        s += 1
    return found
