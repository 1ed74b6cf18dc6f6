"""
The configurable Jack engine: ζ_α with caching, reports and pole partners.
"""

from typing import Dict, List, Optional, Tuple

from loguru import logger

from ..combinatorics import Composition
from ..core import register
from ..oracle import SearchBounds, enumerate_partners
from .multipoly import MultiPoly
from .report import JackReport, build_report
from .zeta import zeta

__all__ = ["JackEngine", "knop_sahi_report"]


@register()
class JackEngine(object):
    __share__ = ["feasibility_cap"]

    def __init__(self, feasibility_cap: int = 20000, factorial_cap: int = 9) -> None:
        self.feasibility_cap = feasibility_cap
        self.factorial_cap = factorial_cap
        self._cache: Dict[Tuple[Tuple[int, ...], int], MultiPoly] = {}

    def zeta(self, alpha: Composition, N: Optional[int] = None) -> MultiPoly:
        N = alpha.N if N is None else N
        key = (alpha.padded(N).parts, N)
        if key not in self._cache:
            self._cache[key] = zeta(alpha, N, self.feasibility_cap)
        return self._cache[key]

    def pole_partners(
        self, alpha: Composition, N: int, poles: Optional[List[Tuple[int, int]]] = None
    ) -> Dict[Tuple[int, int], List[Composition]]:
        """Critical partners β with ℓ(β) <= N for each pole factor mκ+n of ζ_α in N variables."""
        if poles is None:
            poles = list(self.report(alpha, N, with_partners=False).pole_factors)
        bounds = SearchBounds(N, factorial_cap=max(self.factorial_cap, N), expect_incomplete=True)
        partners = {}
        for m, n in poles:
            found = enumerate_partners(alpha, m, n, bounds).partners
            if not found:
                logger.warning(f"pole {m}κ+{n} of ζ_{alpha} in {N} variables has no critical partner")
            partners[(m, n)] = found
        return partners

    def report(self, alpha: Composition, N: Optional[int] = None, with_partners: bool = True) -> JackReport:
        N = alpha.N if N is None else N
        report = build_report(alpha, N, self.zeta(alpha, N))
        if with_partners:
            report.pole_partners = self.pole_partners(alpha, N, list(report.pole_factors))
        return report

    def __repr__(self) -> str:
        return f"JackEngine(feasibility_cap={self.feasibility_cap})"


def knop_sahi_report(alpha: Composition, N: int, feasibility_cap: int = 20000) -> JackReport:
    """Report for ζ_α in N variables without the partner search; no caching."""
    return build_report(alpha, N, zeta(alpha, N, feasibility_cap))
