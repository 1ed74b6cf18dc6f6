"""
The configurable partner oracle used by the CLI and the jack engine reports.
"""

from typing import Iterable, Optional

from ..combinatorics import Composition
from ..core import register
from .bounds import RANK_MODE, SearchBounds
from .scans import NegativeExistenceReport, UniquenessReport, negative_existence_scan, uniqueness_scan
from .search import PartnerSearch, enumerate_partners

__all__ = ["PartnerOracle"]


@register()
class PartnerOracle(object):
    __share__ = ["num_workers", "print_freq"]

    def __init__(
        self,
        mode: str = RANK_MODE,
        factorial_cap: int = 9,
        naive_cap: int = 7,
        num_workers: int = 0,
        print_freq: int = 50,
    ) -> None:
        self.mode = mode
        self.factorial_cap = factorial_cap
        self.naive_cap = naive_cap
        self.num_workers = num_workers
        self.print_freq = print_freq

    def bounds(self, n_max: Optional[int] = None, mode: Optional[str] = None) -> SearchBounds:
        return SearchBounds(n_max, mode or self.mode, self.factorial_cap, self.naive_cap)

    def enumerate(
        self,
        alpha: Composition,
        m: int,
        n: int,
        n_max: Optional[int] = None,
        mode: Optional[str] = None,
        extended: bool = False,
    ) -> PartnerSearch:
        return enumerate_partners(
            alpha, m, n, self.bounds(n_max, mode), num_workers=self.num_workers, extended=extended
        )

    def uniqueness_scan(self, corpus: Iterable[Composition], max_N: Optional[int] = None) -> UniquenessReport:
        return uniqueness_scan(
            corpus, max_N, bounds=self.bounds(), num_workers=self.num_workers, print_freq=self.print_freq
        )

    def negative_existence_scan(self, corpus: Iterable[Composition]) -> NegativeExistenceReport:
        return negative_existence_scan(corpus, print_freq=self.print_freq)

    def __repr__(self) -> str:
        return (
            f"PartnerOracle(mode={self.mode!r}, factorial_cap={self.factorial_cap}, "
            f"naive_cap={self.naive_cap}, num_workers={self.num_workers})"
        )
