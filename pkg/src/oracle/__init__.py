"""
Brute-force partner search and conjecture scans.
"""

from .bounds import NAIVE_MODE, RANK_MODE, ResolvedBounds, SearchBounds
from .oracle import PartnerOracle
from .scans import (
    COPRIME,
    MULTIPLE,
    NON_COPRIME,
    NegativeExistenceReport,
    UniquenessReport,
    negative_existence_scan,
    parallel_factor,
    uniqueness_scan,
)
from .search import PartnerSearch, enumerate_partners, naive_partners, rank_permutation_partners
