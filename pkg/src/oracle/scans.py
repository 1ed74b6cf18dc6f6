"""
Conjecture scans over corpora of compositions.

uniqueness_scan
    For each hook factor of h(α,κ+1), grouped by zero κ = −n/m, count the
    partners of α.  A single coprime factor is expected to have exactly one
    partner; other counts are conjecture witnesses and are logged, never raised.

negative_existence_scan
    Look for α ⊳ β whose difference vector is parallel to the rank-difference
    vector with a negative m (mn < 0).  None may exist.
"""

from collections import OrderedDict
from dataclasses import dataclass, field
from math import gcd
from typing import Dict, Iterable, List, Optional, Tuple

from loguru import logger

from ..combinatorics import (
    Composition,
    bounded_compositions,
    format_composition,
    hook_factors_all,
    rank_vector,
    triangle_greater,
)
from ..misc import ProgressLogger
from .bounds import SearchBounds
from .search import enumerate_partners

__all__ = [
    "COPRIME",
    "NON_COPRIME",
    "MULTIPLE",
    "UniquenessRecord",
    "UniquenessReport",
    "NegativeExistenceRecord",
    "NegativeExistenceReport",
    "uniqueness_scan",
    "negative_existence_scan",
    "parallel_factor",
]

COPRIME = "coprime"
NON_COPRIME = "non_coprime"
MULTIPLE = "multiple"


@dataclass
class UniquenessRecord:
    alpha: Composition
    factors: List[Tuple[int, int]]
    reduced: Tuple[int, int]
    section: str
    partners: List[Composition]
    complete: bool

    @property
    def multiplicity(self) -> int:
        return len(self.factors)

    @property
    def count(self) -> int:
        return len(self.partners)

    @property
    def flagged(self) -> bool:
        return self.section == COPRIME and self.count != 1

    def to_dict(self) -> dict:
        return {
            "alpha": list(self.alpha),
            "factors": [list(f) for f in self.factors],
            "reduced": list(self.reduced),
            "multiplicity": self.multiplicity,
            "section": self.section,
            "count": self.count,
            "partners": [list(p) for p in self.partners],
            "complete": self.complete,
            "flagged": self.flagged,
        }


@dataclass
class UniquenessReport:
    records: List[UniquenessRecord] = field(default_factory=list)

    def section(self, name: str) -> List[UniquenessRecord]:
        return [r for r in self.records if r.section == name]

    @property
    def flagged(self) -> List[UniquenessRecord]:
        return [r for r in self.records if r.flagged]

    def find(self, alpha: Composition, reduced: Tuple[int, int]) -> Optional[UniquenessRecord]:
        for record in self.records:
            if record.alpha.same_as(alpha) and record.reduced == reduced:
                return record
        return None

    def to_records(self) -> List[dict]:
        return [r.to_dict() for r in self.records]


def _group_factors(alpha: Composition) -> Dict[Tuple[int, int], List[Tuple[int, int]]]:
    groups: Dict[Tuple[int, int], List[Tuple[int, int]]] = OrderedDict()
    for factor in hook_factors_all(alpha):
        groups.setdefault(factor.reduced(), []).append(factor.as_pair())
    return groups


def _section(factors: List[Tuple[int, int]]) -> str:
    if len(factors) > 1:
        return MULTIPLE
    m, n = factors[0]
    return COPRIME if gcd(m, n) == 1 else NON_COPRIME


def uniqueness_scan(
    corpus: Iterable[Composition],
    max_N: Optional[int] = None,
    bounds: Optional[SearchBounds] = None,
    num_workers: int = 0,
    print_freq: int = 50,
) -> UniquenessReport:
    report = UniquenessReport()
    corpus = list(corpus)
    progress = ProgressLogger()
    base = bounds or SearchBounds()

    for alpha in progress.log_every(corpus, print_freq, header="uniqueness"):
        alpha = alpha.trimmed()
        for reduced, factors in _group_factors(alpha).items():
            n_max = None if max_N is None else max(min(max_N, alpha.length + alpha.weight), alpha.length)
            search = enumerate_partners(
                alpha,
                *reduced,
                bounds=SearchBounds(n_max, base.mode, base.factorial_cap, base.naive_cap),
                num_workers=num_workers,
            )
            record = UniquenessRecord(alpha, factors, reduced, _section(factors), search.partners, search.complete)
            if record.flagged:
                logger.warning(
                    f"uniqueness witness: α={format_composition(alpha)} factor {factors[0]} "
                    f"has {record.count} partners {[format_composition(p) for p in record.partners]}"
                )
            report.records.append(record)
            progress.update(partners=record.count, flagged=int(record.flagged))

    logger.info(f"uniqueness scan: {len(report.records)} records, {len(report.flagged)} flagged")
    return report


@dataclass
class NegativeExistenceRecord:
    alpha: Composition
    beta: Composition
    m: int
    n: int

    def to_dict(self) -> dict:
        return {"alpha": list(self.alpha), "beta": list(self.beta), "m": self.m, "n": self.n}


@dataclass
class NegativeExistenceReport:
    checked: int = 0
    parallel: int = 0
    violations: List[NegativeExistenceRecord] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_records(self) -> List[dict]:
        summary = {"checked": self.checked, "parallel": self.parallel, "violations": len(self.violations)}
        return [v.to_dict() for v in self.violations] + [summary]


def parallel_factor(alpha: Composition, beta: Composition) -> Optional[Tuple[int, int]]:
    """(m, n) with n > 0 and (r(β,i) − r(α,i))·n = m·(α_i − β_i) for all i, if such exist."""
    ra, rb = rank_vector(alpha), rank_vector(beta)
    diffs = [a - b for a, b in zip(alpha, beta)]
    rank_diffs = [y - x for x, y in zip(ra, rb)]
    pivot = next((i for i, d in enumerate(diffs) if d != 0), None)
    if pivot is None:
        return None
    m, n = rank_diffs[pivot], diffs[pivot]
    if n < 0:
        m, n = -m, -n
    g = gcd(m, n)
    m, n = m // g, n // g
    if all(e * n == m * d for e, d in zip(rank_diffs, diffs)):
        return (m, n)
    return None


def negative_existence_scan(corpus: Iterable[Composition], print_freq: int = 50) -> NegativeExistenceReport:
    report = NegativeExistenceReport()
    corpus = list(corpus)
    progress = ProgressLogger()

    for alpha in progress.log_every(corpus, print_freq, header="negative"):
        N = alpha.length + alpha.weight
        alpha = alpha.padded(N)
        before = len(report.violations)
        for beta in bounded_compositions(alpha.weight, N):
            if not triangle_greater(alpha, beta):
                continue
            report.checked += 1
            factor = parallel_factor(alpha, beta)
            if factor is None:
                continue
            report.parallel += 1
            m, n = factor
            if m < 0:
                logger.warning(f"negative critical pair: {alpha} ⊳ {beta} with m={m}, n={n}")
                report.violations.append(NegativeExistenceRecord(alpha.trimmed(), beta.trimmed(), m, n))
        progress.update(violations=len(report.violations) - before)

    logger.info(
        f"negative existence scan: {report.checked} pairs, {report.parallel} parallel, "
        f"{len(report.violations)} violations"
    )
    return report
