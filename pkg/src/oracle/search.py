"""
Brute-force enumeration of all (−n/m)-critical partners of α.

Rank-permutation mode treats each permutation σ of 1..N_max as the rank
vector of β; then β_i = α_i + (n/m)(r(α,i) − σ_i) is forced.  Positions are
assigned depth-first with three prunes: σ_i ≡ r(α,i) (mod m/gcd(m,n)),
β_i >= 0, and for i < j already assigned, σ_i < σ_j exactly when β_i >= β_j.
A complete assignment passing these is a composition whose rank vector is σ.

Naive mode enumerates every composition of |α| with bounded parts and
filters it with the checker.  It is independent of the rank argument and is
kept as a second oracle for small N_max.
"""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from math import gcd
from typing import Iterator, List, Optional, Tuple

from loguru import logger

from ..combinatorics import Composition, bounded_compositions, rank_vector, triangle_greater
from ..critical import is_critical_pair
from .bounds import NAIVE_MODE, RANK_MODE, ResolvedBounds, SearchBounds

__all__ = ["PartnerSearch", "enumerate_partners", "rank_permutation_partners", "naive_partners"]


@dataclass
class PartnerSearch:
    alpha: Composition
    m: int
    n: int
    bounds: ResolvedBounds
    partners: List[Composition] = field(default_factory=list)

    @property
    def complete(self) -> bool:
        return self.bounds.complete

    def __contains__(self, beta: Composition) -> bool:
        return any(p.same_as(beta) for p in self.partners)

    def __iter__(self) -> Iterator[Composition]:
        return iter(self.partners)

    def __len__(self) -> int:
        return len(self.partners)

    def keys(self) -> List[Tuple[int, ...]]:
        return [p.sort_key() for p in self.partners]

    def to_dict(self) -> dict:
        return {
            "alpha": list(self.alpha),
            "factor": [self.m, self.n],
            "mode": self.bounds.mode,
            "n_max": self.bounds.n_max,
            "complete": self.complete,
            "partners": [list(p) for p in self.partners],
        }


def _fit(alpha: Composition, n_max: int) -> Composition:
    return alpha.padded(n_max)


def _rank_dfs(alpha: Composition, m: int, n: int, first: Optional[int] = None) -> List[Composition]:
    N = alpha.N
    ranks = rank_vector(alpha)
    modulus = m // gcd(m, n)
    sigma = [0] * N
    beta = [0] * N
    used = [False] * (N + 1)
    found: List[Composition] = []

    def consistent(i: int) -> bool:
        for j in range(i):
            if (sigma[j] < sigma[i]) != (beta[j] >= beta[i]):
                return False
        return True

    def place(i: int) -> None:
        if i == N:
            candidate = Composition(tuple(beta))
            if triangle_greater(alpha, candidate):
                found.append(candidate)
            return
        r = ranks[i]
        choices = [first] if (i == 0 and first is not None) else range(1, N + 1)
        for v in choices:
            if used[v] or (r - v) % modulus:
                continue
            part = alpha.parts[i] + n * (r - v) // m
            if part < 0:
                continue
            sigma[i], beta[i] = v, part
            if not consistent(i):
                continue
            used[v] = True
            place(i + 1)
            used[v] = False

    place(0)
    return found


def rank_permutation_partners(
    alpha: Composition, m: int, n: int, n_max: int, num_workers: int = 0
) -> List[Composition]:
    alpha = _fit(alpha, n_max)
    if num_workers > 1 and n_max > 1:
        firsts = list(range(1, n_max + 1))
        with ProcessPoolExecutor(max_workers=num_workers) as pool:
            chunks = pool.map(_rank_dfs, [alpha] * n_max, [m] * n_max, [n] * n_max, firsts)
            found = [beta for chunk in chunks for beta in chunk]
    else:
        found = _rank_dfs(alpha, m, n)
    return found


def naive_partners(alpha: Composition, m: int, n: int, n_max: int, extended: bool = False) -> List[Composition]:
    """Filter all compositions of |α| in N_max slots; |β_i − α_i| <= n·N_max/m bounds the parts."""
    alpha = _fit(alpha, n_max)
    if m == 0:
        max_part = alpha.weight
    else:
        max_part = max(alpha.parts, default=0) + -(-n * n_max // m)
    return [
        beta
        for beta in bounded_compositions(alpha.weight, n_max, max_part)
        if is_critical_pair(alpha, beta, m, n, extended=extended) is not None
    ]


def enumerate_partners(
    alpha: Composition,
    m: int,
    n: int,
    bounds: Optional[SearchBounds] = None,
    num_workers: int = 0,
    extended: bool = False,
) -> PartnerSearch:
    """All β with ℓ(β) <= N_max such that (α, β) is (−n/m)-critical, trimmed and sorted."""
    if n <= 0:
        raise ValueError(f"n must be positive, got {n}")
    if m < 0 or (m == 0 and not extended):
        raise ValueError(f"m must be positive (m = 0 needs the extended flag), got {m}")

    bounds = bounds or SearchBounds()
    if m == 0 and bounds.mode == RANK_MODE:
        # ranks are unchanged, so σ carries no information
        bounds = replace(bounds, mode=NAIVE_MODE)
    resolved = bounds.resolve(alpha)

    if resolved.mode == RANK_MODE:
        found = rank_permutation_partners(alpha, m, n, resolved.n_max, num_workers)
    else:
        found = naive_partners(alpha, m, n, resolved.n_max, extended)

    unique = {beta.sort_key(): beta.trimmed() for beta in found}
    search = PartnerSearch(alpha.trimmed(), m, n, resolved, [unique[k] for k in sorted(unique)])
    logger.debug(
        f"{resolved.mode} search for {alpha} with {m}κ+{n}, N_max={resolved.n_max}: {len(search)} partners"
    )
    return search
