"""
Construction of a (−n/m)-critical partner β from a hook-length factor of α.

Given a node (i,j) with hook-length mκ+n, let l = r(α,i) − 1 and work in
w-order shifted by l.  The ξ-sequence

    ξ_{mk+i} = α̃_{w(l+i)} − nk,   1 <= i <= m, k >= 0

is strictly decreasing, and T is the first s >= 1 with α̃_{w(l+m+s)} > ξ_{m+s+1}.
With T = mk + t (1 <= t <= m), β moves (k+1)n out of the first t rows of the
block, kn out of the other m−t rows, and n into each of the next T rows.
"""

from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from loguru import logger

from ..combinatorics import (
    Composition,
    DeformedValue,
    HookFactor,
    Node,
    hook_factor,
    iter_nodes,
    leg_length,
    rank_vector,
    sort_info,
)

__all__ = [
    "AlgorithmTrace",
    "construct_beta",
    "construct_by_factor",
    "FactorConstruction",
    "chain",
    "xi_value",
    "xi_gap",
]


@dataclass(frozen=True)
class AlgorithmTrace:
    """Everything one run of the construction decided, enough to replay it."""

    alpha: Composition
    node: Node
    l: int
    m: int
    n: int
    N: int
    w: Tuple[int, ...]
    xi: Tuple[DeformedValue, ...]
    T: int
    t: int
    k: int
    T0: int

    def row(self, position: int) -> int:
        """w(l + position), the row at a block-relative position."""
        return self.w[self.l + position - 1]

    def expected_beta_ranks(self) -> Tuple[int, ...]:
        """r(β,·) forced by the construction, indexed by row."""
        l, m, T, t, k = self.l, self.m, self.T, self.t, self.k
        ranks = {}
        for position in range(1, self.N + 1):
            ranks[self.w[position - 1]] = position
        for s in range(1, T + 1):
            ranks[self.row(m + s)] = l + s
        for i in range(1, t + 1):
            ranks[self.row(i)] = l + m * (k + 1) + i
        for i in range(1, m - t + 1):
            ranks[self.row(t + i)] = l + m * k + t + i
        return tuple(ranks[row] for row in range(1, self.N + 1))

    def expected_quotients(self) -> Tuple[int, ...]:
        """(α_i − β_i)/n forced by the construction, indexed by row."""
        quotients = [0] * self.N
        for i in range(1, self.m + 1):
            quotients[self.row(i) - 1] = self.k + 1 if i <= self.t else self.k
        for s in range(1, self.T + 1):
            quotients[self.row(self.m + s) - 1] = -1
        return tuple(quotients)

    def length_bound(self) -> int:
        return max(self.alpha.length, self.l + self.m + self.T0)

    def to_dict(self) -> dict:
        return {
            "alpha": list(self.alpha),
            "node": list(self.node),
            "l": self.l,
            "m": self.m,
            "n": self.n,
            "N": self.N,
            "T": self.T,
            "t": self.t,
            "k": self.k,
            "T0": self.T0,
            "w": list(self.w),
            "xi": [list(v.to_pair()) for v in self.xi],
        }


def xi_value(alpha: Composition, w: Tuple[int, ...], l: int, m: int, n: int, index: int) -> DeformedValue:
    """ξ_index for the block of m rows starting after the top l."""
    k, i = divmod(index - 1, m)
    row = w[l + i]
    return DeformedValue(alpha[row] - n * k, row)


def xi_gap(alpha: Composition, w: Tuple[int, ...], l: int, m: int, n: int, s: int) -> int:
    """Sign of α̃_{w(l+m+s)} − ξ_{m+s+1}; never 0 for s >= 1."""
    row = w[l + m + s - 1]
    lhs = DeformedValue(alpha[row], row)
    rhs = xi_value(alpha, w, l, m, n, m + s + 1)
    return (lhs > rhs) - (lhs < rhs)


def _prepare(alpha: Composition, node: Node, n_ambient: Optional[int]):
    node = Node(*node).validate(alpha)
    N = max(alpha.length + alpha.weight, alpha.N, n_ambient or 0)
    alpha = alpha.padded(N)
    i, j = node
    n = alpha[i] + 1 - j
    m = leg_length(alpha, node) + 1
    l = rank_vector(alpha)[i - 1] - 1
    w = sort_info(alpha).w
    return alpha, node, N, n, m, l, w


def construct_beta(
    alpha: Composition, node: Node, n_ambient: Optional[int] = None
) -> Tuple[Composition, AlgorithmTrace]:
    """
    Build β at `node` of α; (α, β) is (−n/m)-critical with mκ+n = h(α,κ+1;node).

    The ambient length is ℓ(α)+|α| unless a larger one is requested; the
    returned β carries that ambient length.
    """
    alpha, node, N, n, m, l, w = _prepare(alpha, node, n_ambient)

    T0 = sum(alpha[w[l + i - 1]] // n for i in range(1, m + 1))

    T = None
    s = 1
    while l + m + s <= N:
        if xi_gap(alpha, w, l, m, n, s) > 0:
            T = s
            break
        s += 1
    if T is None:
        raise RuntimeError(f"ξ search for {alpha} at {node} ran past the ambient length {N}")

    t = (T - 1) % m + 1
    k = (T - t) // m
    xi = tuple(xi_value(alpha, w, l, m, n, index) for index in range(1, m + T + 2))

    parts = list(alpha.parts)
    for i in range(1, m + 1):
        parts[w[l + i - 1] - 1] -= (k + 1) * n if i <= t else k * n
    for s in range(1, T + 1):
        parts[w[l + m + s - 1] - 1] += n
    if min(parts) < 0:
        raise RuntimeError(f"construction at {node} of {alpha} produced negative parts {parts}")

    trace = AlgorithmTrace(alpha, node, l, m, n, N, w, xi, T, t, k, T0)
    logger.debug(f"construct {alpha} at {node}: m={m} n={n} l={l} T={T} t={t} k={k} T0={T0}")
    return Composition(tuple(parts)), trace


def chain(alpha: Composition, node: Node, n_ambient: Optional[int] = None) -> List[Composition]:
    """β^(0) = α, …, β^(T) = β; each step moves n from a block row to the next row below the block."""
    _, trace = construct_beta(alpha, node, n_ambient)
    parts = list(trace.alpha.parts)
    steps = [Composition(tuple(parts))]
    for s in range(1, trace.T + 1):
        parts[trace.row((s - 1) % trace.m + 1) - 1] -= trace.n
        parts[trace.row(trace.m + s) - 1] += trace.n
        steps.append(Composition(tuple(parts)))
    return steps


@dataclass
class FactorConstruction:
    node: Node
    factor: HookFactor
    beta: Composition
    trace: AlgorithmTrace = field(repr=False)


def construct_by_factor(alpha: Composition, m: int, n: int) -> List[FactorConstruction]:
    """Run the construction at every node whose hook factor is proportional to mκ+n."""
    if m <= 0 or n <= 0:
        raise ValueError(f"factor mκ+n needs positive m and n, got ({m}, {n})")
    results = []
    for node in iter_nodes(alpha):
        factor = hook_factor(alpha, node)
        if not factor.same_zero(m, n):
            continue
        beta, trace = construct_beta(alpha, node)
        results.append(FactorConstruction(node, factor, beta, trace))
    return results
