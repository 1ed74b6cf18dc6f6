"""
Transitive closure of the construction.

If (α,β) and (β,γ) are (−n/m)-critical then so is (α,γ), so repeatedly
constructing partners at every node whose hook factor is proportional to mκ+n
yields further partners of α.
"""

from dataclasses import dataclass, field
from typing import Dict, List, Tuple

from loguru import logger

from ..combinatorics import Composition, Node, format_composition, reduce_pair
from .construct import construct_by_factor

__all__ = ["ClosureStep", "ClosureResult", "closure"]


@dataclass(frozen=True)
class ClosureStep:
    depth: int
    source: Composition
    node: Node
    m: int
    n: int
    beta: Composition

    def to_dict(self) -> dict:
        return {
            "depth": self.depth,
            "source": list(self.source),
            "node": list(self.node),
            "factor": [self.m, self.n],
            "beta": list(self.beta),
        }


@dataclass
class ClosureResult:
    alpha: Composition
    m: int
    n: int
    max_depth: int
    partners: List[Composition] = field(default_factory=list)
    steps: List[ClosureStep] = field(default_factory=list)

    def __contains__(self, beta: Composition) -> bool:
        return any(p.same_as(beta) for p in self.partners)

    def __len__(self) -> int:
        return len(self.partners)

    def at_depth(self, depth: int) -> List[Composition]:
        seen: Dict[Tuple[int, ...], Composition] = {}
        for step in self.steps:
            if step.depth == depth:
                seen.setdefault(step.beta.sort_key(), step.beta)
        return [seen[key] for key in sorted(seen)]

    def to_dict(self) -> dict:
        return {
            "alpha": list(self.alpha),
            "factor": [self.m, self.n],
            "max_depth": self.max_depth,
            "partners": [list(p) for p in self.partners],
            "steps": [s.to_dict() for s in self.steps],
        }


def closure(alpha: Composition, m: int, n: int, max_depth: int) -> ClosureResult:
    """Breadth-first closure; partners are trimmed and sorted, each listed once."""
    m, n = reduce_pair(m, n)
    result = ClosureResult(alpha.trimmed(), m, n, max_depth)
    found = {alpha.sort_key(): alpha.trimmed()}
    frontier = [alpha.trimmed()]

    for depth in range(1, max_depth + 1):
        next_frontier = []
        for source in frontier:
            for built in construct_by_factor(source, m, n):
                beta = built.beta.trimmed()
                step_m, step_n = built.factor.as_pair()
                result.steps.append(ClosureStep(depth, source, built.node, step_m, step_n, beta))
                if beta.sort_key() in found:
                    continue
                found[beta.sort_key()] = beta
                next_frontier.append(beta)
        logger.debug(f"closure of {format_composition(alpha)} depth {depth}: {len(next_frontier)} new partners")
        if not next_frontier:
            break
        frontier = sorted(next_frontier, key=Composition.sort_key)

    del found[alpha.sort_key()]
    result.partners = [found[key] for key in sorted(found)]
    return result
