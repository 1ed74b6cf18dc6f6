"""
Deterministic generators for compositions and partitions.
"""

from typing import Iterator, List, Optional

from .composition import Composition

__all__ = ["compositions", "compositions_up_to", "partitions", "bounded_compositions"]


def bounded_compositions(weight: int, n: int, max_part: Optional[int] = None) -> Iterator[Composition]:
    """All compositions of `weight` with exactly n slots (zeros allowed), parts <= max_part."""
    cap = weight if max_part is None else max_part
    parts: List[int] = [0] * n

    def fill(index: int, remaining: int) -> Iterator[Composition]:
        if index == n - 1:
            if remaining <= cap:
                parts[index] = remaining
                yield Composition(tuple(parts))
            return
        for p in range(min(cap, remaining), -1, -1):
            parts[index] = p
            yield from fill(index + 1, remaining - p)

    if n == 0:
        if weight == 0:
            yield Composition(())
        return
    yield from fill(0, weight)


def compositions(weight: int, length: int) -> Iterator[Composition]:
    """Compositions of `weight` with ambient length `length`."""
    return bounded_compositions(weight, length)


def compositions_up_to(max_weight: int, max_length: int) -> Iterator[Composition]:
    """Every composition with |α| <= max_weight and ℓ(α) <= max_length, each once, trimmed."""
    for weight in range(max_weight + 1):
        for alpha in bounded_compositions(weight, max_length):
            yield alpha.trimmed()


def partitions(weight: int, max_length: Optional[int] = None, max_part: Optional[int] = None) -> Iterator[Composition]:
    """Partitions of `weight` in reverse lexicographic order."""
    max_length = weight if max_length is None else max_length
    max_part = weight if max_part is None else max_part
    if weight == 0:
        yield Composition(())
        return
    if max_length == 0:
        return
    for first in range(min(weight, max_part), 0, -1):
        for rest in partitions(weight - first, max_length - 1, first):
            yield Composition((first,) + rest.parts)
