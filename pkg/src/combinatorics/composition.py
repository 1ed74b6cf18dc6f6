"""
Compositions, diagram nodes and the composition text format.

Indices follow the combinatorial convention: part i and row i are 1-based.
"""

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, Optional, Tuple

from ..core.errors import CompositionParseError, InvalidNodeError

__all__ = [
    "Composition",
    "Node",
    "parse_composition",
    "format_composition",
    "parse_pair",
]


@dataclass(frozen=True)
class Composition:
    """A finite sequence of nonnegative integers with an explicit ambient length N.

    Trailing zeros are significant for equality (`==` compares N and parts);
    `same_as` compares modulo trailing zeros.
    """

    parts: Tuple[int, ...]

    def __post_init__(self) -> None:
        parts = tuple(self.parts)
        for p in parts:
            if not isinstance(p, int) or isinstance(p, bool):
                raise TypeError(f"composition parts must be integers, got {p!r}")
            if p < 0:
                raise ValueError(f"composition parts must be nonnegative, got {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, *parts: int, n: Optional[int] = None) -> "Composition":
        alpha = cls(tuple(parts))
        return alpha if n is None else alpha.padded(n)

    @property
    def N(self) -> int:
        return len(self.parts)

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        for i in range(len(self.parts), 0, -1):
            if self.parts[i - 1] > 0:
                return i
        return 0

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, i: int) -> int:
        """1-based part access; indices beyond N read as zero."""
        if i < 1:
            raise IndexError(f"composition index {i} out of range")
        return self.parts[i - 1] if i <= len(self.parts) else 0

    def padded(self, n: int) -> "Composition":
        """Extend with trailing zeros to ambient length n; only zeros may be dropped."""
        if n < self.length:
            raise ValueError(f"cannot shrink {self.parts} below its length {self.length}")
        if n >= len(self.parts):
            return Composition(self.parts + (0,) * (n - len(self.parts)))
        return Composition(self.parts[:n])

    def trimmed(self) -> "Composition":
        return Composition(self.parts[: self.length])

    def same_as(self, other: "Composition") -> bool:
        return self.trimmed() == other.trimmed()

    def sort_key(self) -> Tuple[int, ...]:
        return self.trimmed().parts

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self.parts) + ")"


def common_length(*compositions: Composition) -> int:
    return max((c.N for c in compositions), default=0)


def pad_common(*compositions: Composition) -> Tuple[Composition, ...]:
    n = common_length(*compositions)
    return tuple(c.padded(n) for c in compositions)


class Node(NamedTuple):
    """A diagram node (row i, column j)."""

    row: int
    col: int

    def validate(self, alpha: Composition) -> "Node":
        if not (1 <= self.row <= alpha.length and 1 <= self.col <= alpha[self.row]):
            raise InvalidNodeError(self, alpha)
        return self

    def __str__(self) -> str:
        return f"({self.row},{self.col})"


_INT = re.compile(r"\s*(\d+)\s*")


def _parse_int(text: str, start: int, end: int, what: str) -> int:
    chunk = text[start:end]
    match = _INT.fullmatch(chunk)
    if match is None:
        offset = len(chunk) - len(chunk.lstrip())
        raise CompositionParseError(text, start + offset, f"expected a nonnegative integer {what}")
    return int(match.group(1))


def parse_composition(text: str) -> Composition:
    """
    Grammar: `p1,p2,...,pk` with optional `@N` ambient length suffix.

        "2,7,8,2,0,0" -> (2,7,8,2,0,0)
        "3,0@5"       -> (3,0,0,0,0)
    """
    body, at, suffix = text.partition("@")
    parts = []
    start = 0
    for piece in body.split(","):
        end = start + len(piece)
        parts.append(_parse_int(text, start, end, "part"))
        start = end + 1

    alpha = Composition(tuple(parts))
    if not at:
        return alpha

    suffix_start = len(body) + 1
    n = _parse_int(text, suffix_start, len(text), "ambient length")
    if n < len(parts):
        raise CompositionParseError(
            text, suffix_start, f"ambient length {n} is shorter than the {len(parts)} given parts"
        )
    return alpha.padded(n)


def format_composition(alpha: Composition, trim: bool = False) -> str:
    """Inverse of parse_composition; `trim` drops trailing zeros for display."""
    parts = alpha.trimmed().parts if trim else alpha.parts
    return ",".join(str(p) for p in parts)


def parse_pair(text: str, what: str = "pair") -> Tuple[int, int]:
    """Parse `a,b` into two integers (used for --node i,j and --factor m,n)."""
    pieces = text.split(",")
    if len(pieces) != 2:
        raise CompositionParseError(text, 0, f"expected a {what} of the form a,b")
    a = _parse_int(text, 0, len(pieces[0]), what)
    b = _parse_int(text, len(pieces[0]) + 1, len(text), what)
    return a, b


def iter_nodes(alpha: Composition) -> Iterable[Node]:
    for i in range(1, alpha.length + 1):
        for j in range(1, alpha[i] + 1):
            yield Node(i, j)
