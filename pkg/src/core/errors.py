"""
Exceptions raised by hookpairs.

Domain errors derive from HookPairsError and map to exit code 1 in the CLI;
CompositionParseError maps to exit code 2.
"""

__all__ = [
    "HookPairsError",
    "InvalidNodeError",
    "InfeasibleBoundsError",
    "UncertifiedPairError",
    "FactorizationError",
    "CompositionParseError",
]


class HookPairsError(ValueError):
    pass


class InvalidNodeError(HookPairsError):
    def __init__(self, node, alpha) -> None:
        super().__init__(f"invalid node {tuple(node)} for composition {tuple(alpha)}")
        self.node = node
        self.alpha = alpha


class InfeasibleBoundsError(HookPairsError):
    pass


class UncertifiedPairError(HookPairsError):
    pass


class FactorizationError(HookPairsError):
    pass


class CompositionParseError(ValueError):
    """Malformed composition text; `position` is a 0-based character offset."""

    def __init__(self, text: str, position: int, reason: str) -> None:
        super().__init__(f"cannot parse composition {text!r} at position {position}: {reason}")
        self.text = text
        self.position = position
        self.reason = reason
