"""
Text rendering of modified Ferrers diagrams and hook-factor tables.
"""

from typing import List, Optional

from ..combinatorics import (
    KAPPA_PLUS_ONE,
    Composition,
    KappaAffine,
    Node,
    arm_nodes,
    hook_factors_all,
    leg_nodes,
)

__all__ = ["render_diagram", "render_factor_table"]


def render_diagram(alpha: Composition, node: Optional[Node] = None) -> str:
    """
    Row 1 on top, columns 0..α_i.  With a node selected it is drawn as `X`,
    its arm as `a` and its leg as `l`; every other cell is `o`.

        >>> print(render_diagram(Composition.of(1, 0, 2), Node(3, 1)))
        1 | l o
        2 | l
        3 | o X a
    """
    marks = {}
    if node is not None:
        node = Node(*node).validate(alpha)
        marks.update({cell: "a" for cell in arm_nodes(alpha, node)})
        marks.update({cell: "l" for cell in leg_nodes(alpha, node)})
        marks[tuple(node)] = "X"

    width = len(str(max(alpha.length, 1)))
    lines = []
    for i in range(1, alpha.length + 1):
        cells = " ".join(marks.get((i, j), "o") for j in range(alpha[i] + 1))
        lines.append(f"{i:>{width}} | {cells}")
    return "\n".join(lines)


def render_factor_table(alpha: Composition, t: KappaAffine = KAPPA_PLUS_ONE) -> str:
    rows: List[str] = ["node      factor        reduced"]
    for factor in hook_factors_all(alpha, t):
        m, n = factor.reduced()
        rows.append(f"{str(factor.node):<9} {str(factor):<13} {KappaAffine(m, n)}")
    return "\n".join(rows)
