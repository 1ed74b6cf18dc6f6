"""
Exact combinatorics of compositions: ranks, orders, υ-deformation and hook-lengths.
"""

from .affine import KAPPA_PLUS_ONE, KappaAffine, reduce_pair
from .composition import (
    Composition,
    Node,
    common_length,
    format_composition,
    iter_nodes,
    pad_common,
    parse_composition,
    parse_pair,
)
from .deformed import DeformedValue, deformed, deformed_rank_vector, deformed_values
from .enumerate import bounded_compositions, compositions, compositions_up_to, partitions
from .hooks import (
    HookFactor,
    arm_nodes,
    factor_multiplicity,
    hook_factor,
    hook_factors_all,
    hook_product,
    leg_length,
    leg_length_deformed,
    leg_nodes,
)
from .order import (
    SortInfo,
    dominates,
    parallel_ratio,
    rank_vector,
    sort_info,
    triangle_greater,
    triangle_less,
)
