from fractions import Fraction
from itertools import product
from math import factorial, prod

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.combinatorics import (
    Composition,
    DeformedValue,
    KappaAffine,
    Node,
    arm_nodes,
    bounded_compositions,
    deformed,
    deformed_rank_vector,
    deformed_values,
    dominates,
    factor_multiplicity,
    format_composition,
    hook_factor,
    hook_factors_all,
    hook_product,
    iter_nodes,
    leg_length,
    leg_length_deformed,
    leg_nodes,
    parallel_ratio,
    parse_composition,
    partitions,
    rank_vector,
    sort_info,
    triangle_greater,
)
from src.core import CompositionParseError, InvalidNodeError

from .conftest import composition_strategy, node_strategy

C = Composition.of


@pytest.mark.parametrize(
    "alpha, ranks",
    [
        (C(2, 7, 8, 2, 0, 0), (3, 2, 1, 4, 5, 6)),
        (C(5, 1, 2, 5, 3, 3), (1, 6, 5, 2, 3, 4)),
        (C(4, 4, 4), (1, 2, 3)),
        (C(3, 0, 2, 0, 0, 4, 3, 3, 3, 3), (2, 8, 7, 9, 10, 1, 3, 4, 5, 6)),
        (C(0, 2, 2, 1, 7, 6, 6, 5, 5, 3, 3, 3, 3), (13, 10, 11, 12, 1, 2, 3, 4, 5, 6, 7, 8, 9)),
    ],
)
def test_rank_vector(alpha, ranks):
    assert rank_vector(alpha) == ranks


def test_sort_info():
    assert sort_info(C(0, 3, 5, 6, 6, 1)).w == (4, 5, 3, 2, 6, 1)
    info = sort_info(C(2, 7, 8, 2, 0, 0))
    assert info.w == (3, 2, 1, 4, 5, 6)
    assert info.alpha_plus == C(8, 7, 2, 2, 0, 0)
    assert info.inverse() == rank_vector(C(2, 7, 8, 2, 0, 0))


@given(st.lists(st.integers(min_value=0, max_value=5), min_size=1, max_size=7).map(sorted))
def test_sort_of_partition_is_identity(parts):
    alpha = Composition(tuple(reversed(parts)))
    assert sort_info(alpha).w == tuple(range(1, alpha.N + 1))


def test_dominates():
    assert dominates(C(3, 0), C(2, 1))
    assert not dominates(C(3, 0), C(3, 0))
    assert not dominates(C(3, 3, 0), C(4, 1, 1))
    assert not dominates(C(4, 1, 1), C(3, 3, 0))


def test_triangle_greater(nine_row_alpha, nine_row_beta):
    assert triangle_greater(nine_row_alpha, nine_row_beta)
    assert triangle_greater(C(1, 0), C(0, 1))
    assert not triangle_greater(C(2, 1), C(3, 0))
    assert not triangle_greater(C(2, 1), C(1, 1))


@pytest.mark.parametrize("weight", range(6))
def test_triangle_greater_is_strict_partial_order(weight):
    corpus = list(bounded_compositions(weight, 4))
    index = range(len(corpus))
    greater = [[triangle_greater(a, b) for b in corpus] for a in corpus]
    for i in index:
        assert not greater[i][i]
    for i, j in product(index, index):
        assert not (greater[i][j] and greater[j][i])
    for i, j, k in product(index, index, index):
        if greater[i][j] and greater[j][k]:
            assert greater[i][k]


def test_deformed_values():
    alpha = C(2, 6, 5, 2)
    assert deformed(alpha, 4) == DeformedValue(2, 4)
    assert deformed(alpha, 1) == DeformedValue(2, 1)
    assert deformed(alpha, 1) > deformed(alpha, 4)
    assert deformed(C(0), 1) == DeformedValue(0, 1)
    in_w_order = [deformed(alpha, i) for i in sort_info(alpha).w]
    assert [str(v) for v in in_w_order] == ["6-2υ", "5-3υ", "2-1υ", "2-4υ"]
    with pytest.raises(IndexError):
        deformed(alpha, 5)


@settings(max_examples=1000)
@given(composition_strategy(max_length=12))
def test_deformed_ranks_agree(alpha):
    assert sorted(rank_vector(alpha)) == list(range(1, alpha.N + 1))
    assert deformed_rank_vector(alpha) == rank_vector(alpha)
    values = deformed_values(alpha)
    for i, j in product(range(alpha.N), range(alpha.N)):
        if i != j:
            assert values[i] != values[j]
            assert not values[i].is_integral_difference(values[j])


@given(composition_strategy(max_length=6), st.integers(min_value=1, max_value=4))
def test_trailing_zeros_keep_ranks(alpha, extra):
    padded = rank_vector(alpha.padded(alpha.N + extra))
    assert padded[: alpha.N] == rank_vector(alpha)
    assert padded[alpha.N :] == tuple(range(alpha.N + 1, alpha.N + extra + 1))


@pytest.mark.parametrize(
    "alpha, node, legs",
    [
        (C(1, 0, 5, 3, 4, 2), (4, 1), 3),
        (C(1, 0, 5, 3, 4, 2), (3, 2), 4),
        (C(9, 8, 8, 5, 4, 4), (2, 5), 2),
    ],
)
def test_leg_length(alpha, node, legs):
    assert leg_length(alpha, node) == legs
    assert leg_length_deformed(alpha, node) == legs


@given(node_strategy())
def test_leg_length_formulas_agree(case):
    alpha, node = case
    legs = leg_length(alpha, node)
    assert legs == leg_length_deformed(alpha, node) == len(leg_nodes(alpha, node))
    assert len(arm_nodes(alpha, node)) == alpha[node[0]] - node[1]


def test_leg_length_formulas_agree_exhaustive():
    checked = 0
    for weight in range(1, 8):
        for alpha in bounded_compositions(weight, 6):
            for node in iter_nodes(alpha):
                assert leg_length(alpha, node) == leg_length_deformed(alpha, node), (alpha, node)
                checked += 1
    assert checked >= 10000


def test_invalid_node():
    with pytest.raises(InvalidNodeError):
        leg_length(C(1, 0), (1, 9))
    with pytest.raises(InvalidNodeError):
        hook_factor(C(1, 0), (2, 1))


@pytest.mark.parametrize(
    "alpha, node, expected",
    [
        (C(0, 3, 5, 6, 6, 1), (4, 4), (4, 3)),
        (C(2, 6, 5, 2), (2, 4), (2, 3)),
        (C(9, 8, 8, 7, 4, 3, 3, 2, 2), (1, 7), (4, 3)),
    ],
)
def test_hook_factor(alpha, node, expected):
    factor = hook_factor(alpha, node)
    assert factor.as_pair() == expected
    assert factor.node == Node(*node)


def test_hook_factor_general_t():
    factor = hook_factor(C(2, 6, 5, 2), (2, 4), KappaAffine(0, 1))
    assert factor.affine == KappaAffine(1, 3)
    assert factor.reduced() == (1, 3)


def test_hook_factors_all():
    assert sorted(f.as_pair() for f in hook_factors_all(C(2))) == [(1, 1), (1, 2)]
    assert hook_factors_all(C(0, 0)) == []
    assert hook_product(C(0, 0)) == (Fraction(1),)

    by_node = {f.node: f.as_pair() for f in hook_factors_all(C(9, 7, 6, 5, 2))}
    assert by_node[(1, 7)] == by_node[(3, 4)] == (2, 3)
    assert by_node[(1, 4)] == by_node[(2, 2)] == (4, 6)


@given(composition_strategy(max_length=5, max_part=4))
def test_hook_product_counts(alpha):
    assert len(hook_factors_all(alpha)) == alpha.weight
    assert hook_product(alpha)[0] == prod(factorial(a) for a in alpha)


def test_factor_multiplicity():
    assert factor_multiplicity(C(9, 7, 6, 5, 2), 2, 3) == 4
    assert factor_multiplicity(C(6, 3, 1, 1), 2, 3) == 1
    assert factor_multiplicity(C(2), 5, 7) == 0
    with pytest.raises(ValueError):
        factor_multiplicity(C(2), 0, 1)


def test_hook_factor_zero_and_integrality():
    factor = hook_factor(C(9, 7, 6, 5, 2), (1, 4))
    assert factor.as_pair() == (4, 6)
    assert factor.same_zero(2, 3) and factor.same_zero(4, 6)
    assert not factor.same_zero(3, 2)
    assert factor.affine.is_integral()

    halved = hook_factor(C(2), (1, 1), KappaAffine(Fraction(1, 2), 0))
    assert not halved.affine.is_integral()
    with pytest.raises(ValueError):
        halved.as_pair()


def test_parallel_ratio():
    assert parallel_ratio(C(2, 7, 8, 2, 0, 0), C(5, 1, 2, 5, 3, 3)) == Fraction(-3, 2)
    assert parallel_ratio(C(3, 0), C(2, 1)) is None


def test_partitions_and_nodes():
    assert [p.parts for p in partitions(4)] == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert list(iter_nodes(C(1, 0, 2))) == [(1, 1), (3, 1), (3, 2)]


@pytest.mark.parametrize(
    "text, expected",
    [
        ("2,7,8,2,0,0", C(2, 7, 8, 2, 0, 0)),
        ("3,0@5", C(3, 0, 0, 0, 0)),
        (" 1, 2 ", C(1, 2)),
    ],
)
def test_parse_composition(text, expected):
    alpha = parse_composition(text)
    assert alpha == expected
    assert alpha.N == expected.N


@pytest.mark.parametrize("text, position", [("2,-1", 2), ("1,x", 2), ("", 0), ("1,2@1", 4), ("1.5", 0)])
def test_parse_composition_errors(text, position):
    with pytest.raises(CompositionParseError) as info:
        parse_composition(text)
    assert info.value.position == position


@given(composition_strategy(max_length=8, max_part=12))
def test_format_roundtrip(alpha):
    assert parse_composition(format_composition(alpha)) == alpha
    if alpha.length:
        assert parse_composition(format_composition(alpha, trim=True)).same_as(alpha)


def test_composition_basics():
    alpha = C(3, 0, 1, 0, 0)
    assert (alpha.N, alpha.weight, alpha.length) == (5, 4, 3)
    assert alpha[7] == 0
    assert alpha.trimmed() == C(3, 0, 1)
    assert alpha.same_as(C(3, 0, 1))
    assert alpha != C(3, 0, 1)
    with pytest.raises(ValueError):
        alpha.padded(2)
    with pytest.raises(ValueError):
        Composition((1, -1))


@pytest.mark.parametrize(
    "t, coefficients",
    [
        (KappaAffine(1, 1), (2, 3, 1)),
        (KappaAffine(0, 1), (2,)),
        (KappaAffine(1, 0), (0, 1, 1)),
    ],
)
def test_hook_product_for_t(t, coefficients):
    assert hook_product(C(2), t) == tuple(Fraction(c) for c in coefficients)


def test_leg_and_arm_cells():
    alpha = C(1, 0, 5, 3, 4, 2)
    assert sorted(leg_nodes(alpha, (4, 1))) == [(1, 0), (2, 0), (6, 1)]
    assert arm_nodes(alpha, (4, 1)) == [(4, 2), (4, 3)]
