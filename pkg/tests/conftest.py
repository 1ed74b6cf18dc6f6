import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(os.path.abspath(__file__)), ".."))

import pytest
from hypothesis import assume, settings
from hypothesis import strategies as st

from src.combinatorics import Composition, compositions_up_to, iter_nodes

settings.register_profile("hookpairs", max_examples=60, deadline=None)
settings.load_profile("hookpairs")


@st.composite
def composition_strategy(draw, max_length=6, max_part=5, max_weight=None, min_weight=0):
    parts = draw(st.lists(st.integers(min_value=0, max_value=max_part), min_size=1, max_size=max_length))
    alpha = Composition(tuple(parts))
    if max_weight is not None:
        assume(alpha.weight <= max_weight)
    assume(alpha.weight >= min_weight)
    return alpha


@st.composite
def node_strategy(draw, max_length=6, max_part=5, max_weight=None):
    """A nonzero composition together with one of its nodes."""
    alpha = draw(composition_strategy(max_length, max_part, max_weight, min_weight=1))
    node = draw(st.sampled_from(list(iter_nodes(alpha))))
    return alpha, node


@st.composite
def weighted_composition_strategy(draw, max_weight=12, max_length=6):
    """Weight 1..max_weight cut into at most max_length parts, drawn without rejection."""
    length = draw(st.integers(min_value=1, max_value=max_length))
    weight = draw(st.integers(min_value=1, max_value=max_weight))
    cut = st.integers(min_value=0, max_value=weight)
    cuts = sorted(draw(st.lists(cut, min_size=length - 1, max_size=length - 1)))
    bounds = [0] + cuts + [weight]
    return Composition(tuple(b - a for a, b in zip(bounds, bounds[1:]))).trimmed()


@pytest.fixture(scope="session")
def small_corpus():
    return list(compositions_up_to(4, 3))


@pytest.fixture(scope="session")
def nine_row_alpha():
    return Composition.of(9, 8, 8, 7, 4, 3, 3, 2, 2)


@pytest.fixture(scope="session")
def nine_row_beta():
    return Composition.of(0, 2, 2, 1, 7, 6, 6, 5, 5, 3, 3, 3, 3)
