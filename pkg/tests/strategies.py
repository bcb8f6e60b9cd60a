"""Hypothesis strategies shared by the test modules."""

from __future__ import annotations

from fractions import Fraction

import hypothesis.strategies as st

from hooklab.diagram import Partition
from hooklab.poly import WeightAssignment


@st.composite
def partitions_st(draw, max_size: int = 10, min_size: int = 1) -> Partition:
    n = draw(st.integers(min_size, max_size))
    parts = []
    left = n
    while left:
        cap = min(left, parts[-1]) if parts else left
        p = draw(st.integers(1, cap))
        parts.append(p)
        left -= p
    return Partition(tuple(parts))


positive_rationals = st.builds(Fraction, st.integers(1, 50), st.integers(1, 50))


@st.composite
def shape_and_weights(draw, max_size: int = 9):
    lam = draw(partitions_st(max_size=max_size))
    x = draw(st.lists(positive_rationals, min_size=lam.num_rows, max_size=lam.num_rows))
    y = draw(st.lists(positive_rationals, min_size=lam.num_cols, max_size=lam.num_cols))
    return lam, WeightAssignment(tuple(x), tuple(y))
