import math
from fractions import Fraction

import hypothesis.strategies as st
import numpy as np
import pytest
from hypothesis import given, settings

from hooklab.diagram import Cell, Partition, corners, partitions_up_to, staircase
from hooklab.identities import brhl_summands
from hooklab.poly import WeightAssignment, random_weights
from hooklab.rng import RandomSource
from hooklab.syt import GuardError
from hooklab.walk import (
    CornerDistribution,
    ProjectionQuery,
    absorption_table,
    assembled_probability,
    block_sums,
    brute_force_projection,
    check_block_conservation,
    closed_form_distribution,
    closed_form_probability,
    exact_distribution,
    fixed_point_bounds,
    modified_closed_distribution,
    modified_closed_form,
    modified_formula,
    projection_probability,
    queries_for_corner,
    shard_sizes,
    simulate,
    well_formed_queries,
    z_scores,
)
from strategies import partitions_st, shape_and_weights

BIG = Partition((20, 20, 20, 20, 18, 18, 18, 11, 11, 11, 6, 6, 6, 6, 6, 2))


def P(*parts):
    return Partition(parts)


def path_enumeration(lam: Partition, w: WeightAssignment) -> dict[Cell, Fraction]:
    """Independent oracle: expand every walk path explicitly, no memoization."""
    norm = sum(w.x[c.row - 1] * w.y[c.col - 1] for c in lam.cells())
    out: dict[Cell, Fraction] = {c: Fraction(0) for c in corners(lam)}

    def go(cell: Cell, prob: Fraction) -> None:
        i, j = cell
        moves = [(Cell(k, j), w.x[k - 1]) for k in range(i + 1, lam.col(j) + 1)]
        moves += [(Cell(i, l), w.y[l - 1]) for l in range(j + 1, lam.row(i) + 1)]
        if not moves:
            out[cell] += prob
            return
        total = sum(m for _, m in moves)
        for nxt, m in moves:
            go(nxt, prob * m / total)

    for c in lam.cells():
        go(c, w.x[c.row - 1] * w.y[c.col - 1] / norm)
    return out


class TestExact:
    def test_21_unit(self):
        d = exact_distribution(P(2, 1), WeightAssignment.ones(P(2, 1)))
        assert d.as_dict() == {(1, 2): Fraction(1, 2), (2, 1): Fraction(1, 2)}
        assert closed_form_probability(P(2, 1), WeightAssignment.ones(P(2, 1)), (1, 2)) == Fraction(1, 2)

    @pytest.mark.parametrize("lam", [P(1), P(2, 2), P(3, 3, 3), P(5)])
    def test_single_corner(self, lam):
        w = random_weights(lam, RandomSource(1))
        assert exact_distribution(lam, w).mass == (1,)
        assert closed_form_distribution(lam, w).mass == (1,)

    def test_22_example(self):
        lam, w = P(2, 2), WeightAssignment((1, 2), (3, 1))
        assert exact_distribution(lam, w).mass == (closed_form_probability(lam, w, (2, 2)),) == (1,)

    def test_66532_random(self):
        rng = RandomSource(5)
        lam = P(6, 6, 5, 3, 2)
        for _ in range(5):
            w = random_weights(lam, rng)
            assert exact_distribution(lam, w) == closed_form_distribution(lam, w)

    @pytest.mark.parametrize("lam", list(partitions_up_to(6)), ids=str)
    def test_against_path_enumeration(self, lam):
        w = random_weights(lam, RandomSource(lam.size()))
        assert exact_distribution(lam, w).as_dict() == path_enumeration(lam, w)

    @given(shape_and_weights(max_size=12))
    def test_dp_matches_closed_form(self, data):
        lam, w = data
        d = exact_distribution(lam, w)
        assert sum(d.mass) == 1
        assert d == closed_form_distribution(lam, w)

    @given(partitions_st(max_size=12))
    def test_unit_weights_match_hook_ratios(self, lam):
        w = WeightAssignment.ones(lam)
        assert list(closed_form_distribution(lam, w).mass) == brhl_summands(lam)

    def test_table_rows_are_distributions(self):
        lam = P(4, 3, 1)
        w = random_weights(lam, RandomSource(9))
        for vec in absorption_table(lam, w).values():
            assert sum(vec) == 1


class TestModified:
    def test_staircase_is_ordinary(self):
        for d in range(1, 5):
            lam = staircase(d)
            w = random_weights(lam, RandomSource(d))
            for r, c in enumerate(corners(lam), 1):
                assert modified_closed_form(lam, w, r) == closed_form_probability(lam, w, c)
            assert exact_distribution(lam, w, modified=True) == exact_distribution(lam, w)

    def test_single_corner(self):
        assert modified_closed_form(P(2, 2), WeightAssignment.ones(P(2, 2)), 1) == 1

    def test_big_shape(self):
        w = WeightAssignment.ones(BIG)
        exact = exact_distribution(BIG, w, modified=True)
        assert exact == modified_closed_distribution(BIG, w)
        assert list(exact.mass) == [modified_formula(BIG, w, r) for r in range(1, 6)]
        X, Y = block_sums(BIG, w)
        assert X == [4, 3, 3, 5, 1] and Y == [2, 4, 5, 7, 2]

    @given(shape_and_weights(max_size=12))
    def test_dp_matches_block_formula(self, data):
        lam, w = data
        lhs, rhs = check_block_conservation(lam, w)
        assert lhs == rhs
        exact = exact_distribution(lam, w, modified=True)
        assert exact == modified_closed_distribution(lam, w)
        assert list(exact.mass) == [modified_formula(lam, w, r) for r in range(1, len(exact.mass) + 1)]

    def test_bad_index(self):
        with pytest.raises(ValueError):
            modified_closed_form(P(2, 1), WeightAssignment.ones(P(2, 1)), 3)


class TestProjection:
    def test_corner_start(self):
        lam = P(3, 2)
        w = random_weights(lam, RandomSource(0))
        q = ProjectionQuery.make([2], [2])
        assert projection_probability(lam, w, q) == 1 == brute_force_projection(lam, w, q)

    def test_one_step(self):
        lam, w = P(2, 1), WeightAssignment((2, 3), (5, 7))
        q = ProjectionQuery.make([1], [1, 2])
        assert projection_probability(lam, w, q) == Fraction(7, 3 + 7)

    def test_22_two_interleavings(self):
        lam, w = P(2, 2), WeightAssignment((2, 3), (5, 7))
        q = ProjectionQuery.make([1, 2], [1, 2])
        first = Fraction(3, 3 + 7)  # down, then forced right
        second = Fraction(7, 3 + 7)  # right, then forced down
        assert brute_force_projection(lam, w, q) == first + second == 1
        assert projection_probability(lam, w, q) == 1

    def test_malformed(self):
        lam, w = P(2, 1), WeightAssignment.ones(P(2, 1))
        with pytest.raises(ValueError):
            projection_probability(lam, w, ProjectionQuery.make([1, 2], [1, 2]))
        with pytest.raises(ValueError):
            projection_probability(lam, w, ProjectionQuery(Cell(2, 1), (1, 2), (1,)))

    def test_guard(self):
        lam = staircase(8)
        w = WeightAssignment.ones(lam)
        q = ProjectionQuery.make(range(1, 9), [1])
        assert brute_force_projection(lam, w, q) > 0
        big = Partition((15,) * 15)
        with pytest.raises(GuardError):
            brute_force_projection(big, WeightAssignment.ones(big), ProjectionQuery.make(range(1, 16), [15]))

    def test_332_all_queries(self):
        lam = P(3, 3, 2)
        w = random_weights(lam, RandomSource(332))
        qs = list(well_formed_queries(lam))
        assert qs
        for q in qs:
            assert projection_probability(lam, w, q) == brute_force_projection(lam, w, q)

    def test_query_count(self):
        # each interior row or column may or may not be visited
        r, s = 3, 4
        expected = sum(2 ** max(r - i - 1, 0) * 2 ** max(s - j - 1, 0) for i in range(1, r + 1) for j in range(1, s + 1))
        assert sum(1 for _ in queries_for_corner((r, s))) == expected

    @settings(max_examples=25)
    @given(shape_and_weights(max_size=9))
    def test_assembly(self, data):
        lam, w = data
        for c in corners(lam):
            assert assembled_probability(lam, w, c) == closed_form_probability(lam, w, c)


class TestSimulation:
    def test_single_cell(self):
        d = simulate(P(1), WeightAssignment.ones(P(1)), samples=10, seed=3)
        assert d.hits == (10,) and d.samples == 10

    def test_21_concentration(self):
        n = 100_000
        d = simulate(P(2, 1), WeightAssignment.ones(P(2, 1)), samples=n, seed=7)
        sigma = math.sqrt(0.25 / n)
        for f in d.frequencies():
            assert abs(f - 0.5) <= 4 * sigma

    def test_66532_against_exact(self):
        lam = P(6, 6, 5, 3, 2)
        w = random_weights(lam, RandomSource(12))
        d = simulate(lam, w, samples=100_000, seed=12)
        assert all(abs(z) <= 4 for z in z_scores(d, exact_distribution(lam, w)))

    def test_modified_against_exact(self):
        w = WeightAssignment.ones(BIG)
        d = simulate(BIG, w, modified=True, samples=50_000, seed=1)
        assert all(abs(z) <= 4 for z in z_scores(d, exact_distribution(BIG, w, modified=True)))

    def test_deterministic(self):
        lam = P(4, 2, 1)
        w = random_weights(lam, RandomSource(0))
        a = simulate(lam, w, samples=5000, seed=99, shards=3)
        b = simulate(lam, w, samples=5000, seed=99, shards=3)
        assert a == b
        assert a.to_json() == b.to_json()

    def test_shards_merge_by_sum(self):
        lam = P(3, 1)
        w = WeightAssignment.ones(lam)
        whole = simulate(lam, w, samples=1001, seed=5, shards=3)
        parts = [
            simulate(lam, w, samples=n, rng=RandomSource(5, k))
            for k, n in enumerate(shard_sizes(1001, 3))
        ]
        assert whole.hits == tuple(sum(p.hits[i] for p in parts) for i in range(2))

    def test_explicit_rng_single_shard_only(self):
        with pytest.raises(ValueError):
            simulate(P(1), WeightAssignment.ones(P(1)), samples=1, rng=RandomSource(), shards=2)

    def test_bad_samples(self):
        with pytest.raises(ValueError):
            simulate(P(1), WeightAssignment.ones(P(1)), samples=0)


class TestFixedPoint:
    @given(st.lists(st.builds(Fraction, st.integers(1, 10**6), st.integers(1, 10**6)), min_size=1, max_size=30))
    def test_widths_sum_to_full_range(self, weights):
        bounds = [int(b) for b in fixed_point_bounds(weights)] + [1 << 64]
        widths = [b - a for a, b in zip([0] + bounds, bounds)]
        assert sum(widths) == 1 << 64
        total = sum(weights)
        for wt, width in zip(weights, widths):
            assert abs(width - wt * (1 << 64) / total) < 1

    def test_selection(self):
        bounds = fixed_point_bounds([Fraction(1), Fraction(3)])
        assert bounds.dtype == np.uint64
        picks = np.searchsorted(bounds, np.array([0, 2**62 - 1, 2**62, 2**64 - 1], dtype=np.uint64), side="right")
        assert list(picks) == [0, 0, 1, 1]


class TestDistributionType:
    def test_validation(self):
        with pytest.raises(ValueError):
            CornerDistribution((Cell(1, 1),), mass=(Fraction(1, 2),))
        with pytest.raises(ValueError):
            CornerDistribution((Cell(1, 1),), hits=(3,), samples=4)
        with pytest.raises(ValueError):
            CornerDistribution((Cell(1, 1),))

    def test_json(self):
        d = CornerDistribution((Cell(1, 2), Cell(2, 1)), mass=(Fraction(1, 3), Fraction(2, 3)))
        assert d.to_json() == {"corners": [[1, 2], [2, 1]], "mass": ["1/3", "2/3"]}
        e = CornerDistribution((Cell(1, 1),), hits=(4,), samples=4)
        assert e.to_json()["mass"] == [{"hits": 4, "samples": 4}]

