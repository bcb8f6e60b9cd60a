from fractions import Fraction

import hypothesis.strategies as st
import pytest
from hypothesis import given

from hooklab.diagram import Partition, corners, partitions_up_to
from hooklab.identities import wbrhl_degree, wbrhl_polynomials
from hooklab.poly import (
    MultiPoly,
    WeightAssignment,
    evaluate,
    format_rational,
    parse_rational,
    parse_weights,
    poly_arith,
    random_rational,
    random_weights,
    span_sum,
)
from hooklab.rng import RandomSource

NX, NY = 2, 2
x1, x2 = (MultiPoly.x(i, NX, NY) for i in (1, 2))
y1, y2 = (MultiPoly.y(j, NX, NY) for j in (1, 2))

coeffs = st.builds(Fraction, st.integers(-6, 6), st.integers(1, 4))
exponents = st.tuples(*[st.integers(0, 2)] * (NX + NY))
polys = st.dictionaries(exponents, coeffs, max_size=4).map(lambda t: MultiPoly(NX, NY, t))
points = st.tuples(
    st.tuples(coeffs, coeffs), st.tuples(coeffs, coeffs)
).map(lambda p: WeightAssignment(p[0], p[1], positive=False))


class TestRational:
    def test_parse_and_format(self):
        assert parse_rational(" 3/6 ") == Fraction(1, 2)
        assert format_rational(Fraction(4, 2)) == "2/1"
        assert format_rational(Fraction(-3, 9)) == "-1/3"

    def test_division_by_zero_reported(self):
        with pytest.raises(ZeroDivisionError):
            Fraction(1) / Fraction(0)

    def test_parse_weights(self):
        assert parse_weights("1,3/2,2", 3) == (1, Fraction(3, 2), 2)
        assert parse_weights("ones", 2) == (1, 1)
        with pytest.raises(ValueError):
            parse_weights("1,2", 3)

    def test_weights_positivity(self):
        with pytest.raises(ValueError):
            WeightAssignment((1, 0), (1,))
        WeightAssignment((1, 0), (1,), positive=False)

    def test_check_shape(self):
        with pytest.raises(ValueError):
            WeightAssignment((1,), (1,)).check_shape(Partition((2, 1)))


class TestRandomRational:
    def test_bound_one(self):
        rng = RandomSource(5)
        assert all(random_rational(rng, 1) == 1 for _ in range(20))

    def test_golden_sequence(self):
        rng = RandomSource(2024)
        got = [format_rational(random_rational(rng, 100)) for _ in range(8)]
        assert got == ["34/33", "16/53", "1/1", "37/67", "36/29", "3/2", "62/37", "13/61"]

    def test_range(self):
        rng = RandomSource(11)
        values = [random_rational(rng, 100) for _ in range(10_000)]
        assert all(0 < v <= 100 for v in values)
        assert all(v.denominator <= 100 and v.numerator <= 100 for v in values)

    def test_streams_differ(self):
        a = [random_rational(RandomSource(1, 0)) for _ in range(5)]
        b = [random_rational(RandomSource(1, 1)) for _ in range(5)]
        assert a != b


class TestMultiPoly:
    def test_difference_of_squares(self):
        assert poly_arith(x1 + y1, x1 - y1, "mul") == x1**2 - y1**2

    def test_times_zero(self):
        assert (x1 + y2) * MultiPoly.zero(NX, NY) == MultiPoly.zero(NX, NY)
        assert ((x1 + y2) * 0).is_zero()

    def test_four_terms(self):
        assert len((x1 + x2) * (y1 + y2)) == 4

    def test_universe_mismatch(self):
        with pytest.raises(ValueError):
            poly_arith(x1, MultiPoly.x(1, 3, 2), "add")
        with pytest.raises(ValueError):
            poly_arith(x1, x2, "div")

    def test_rendering(self):
        p = MultiPoly(2, 3, {(2, 0, 0, 0, 1): 1, (1, 0, 1, 0, 0): Fraction(3, 2), (0, 0, 0, 1, 0): -1})
        assert str(p) == "x1^2*y3 + 3/2*x1*y1 - y2"
        assert str(MultiPoly.zero(1, 1)) == "0"

    def test_graded_lex_order(self):
        p = x1 + y2 + x1 * x2 + MultiPoly.one(NX, NY)
        degrees = [sum(e) for e, _ in p.terms()]
        assert degrees == sorted(degrees, reverse=True)
        assert p.terms()[1][0] == (1, 0, 0, 0)  # x1 before y2 among linear terms

    def test_evaluate(self):
        w = WeightAssignment((2, 1), (Fraction(3, 2), 1))
        assert evaluate(x1 * y1, w) == 3
        with pytest.raises(ValueError):
            evaluate(MultiPoly.x(3, 3, 1), WeightAssignment((1,), (1,)))

    @given(polys, polys, polys)
    def test_ring_axioms(self, a, b, c):
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + b == b + a and a * b == b * a
        assert a - a == MultiPoly.zero(NX, NY)
        assert a * MultiPoly.one(NX, NY) == a

    @given(polys, polys, points)
    def test_evaluation_is_homomorphism(self, a, b, w):
        assert evaluate(a * b, w) == evaluate(a, w) * evaluate(b, w)
        assert evaluate(a + b, w) == evaluate(a, w) + evaluate(b, w)

    @given(polys)
    def test_homogeneous_at_ones_is_coefficient_sum(self, p):
        ones = WeightAssignment((1, 1), (1, 1))
        assert evaluate(p, ones) == p.coefficient_sum()

    @given(polys, polys)
    def test_hash_consistent_with_eq(self, a, b):
        if a == b:
            assert hash(a) == hash(b)
        assert hash(a + b) == hash(b + a)


class TestIdentityPolynomials:
    def test_lhs_21_at_ones(self):
        lhs, _ = wbrhl_polynomials(Partition((2, 1)))
        assert evaluate(lhs, WeightAssignment.ones(Partition((2, 1)))) == 6

    def test_homogeneous_degree(self):
        for lam in partitions_up_to(8):
            lhs, rhs = wbrhl_polynomials(lam)
            d = wbrhl_degree(lam)
            assert d == lam.size() + 2 - len(corners(lam))
            assert lhs.is_homogeneous(d) and rhs.is_homogeneous(d), lam


class TestSpanSum:
    def test_basic(self):
        assert span_sum([1, 2, 3], 2, 3, 0) == 5
        assert span_sum([1, 2, 3], 3, 2, 0) == 0

    def test_rejects_index_zero(self):
        with pytest.raises(IndexError):
            span_sum([1, 2], 0, 1, 0)

    def test_random_weights_shape(self):
        lam = Partition((3, 1))
        w = random_weights(lam, RandomSource(0))
        assert (len(w.x), len(w.y)) == (2, 3)
