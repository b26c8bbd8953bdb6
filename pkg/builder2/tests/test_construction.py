"""
Tests for the characteristic 2 D8 and U4 constructions over F2(t)
"""

import random

import pytest

from builder2.pairs import Char2Pair, Char2Triple, b_class_survives, make_delta, shift_by_wp
from builder2.relations import (
    class_nonzero_in_E,
    d8_second_generator_char2,
    generator_orbit_char2,
    orbit_classes_distinct,
    verify_d8_relations_char2,
    verify_u4_relations,
)
from charp2.artin_schreier import classes_independent, same_class
from charp2.ratfunc import ZERO, RatFunc2, parse_ratfunc, random_ratfunc, wp
from charp2.tower import ASTowerElement, trace_down
from exceptions import PreconditionViolation

SEED = 1729


@pytest.fixture
def pair():
    return Char2Pair.of("t", "1/t", "1/(t+1)")


def random_independent_pair(rng):
    while True:
        a, b = random_ratfunc(rng, max_degree=3), random_ratfunc(rng, max_degree=3)
        if classes_independent([a, b]):
            return a, b


class TestPair:
    def test_admissible(self, pair):
        assert b_class_survives(pair)

    def test_b_equal_to_a(self):
        with pytest.raises(PreconditionViolation):
            Char2Pair.of("1/t", "1/t", "1/(t+1)")

    def test_b_in_span(self):
        with pytest.raises(PreconditionViolation):
            Char2Pair.of("1/t + 1/(t+1)^2", "1/t", "1/(t+1)")


class TestMakeDelta:
    def test_delta(self, pair):
        triple = make_delta(pair)
        theta_a = ASTowerElement.theta(0, pair.radicands)
        theta_c = ASTowerElement.theta(1, pair.radicands)
        assert triple.delta == RatFunc2.t() * theta_a * theta_c
        assert triple.trace() == RatFunc2.t()
        assert triple.d == ZERO

    def test_partial_traces(self, pair):
        triple = make_delta(pair)
        assert triple.A == pair.b * ASTowerElement.theta(0, pair.radicands)
        assert triple.C == pair.b * ASTowerElement.theta(1, pair.radicands)


class TestU4Relations:
    def test_constructed_triple(self, pair):
        report = verify_u4_relations(make_delta(pair))
        assert report.passed
        assert len(report.results) == 5

    def test_wp_shifted_generator(self, pair):
        rng = random.Random(SEED)
        triple = make_delta(pair)
        for _ in range(10):
            h = ASTowerElement.of(pair.radicands, *(random_ratfunc(rng, max_degree=2) for _ in range(4)))
            shifted = shift_by_wp(triple, h)
            shifted.validate()
            assert verify_u4_relations(shifted).passed

    def test_corrupted_generator(self, pair):
        triple = make_delta(pair)
        theta_product = ASTowerElement.theta(0, pair.radicands) * ASTowerElement.theta(1, pair.radicands)
        corrupted = Char2Triple(pair, triple.delta + theta_product, triple.d)
        report = verify_u4_relations(corrupted)
        assert not report.passed
        assert not report.results["sigma_a(A) = A + b + wp(d)"]
        with pytest.raises(PreconditionViolation):
            corrupted.validate()


class TestOrbit:
    def test_eight_members(self, pair):
        triple = make_delta(pair)
        members = generator_orbit_char2(triple)
        assert len(members) == 8
        assert members[0].element == triple.delta
        for m in members:
            assert same_class(m.element.full_trace(), pair.b)

    def test_b_shift_keeps_trace(self, pair):
        triple = make_delta(pair)
        member = next(m for m in generator_orbit_char2(triple) if (m.eps_a, m.eps_c, m.eps_b) == (0, 0, 1))
        assert member.element.full_trace() == pair.b

    def test_distinct_classes(self, pair):
        assert orbit_classes_distinct(generator_orbit_char2(make_delta(pair)))

    def test_class_nonzero(self, pair):
        triple = make_delta(pair)
        assert class_nonzero_in_E(triple.A)
        assert class_nonzero_in_E(ASTowerElement.constant(pair.b, pair.radicands))
        assert not class_nonzero_in_E(ASTowerElement.constant(pair.a, pair.radicands))


class TestD8:
    def test_zero_rational_part(self):
        a, b = parse_ratfunc("1/t"), parse_ratfunc("t")
        d1 = ASTowerElement.of((a,), 0, b)
        delta2 = d8_second_generator_char2(d1, b, 0)
        assert delta2 == ASTowerElement.of((b,), a * b, a)
        assert trace_down(delta2).coords == (a,)

    def test_d_equal_one(self):
        a, b = parse_ratfunc("1/t"), parse_ratfunc("t")
        d1 = ASTowerElement.of((a,), 0, b)
        delta2 = d8_second_generator_char2(d1, b, 1)
        assert delta2.coords[0] == a * b + a

    def test_bad_theta_coefficient(self):
        a, b = parse_ratfunc("1/t"), parse_ratfunc("t")
        d1 = ASTowerElement.of((a,), 0, b + 1)
        with pytest.raises(PreconditionViolation):
            d8_second_generator_char2(d1, b, 0)

    def test_randomized_identity(self):
        rng = random.Random(SEED)
        for _ in range(100):
            a, b = random_independent_pair(rng)
            x, d = random_ratfunc(rng, max_degree=3), random_ratfunc(rng, max_degree=3)
            d1 = ASTowerElement.of((a,), x, b + wp(d))
            delta2 = d8_second_generator_char2(d1, b, d)
            assert same_class(trace_down(delta2).coords[0], a)

    def test_relations(self):
        rng = random.Random(SEED)
        for _ in range(20):
            a, b = random_independent_pair(rng)
            d = random_ratfunc(rng, max_degree=3)
            d1 = ASTowerElement.of((a,), random_ratfunc(rng), b + wp(d))
            assert verify_d8_relations_char2(d1, b, d).passed
