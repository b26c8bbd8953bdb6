"""
Tests for admissible triples, generator orbits and D8 enumeration over Q2
"""

from fractions import Fraction

import pytest

from admiss.d8 import enumerate_d8, same_d8_class
from admiss.pairs import AdmissiblePair, UnorderedPair, enumerate_admissible_pairs, enumerate_unordered_pairs
from admiss.relations import galois_relations
from admiss.triples import AdmissibleTriple, Summand, enumerate_triples, generator_orbit, same_module, shaped_summands
from dyadic.number import agrees
from dyadic.square_class import square_class
from quadext.elements import BiquadElement, norm_full, norm_quad
from quadext.squares import is_square_in_E


@pytest.fixture(scope="module")
def minus_one_pair():
    return AdmissiblePair.of(-1, [2, 10])


@pytest.fixture(scope="module")
def minus_one_triples(minus_one_pair):
    return enumerate_triples(minus_one_pair)


class TestTriple:
    def test_sum_shaped_generator(self, minus_one_pair):
        """(1 + sqrt 2) + (3 + sqrt 10) has norm -64."""
        assert minus_one_pair.radicands == (2, 5)
        delta = BiquadElement.of(2, 5, 4, 1, 0, 1)
        assert norm_full(delta).exact == -64
        triple = AdmissibleTriple.build(minus_one_pair, delta)
        assert triple.norm_class() == square_class(-1)
        assert triple.d.exact == 8
        triple.validate()

    def test_orbit(self, minus_one_triples):
        triple = minus_one_triples[0]
        members = generator_orbit(triple)
        assert len(members) == 8
        assert members[0].element == triple.delta
        for m in members:
            assert square_class(norm_full(m.element)) == square_class(-1)
        for i, x in enumerate(members):
            for y in members[i + 1:]:
                assert not is_square_in_E(x.element * y.element)

    def test_orbit_closure(self, minus_one_triples):
        triple = minus_one_triples[1]
        for factor in (triple.A, triple.C, triple.b_element):
            assert same_module(triple, triple.delta * factor)


class TestEnumerateTriples:
    def test_four_per_pair(self, minus_one_triples):
        assert len(minus_one_triples) == 4

    def test_fingerprints_partition_kernel(self, minus_one_triples):
        tags = [t for triple in minus_one_triples for t in triple.fingerprint]
        assert sorted(tags) == list(range(32))

    def test_invariants(self, minus_one_triples):
        for triple in minus_one_triples:
            triple.validate()

    def test_pairwise_distinct_modules(self, minus_one_triples):
        for i, t in enumerate(minus_one_triples):
            for other in minus_one_triples[i + 1:]:
                assert not same_module(t, other.delta)

    def test_relations(self, minus_one_triples):
        for triple in minus_one_triples:
            report = galois_relations(triple)
            assert report.passed, report.results

    @pytest.mark.slow
    def test_sixteen_in_total(self):
        assert sum(len(enumerate_triples(p)) for p in enumerate_admissible_pairs()) == 16

    @pytest.mark.slow
    def test_sixteen_in_sum_shape(self):
        triples = [t for p in enumerate_admissible_pairs() for t in enumerate_triples(p)]
        assert len(triples) == 16
        assert all(t.alpha is not None for t in triples)


class TestSumShapes:
    """Generators alpha + gamma with Nm(alpha) = Nm(gamma) = b"""

    def test_every_module_has_a_sum_shape(self, minus_one_triples):
        a, c = minus_one_triples[0].pair.radicands
        for t in minus_one_triples:
            assert t.alpha is not None
            delta = BiquadElement.lift(t.alpha.element(), a, c) + BiquadElement.lift(t.gamma.element(), a, c)
            assert same_module(t, delta)
            assert len(t.shape_generators()) == 3

    def test_summand_norm_is_b(self):
        for s in shaped_summands(2, -1):
            assert agrees(norm_quad(s.element()), -1)

    def test_hensel_scaled_summand(self):
        s = Summand(2, 3, 1, -1)
        assert s.quotient == Fraction(-1, 7)
        assert not s.scale.is_exact
        assert str(s) == "√(-1/7)(3+√2)"
        assert str(Summand(2, 3, 1, -1, -1)) == "-√(-1/7)(3+√2)"

    def test_rational_scale_renders_plainly(self):
        assert str(Summand(2, 1, 1, -1)) == "1+√2"
        assert str(Summand(2, 1, 1, -1, -1)) == "-1-√2"

    def test_summand_over_non_square_free_radicand(self):
        s = Summand(-50, 1, 1, 3)
        element = s.element()
        assert element.a == -50
        assert agrees(element.y * 5, element.x)
        assert agrees(norm_quad(element), 3)

    @pytest.mark.slow
    @pytest.mark.parametrize("b", [-2, -5, -10])
    def test_four_shapes_per_pair(self, b):
        pair = next(p for p in enumerate_admissible_pairs() if p.b == square_class(b))
        assert all(t.alpha is not None for t in enumerate_triples(pair))


class TestD8:
    def test_two_per_pair(self):
        extensions = enumerate_d8(UnorderedPair.of(-1, 2))
        assert len(extensions) == 2
        x, y = extensions
        assert not same_d8_class(x.delta1, y.delta1, x.b_value)

    def test_norm_class_and_second_generator(self):
        for ext in enumerate_d8(UnorderedPair.of(-1, 5)):
            assert square_class(norm_quad(ext.delta1)) == square_class(-1)
            if ext.delta2 is not None:
                assert square_class(norm_quad(ext.delta2)) == ext.pair.a

    @pytest.mark.slow
    def test_eighteen_in_total(self):
        assert sum(len(enumerate_d8(p)) for p in enumerate_unordered_pairs()) == 18
