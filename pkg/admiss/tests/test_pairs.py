"""
Tests for the admissibility calculus over Q2
"""

import pytest

from admiss.pairs import (
    AdmissiblePair,
    UnorderedPair,
    enumerate_admissible_pairs,
    enumerate_unordered_pairs,
    is_admissible_pair,
)
from admiss.subspaces import Subspace, planes
from dyadic.square_class import square_class
from exceptions import PreconditionViolation


class TestSubspaces:
    def test_seven_planes(self):
        assert len(planes()) == 7

    def test_echelon_form_is_canonical(self):
        assert Subspace.span([2, 10]) == Subspace.span([10, 5]) == Subspace.span([5, 2])

    def test_members(self):
        members = {cls.representative() for cls in Subspace.span([2, 10]).members()}
        assert members == {1, 2, 5, 10}


class TestAdmissiblePairs:
    def test_minus_one_with_two_ten(self):
        assert is_admissible_pair(-1, [2, 10])

    def test_b_inside_V(self):
        assert not is_admissible_pair(-1, [2, -1])

    def test_symbol_fails(self):
        assert not is_admissible_pair(5, [2, -1])

    def test_four_pairs(self):
        pairs = enumerate_admissible_pairs()
        assert len(pairs) == 4
        assert {p.b.representative() for p in pairs} == {-1, -2, -5, -10}

    def test_unique_V_per_b(self):
        pairs = enumerate_admissible_pairs()
        assert len({p.b for p in pairs}) == len(pairs)

    def test_V_for_minus_one(self):
        pair = next(p for p in enumerate_admissible_pairs() if p.b == square_class(-1))
        assert {v.representative() for v in pair.V.members()} == {1, 2, 5, 10}

    def test_ordered_by_b(self):
        bs = [p.b for p in enumerate_admissible_pairs()]
        assert bs == sorted(bs)

    def test_basis_change_invariance(self):
        for pair in enumerate_admissible_pairs():
            for u, v in pair.V.bases():
                assert is_admissible_pair(pair.b, [u, v])

    def test_invalid_pair_rejected(self):
        with pytest.raises(PreconditionViolation):
            AdmissiblePair.of(5, [2, -1])


class TestUnorderedPairs:
    PRINTED = [(-1, 2), (-1, 5), (-1, 10), (-2, 2), (-5, 5), (-2, -10), (-10, 10), (-5, -10), (-2, -5)]

    def test_nine_pairs(self):
        assert len(enumerate_unordered_pairs()) == 9

    def test_equal_to_printed_list(self):
        expected = {UnorderedPair.of(x, y) for x, y in self.PRINTED}
        assert set(enumerate_unordered_pairs()) == expected

    def test_two_five_absent(self):
        assert UnorderedPair.of(-1, 2) in enumerate_unordered_pairs()
        with pytest.raises(PreconditionViolation):
            UnorderedPair.of(2, 5)
