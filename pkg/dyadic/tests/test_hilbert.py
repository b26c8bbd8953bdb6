"""
Tests for the Hilbert symbol over Q2
"""

import pytest

from dyadic.hilbert import hilbert, hilbert_oracle, hilbert_table
from dyadic.square_class import SquareClass, square_class

CLASSES = SquareClass.all()


class TestHilbertValues:
    def test_minus_one_minus_one(self):
        assert hilbert(-1, -1) == 1

    def test_minus_one_two(self):
        assert hilbert(-1, 2) == 0

    def test_two_minus_one(self):
        assert hilbert(2, -1) == 0

    def test_two_five(self):
        assert hilbert(2, 5) == 1

    @pytest.mark.parametrize("a", CLASSES[1:])
    def test_a_minus_a_splits(self, a):
        minus_a = a * square_class(-1)
        assert hilbert(a, minus_a) == 0


class TestHilbertProperties:
    """Exhaustive checks over all 64 class pairs"""

    def test_oracle_agrees(self):
        for a in CLASSES:
            for b in CLASSES:
                assert hilbert(a, b) == hilbert_oracle(a, b), (str(a), str(b))

    def test_symmetry(self):
        table = hilbert_table()
        for a in CLASSES:
            for b in CLASSES:
                assert table[(a, b)] == table[(b, a)]

    def test_bilinearity(self):
        for a in CLASSES:
            for a2 in CLASSES:
                for b in CLASSES:
                    assert hilbert(a * a2, b) == hilbert(a, b) ^ hilbert(a2, b)

    def test_nondegeneracy(self):
        for a in CLASSES[1:]:
            assert any(hilbert(a, b) for b in CLASSES)
