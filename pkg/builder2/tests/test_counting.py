import pytest

from builder2.counting import (
    Char2CountingParams,
    brute_count_pairs,
    count_pairs_char2,
    count_triples_char2,
    count_u4_char2,
    gaussian_binomial,
)
from exceptions import PreconditionViolation


class TestGaussianBinomial:
    def test_small(self):
        assert gaussian_binomial(3, 2) == 7
        assert gaussian_binomial(4, 2) == 35
        assert gaussian_binomial(2, 3) == 0


class TestPairs:
    @pytest.mark.parametrize("n,expected", [(2, 0), (3, 28), (4, 420), (5, 4340)])
    def test_closed_form(self, n, expected):
        assert count_pairs_char2(Char2CountingParams(n)) == expected

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_brute_force_agrees(self, n):
        assert brute_count_pairs(n) == count_pairs_char2(Char2CountingParams(n))

    def test_brute_force_limit(self):
        with pytest.raises(PreconditionViolation):
            brute_count_pairs(6)


class TestTriples:
    def test_n_three(self):
        p = Char2CountingParams(3)
        assert count_triples_char2(p) == 8
        assert count_u4_char2(p) == 224

    def test_n_four_per_pair(self):
        assert count_triples_char2(Char2CountingParams(4)) == 64

    def test_n_two_rejected(self):
        with pytest.raises(PreconditionViolation):
            count_u4_char2(Char2CountingParams(2))

    @pytest.mark.parametrize("n", range(3, 9))
    def test_product_identity(self, n):
        p = Char2CountingParams(n)
        assert count_u4_char2(p) == count_pairs_char2(p) * count_triples_char2(p)

    def test_free_rank(self):
        assert Char2CountingParams(3).free_rank == 9
