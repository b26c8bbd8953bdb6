import pytest

from admiss.counting import (
    CountingParams,
    count_d8,
    count_d8_pairs,
    count_d8_w,
    count_pairs,
    count_triples_per_pair,
    count_u2,
    count_u4,
)
from exceptions import PreconditionViolation
from ugroup.matrix import max_unipotent_level


class TestCounts:
    def test_pairs_q2(self):
        assert count_pairs(CountingParams(1, True)) == 4
        assert count_pairs(CountingParams(2, True)) == 84

    def test_pairs_q_not_2(self):
        assert count_pairs(CountingParams(1, False)) == 0

    def test_triples_per_pair(self):
        assert count_triples_per_pair(CountingParams(1)) == 4

    def test_q2_totals(self):
        p = CountingParams(1, True)
        assert count_u4(p) == 16
        assert count_d8(p) == 18
        assert count_u2(p) == 7

    def test_d8_n_two(self):
        assert count_d8(CountingParams(2, True)) == 196

    def test_no_higher_levels_over_q2(self):
        assert max_unipotent_level(3) == 4

    @pytest.mark.parametrize("n", range(1, 7))
    @pytest.mark.parametrize("q_is_2", [True, False])
    def test_product_identities(self, n, q_is_2):
        p = CountingParams(n, q_is_2)
        assert count_u4(p) == count_pairs(p) * count_triples_per_pair(p)
        assert count_d8(p) == count_d8_pairs(p) * count_d8_w(p)

    def test_degree_zero_rejected(self):
        with pytest.raises(PreconditionViolation):
            CountingParams(0)
