"""
Tests for the U_2, D8 and U_4 catalogs over Q2
"""

import pytest

from catalog.towers import BASE_K, build_catalog, u2_catalog


class TestU2:
    def test_seven_quadratic_fields(self):
        catalog = u2_catalog()
        assert len(catalog.entries) == 7
        assert {e.generators[0] for e in catalog.entries} == {"-1", "2", "5", "-2", "-5", "10", "-10"}
        assert [e.label for e in catalog.entries] == [f"L{k}" for k in range(1, 8)]

    def test_tower(self):
        assert {e.tower() for e in u2_catalog().entries} >= {"Q2(√-1)", "Q2(√10)"}

    def test_unknown_group(self):
        with pytest.raises(ValueError):
            build_catalog("u5")


@pytest.mark.slow
class TestU3:
    def test_nine_groups_of_two(self):
        catalog = build_catalog("u3")
        assert len(catalog.entries) == 18
        groups = {}
        for entry in catalog.entries:
            groups.setdefault(tuple(map(tuple, entry.V)), []).append(entry)
        assert len(groups) == 9
        assert all(len(members) == 2 for members in groups.values())

    def test_second_root_is_b(self):
        for entry in build_catalog("u3").entries:
            assert entry.b_class == entry.V[1]


@pytest.mark.slow
class TestU4:
    def test_four_groups_of_four(self):
        catalog = build_catalog("u4")
        assert catalog.base == BASE_K
        assert len(catalog.entries) == 16
        by_b = {}
        for entry in catalog.entries:
            by_b.setdefault(tuple(entry.b_class), []).append(entry)
        assert len(by_b) == 4
        for entries in by_b.values():
            assert len(entries) == 4
            tags = sorted(t for e in entries for t in e.w_fingerprint)
            assert tags == list(range(32))

    def test_output_is_deterministic(self):
        first = build_catalog("u4")
        second = build_catalog("u4")
        assert [e.generators for e in first.entries] == [e.generators for e in second.entries]

    def test_every_tower_in_sum_shape(self):
        for entry in build_catalog("u4").entries:
            alpha, gamma, total = entry.generators
            assert total.startswith(alpha)
            assert total.endswith(gamma)
