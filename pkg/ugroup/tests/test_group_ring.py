from ugroup.group_ring import (
    GroupRingElement,
    ideal_contains_norm,
    left_ideals,
    left_ideals_by_subsets,
    norm_element,
    principal_ideal,
)


class TestGroupRing:
    def test_norm_times_group_element(self):
        norm = norm_element(4)
        assert norm * GroupRingElement(4, 1 << 2) == norm

    def test_norm_squared_vanishes(self):
        norm = norm_element(4)
        assert (norm * norm).coeffs == 0

    def test_ideal_of_norm(self):
        assert principal_ideal(norm_element(4)) == {0, norm_element(4).coeffs}

    def test_order_two_closure_matches_subsets(self):
        assert left_ideals(2) == left_ideals_by_subsets(2)

    def test_order_two(self):
        assert ideal_contains_norm(2)

    def test_klein_four(self):
        assert ideal_contains_norm(4)
