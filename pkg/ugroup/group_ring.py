"""
The group ring F2[G] for an elementary abelian 2-group G.

G of order 2^r is enumerated as the integers 0..2^r - 1 with XOR as the
group law, so a ring element is a bitmask whose bit g is the coefficient
of g.
"""

import itertools
from dataclasses import dataclass

from exceptions import PreconditionViolation


@dataclass(frozen=True)
class GroupRingElement:
    order: int
    coeffs: int = 0

    @property
    def group(self) -> list[int]:
        return list(range(self.order))

    @property
    def support(self) -> list[int]:
        return [g for g in range(self.order) if (self.coeffs >> g) & 1]

    def __add__(self, other: "GroupRingElement") -> "GroupRingElement":
        return GroupRingElement(self.order, self.coeffs ^ other.coeffs)

    def __mul__(self, other: "GroupRingElement") -> "GroupRingElement":
        coeffs = 0
        for g in self.support:
            for h in other.support:
                coeffs ^= 1 << (g ^ h)
        return GroupRingElement(self.order, coeffs)

    def translate(self, g: int) -> "GroupRingElement":
        return GroupRingElement(self.order, sum(1 << (g ^ h) for h in self.support))


def norm_element(order: int) -> GroupRingElement:
    """N = sum of all group elements."""
    return GroupRingElement(order, (1 << order) - 1)


def _check_order(order: int):
    if order not in (2, 4):
        raise PreconditionViolation(f"|G| must be 2 or 4, got {order}")


def _span(vectors) -> frozenset[int]:
    span = {0}
    for v in vectors:
        if v not in span:
            span |= {v ^ s for s in span}
    return frozenset(span)


def principal_ideal(x: GroupRingElement) -> frozenset[int]:
    """F2[G] x as a set of coefficient masks; G spans F2[G]."""
    return _span(x.translate(g).coeffs for g in range(x.order))


def is_left_ideal(order: int, subset) -> bool:
    subset = set(subset)
    if 0 not in subset:
        return False
    if any(a ^ b not in subset for a in subset for b in subset):
        return False
    return all(
        GroupRingElement(order, a).translate(g).coeffs in subset for a in subset for g in range(order)
    )


def left_ideals(order: int) -> set[frozenset[int]]:
    """
    All left ideals, as sums of principal ideals closed to a fixpoint.
    """
    _check_order(order)
    ideals = {principal_ideal(GroupRingElement(order, c)) for c in range(1 << order)}
    while True:
        sums = {_span(a | b) for a, b in itertools.combinations(ideals, 2)}
        if sums <= ideals:
            return ideals
        ideals |= sums


def left_ideals_by_subsets(order: int) -> set[frozenset[int]]:
    """Brute force over all subsets of the ring; only sensible for |G| = 2."""
    ring = range(1 << order)
    return {
        frozenset(subset)
        for size in range(1, (1 << order) + 1)
        for subset in itertools.combinations(ring, size)
        if is_left_ideal(order, subset)
    }


def ideal_contains_norm(order: int) -> bool:
    """Every nonzero left ideal of F2[G] contains the norm element."""
    norm = norm_element(order).coeffs
    return all(norm in ideal for ideal in left_ideals(order) if ideal != frozenset({0}))
