"""
F2-subspaces of the square-class group, kept in reduced echelon form.
"""

import itertools
from dataclasses import dataclass
from functools import lru_cache

from dyadic.square_class import SquareClass, coerce_class


def _echelon(masks) -> tuple[int, ...]:
    rows: list[int] = []
    for mask in masks:
        for row in rows:
            if mask & (1 << (row.bit_length() - 1)):
                mask ^= row
        if mask:
            rows.append(mask)
    rows.sort(reverse=True)
    for i, row in enumerate(rows):
        pivot = 1 << (row.bit_length() - 1)
        for j in range(len(rows)):
            if j != i and rows[j] & pivot:
                rows[j] ^= row
    return tuple(sorted(rows, reverse=True))


@dataclass(frozen=True, order=True)
class Subspace:
    basis: tuple[SquareClass, ...]

    @classmethod
    def span(cls, vectors) -> "Subspace":
        masks = [coerce_class(v).mask for v in vectors]
        return cls(tuple(SquareClass.from_mask(m) for m in _echelon(masks)))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def members(self) -> list[SquareClass]:
        masks = {0}
        for v in self.basis:
            masks |= {m ^ v.mask for m in masks}
        return [SquareClass.from_mask(m) for m in sorted(masks)]

    def nontrivial_members(self) -> list[SquareClass]:
        return self.members()[1:]

    def __contains__(self, item) -> bool:
        return coerce_class(item) in self.members()

    def radicands(self) -> tuple[int, ...]:
        return tuple(v.representative() for v in self.basis)

    def bases(self) -> list[tuple[SquareClass, SquareClass]]:
        """Every ordered basis of a plane."""
        return [
            (u, v) for u, v in itertools.permutations(self.nontrivial_members(), 2)
        ]

    def __str__(self):
        return "<" + ", ".join(str(v) for v in self.basis) + ">"


def as_subspace(V) -> Subspace:
    return V if isinstance(V, Subspace) else Subspace.span(V)


@lru_cache(maxsize=None)
def planes() -> tuple[Subspace, ...]:
    """The 7 two-dimensional subspaces of F2^3."""
    spans = {Subspace.span(pair) for pair in itertools.combinations(SquareClass.nontrivial(), 2)}
    return tuple(sorted(spans))
