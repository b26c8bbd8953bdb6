"""
Exhaustive automorphism search for U_3(F2) and U_4(F2).

An automorphism is determined by the images of the standard generators
E_12, E_23(, E_34). Candidate images are pruned (involutions, commuting
where the generators commute, independent modulo Phi) before the induced
map is built along the Cayley graph and checked to be a bijective
homomorphism.
"""

import itertools
import logging
from collections import deque
from functools import lru_cache

import numpy as np

from exceptions import PreconditionViolation

from .commutators import modulo_phi
from .matrix import UnipotentMatrix, entry_positions, full_group, standard_generators

logger = logging.getLogger(__name__)


class CayleyTable:
    """Multiplication table of U_n(F2) on element indices."""

    def __init__(self, n: int):
        self.n = n
        self.elements = full_group(n)
        self.index = {x: k for k, x in enumerate(self.elements)}
        arrays = np.stack([x.to_array() for x in self.elements]).astype(np.int64)
        products = np.einsum("aij,bjk->abik", arrays, arrays) % 2
        weights = np.zeros((n, n), dtype=np.int64)
        for k, (i, j) in enumerate(entry_positions(n)):
            weights[i, j] = 1 << k
        packed = np.einsum("abij,ij->ab", products, weights)
        by_bits = {x.bits: k for k, x in enumerate(self.elements)}
        self.table = [[by_bits[int(bits)] for bits in row] for row in packed]
        self.identity = self.index[UnipotentMatrix.identity(n)]

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]


@lru_cache(maxsize=None)
def cayley_table(n: int) -> CayleyTable:
    return CayleyTable(n)


def _extend(table: CayleyTable, sources: list[int], images: list[int]) -> dict[int, int] | None:
    phi = {table.identity: table.identity}
    queue = deque([table.identity])
    while queue:
        x = queue.popleft()
        for s, t in zip(sources, images):
            y = table.mul(x, s)
            image = table.mul(phi[x], t)
            if y not in phi:
                phi[y] = image
                queue.append(y)
            elif phi[y] != image:
                return None
    if len(phi) != len(table.elements) or len(set(phi.values())) != len(phi):
        return None
    return phi


def is_automorphism(images) -> bool:
    images = tuple(images)
    n = images[0].n
    table = cayley_table(n)
    sources = [table.index[g] for g in standard_generators(n)]
    return _extend(table, sources, [table.index[x] for x in images]) is not None


def _independent(vectors) -> bool:
    span = {0}
    for vector in vectors:
        packed = int("".join(map(str, vector)), 2)
        if packed in span:
            return False
        span |= {packed ^ s for s in span}
    return True


def automorphisms(n: int) -> list[tuple[UnipotentMatrix, ...]]:
    """All generator-image tuples that extend to an automorphism of U_n(F2)."""
    if n not in (3, 4):
        raise PreconditionViolation(f"automorphism search supports n=3 and n=4, not {n}")
    table = cayley_table(n)
    generators = standard_generators(n)
    sources = [table.index[g] for g in generators]
    involutions = [
        k for k in range(len(table.elements))
        if k != table.identity and table.mul(k, k) == table.identity
    ]
    commuting = [
        (i, j) for i, j in itertools.combinations(range(len(generators)), 2) if j - i >= 2
    ]

    found = []
    checked = 0
    for images in itertools.product(involutions, repeat=len(generators)):
        if any(table.mul(images[i], images[j]) != table.mul(images[j], images[i]) for i, j in commuting):
            continue
        if not _independent(modulo_phi(table.elements[k]) for k in images):
            continue
        checked += 1
        if _extend(table, sources, list(images)) is not None:
            found.append(tuple(table.elements[k] for k in images))
    logger.info("U_%d: %d candidates extended, %d automorphisms", n, checked, len(found))
    return found


def middle_generator_rigid(autos) -> bool:
    """Every automorphism of U_4(F2) fixes E_23 modulo Phi."""
    e23 = modulo_phi(UnipotentMatrix.elementary(2, 3, 4))
    return all(modulo_phi(images[1]) == e23 for images in autos)


def generator_pair_rigid(autos) -> bool:
    """Every automorphism of U_3(F2) fixes or swaps {E_12, E_23} modulo Phi."""
    s1, s2 = (modulo_phi(g) for g in standard_generators(3))
    allowed = {(s1, s2), (s2, s1)}
    return all((modulo_phi(a), modulo_phi(b)) in allowed for a, b in autos)
