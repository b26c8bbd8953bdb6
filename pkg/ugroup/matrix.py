"""
Upper unitriangular matrices over F2.

The strict upper triangle is packed row-major into an int: bit k holds
entry (i, j) for the k-th pair i < j. The diagonal is implicitly 1.
"""

from collections import deque
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from exceptions import PreconditionViolation


@lru_cache(maxsize=None)
def entry_positions(n: int) -> tuple[tuple[int, int], ...]:
    return tuple((i, j) for i in range(n) for j in range(i + 1, n))


@dataclass(frozen=True, order=True)
class UnipotentMatrix:
    n: int
    bits: int = 0

    def __post_init__(self):
        if not 2 <= self.n <= 5:
            raise PreconditionViolation(f"dimension {self.n} outside 2..5")

    @classmethod
    def identity(cls, n: int) -> "UnipotentMatrix":
        return cls(n, 0)

    @classmethod
    def elementary(cls, i: int, j: int, n: int) -> "UnipotentMatrix":
        """E_ij = 1 + e_ij, 1-indexed."""
        return cls(n, 1 << entry_positions(n).index((i - 1, j - 1)))

    @classmethod
    def from_array(cls, array) -> "UnipotentMatrix":
        array = np.asarray(array) % 2
        n = array.shape[0]
        if not np.array_equal(np.tril(array, -1), np.zeros_like(array)) or not np.all(np.diag(array) == 1):
            raise PreconditionViolation("matrix is not upper unitriangular")
        bits = sum(int(array[i, j]) << k for k, (i, j) in enumerate(entry_positions(n)))
        return cls(n, bits)

    def to_array(self) -> np.ndarray:
        array = np.eye(self.n, dtype=np.uint8)
        for k, (i, j) in enumerate(entry_positions(self.n)):
            array[i, j] = (self.bits >> k) & 1
        return array

    def entry(self, i: int, j: int) -> int:
        """1-indexed entry above the diagonal."""
        return (self.bits >> entry_positions(self.n).index((i - 1, j - 1))) & 1

    def superdiagonal(self) -> tuple[int, ...]:
        return tuple(self.entry(i, i + 1) for i in range(1, self.n))

    @property
    def is_identity(self) -> bool:
        return self.bits == 0

    def __mul__(self, other: "UnipotentMatrix") -> "UnipotentMatrix":
        return mul(self, other)

    def __repr__(self):
        return f"UnipotentMatrix(n={self.n}, bits={self.bits:#x})"


def mul(a: UnipotentMatrix, b: UnipotentMatrix) -> UnipotentMatrix:
    if a.n != b.n:
        raise PreconditionViolation(f"dimension mismatch: {a.n} vs {b.n}")
    return UnipotentMatrix.from_array(a.to_array().astype(np.int64) @ b.to_array())


def inv(a: UnipotentMatrix) -> UnipotentMatrix:
    """(1 + N)^-1 = 1 + N + N^2 + ... over F2, N nilpotent."""
    nilpotent = (a.to_array().astype(np.int64) - np.eye(a.n, dtype=np.int64)) % 2
    total = np.eye(a.n, dtype=np.int64)
    power = np.eye(a.n, dtype=np.int64)
    for _ in range(a.n - 1):
        power = power @ nilpotent % 2
        total = (total + power) % 2
    return UnipotentMatrix.from_array(total)


def commutator(a: UnipotentMatrix, b: UnipotentMatrix) -> UnipotentMatrix:
    """[a, b] = a^-1 b^-1 a b."""
    return inv(a) * inv(b) * a * b


def standard_generators(n: int) -> tuple[UnipotentMatrix, ...]:
    return tuple(UnipotentMatrix.elementary(i, i + 1, n) for i in range(1, n))


def generate(gens) -> frozenset[UnipotentMatrix]:
    """Subgroup generated by `gens`, by right-multiplication closure."""
    gens = list(gens)
    if not gens:
        raise PreconditionViolation("at least one generator is needed")
    dims = {g.n for g in gens}
    if len(dims) != 1:
        raise PreconditionViolation(f"generators of mixed dimensions {sorted(dims)}")
    identity = UnipotentMatrix.identity(dims.pop())
    seen = {identity}
    queue = deque([identity])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = x * g
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return frozenset(seen)


@lru_cache(maxsize=None)
def full_group(n: int) -> tuple[UnipotentMatrix, ...]:
    return tuple(sorted(generate(standard_generators(n))))


def max_unipotent_level(square_class_dim: int) -> int:
    """
    Largest n for which U_n(F2) can be a Galois group over a field whose
    square-class group has the given dimension. The Frattini quotient of
    U_n(F2) has rank n - 1 and must embed in the square-class group.
    """
    if square_class_dim < 1:
        raise PreconditionViolation("square-class dimension must be at least 1")
    return square_class_dim + 1
