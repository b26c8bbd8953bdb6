"""
Counts of U_4(F2) extensions of a field F of characteristic 2 with
dim F/wp(F) = n finite. F/wp(F) is modelled abstractly as F2^n.
"""

import itertools
from dataclasses import dataclass

from admiss.counting import exact_div
from exceptions import PreconditionViolation

BRUTE_FORCE_LIMIT = 5
MIN_TRIPLE_DIM = 3


@dataclass(frozen=True)
class Char2CountingParams:
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise PreconditionViolation(f"n must be at least 1, got {self.n}")

    @property
    def free_rank(self) -> int:
        """Rank of the free pro-2 group G_E(2) for E/F of degree 4."""
        return 4 * self.n - 3


def gaussian_binomial(n: int, k: int, q: int = 2) -> int:
    """Number of k-dimensional subspaces of F_q^n."""
    if k < 0 or k > n:
        return 0
    numerator, denominator = 1, 1
    for i in range(k):
        numerator *= q ** (n - i) - 1
        denominator *= q ** (i + 1) - 1
    return exact_div(numerator, denominator)


def count_pairs_char2(p: Char2CountingParams) -> int:
    """
    Choose a 3-dimensional U, a plane V inside it and b in U outside V.
    """
    total = gaussian_binomial(p.n, 3) * gaussian_binomial(3, 2) * 4
    if p.n >= MIN_TRIPLE_DIM:
        n = p.n
        closed = exact_div(4 * (2**n - 1) * (2 ** (n - 1) - 1) * (2 ** (n - 2) - 1), 3)
        if closed != total:
            raise ArithmeticError(f"pair count inconsistent for n={n}")
    return total


def brute_count_pairs(n: int) -> int:
    """Exhaustive count of (V, b) in F2^n with dim V = 2 and b outside V."""
    if n > BRUTE_FORCE_LIMIT:
        raise PreconditionViolation(f"brute force is limited to n <= {BRUTE_FORCE_LIMIT}")
    vectors = range(1, 1 << n)
    planes = {frozenset((0, u, v, u ^ v)) for u, v in itertools.combinations(vectors, 2)}
    return sum(1 for V in planes for b in vectors if b not in V)


def _require_triples(p: Char2CountingParams):
    if p.n < MIN_TRIPLE_DIM:
        raise PreconditionViolation(f"admissible triples need n >= {MIN_TRIPLE_DIM}, got {p.n}")


def count_triples_char2(p: Char2CountingParams) -> int:
    _require_triples(p)
    return 2 ** (3 * p.n - 6)


def count_u4_char2(p: Char2CountingParams) -> int:
    _require_triples(p)
    n = p.n
    closed = exact_div((2**n - 1) * (2 ** (n - 1) - 1) * (2 ** (n - 2) - 1) * 2 ** (3 * n - 4), 3)
    if closed != count_pairs_char2(p) * count_triples_char2(p):
        raise ArithmeticError(f"U4 count inconsistent for n={n}")
    return closed
