"""
Hilbert symbol on Q2 square classes.

The symbol is written additively: 0 means the quaternion algebra (a, b)
splits, i.e. b is a norm from Q2(sqrt a).
"""

import logging
from functools import lru_cache

from .square_class import SquareClass, coerce_class

logger = logging.getLogger(__name__)

ORACLE_EXPONENT = 7


def _epsilon(u: int) -> int:
    return ((u - 1) // 2) % 2


def _omega(u: int) -> int:
    return ((u * u - 1) // 8) % 2


def _split(cls: SquareClass) -> tuple[int, int]:
    e_m1, e_2, e_5 = cls.bits
    return e_2, (-1) ** e_m1 * 5**e_5


def hilbert(a, b) -> int:
    """
    Closed formula: for a = 2^alpha u and b = 2^beta v with u, v units,
    (a, b) = eps(u)eps(v) + alpha*omega(v) + beta*omega(u) mod 2.
    """
    alpha, u = _split(coerce_class(a))
    beta, v = _split(coerce_class(b))
    return (_epsilon(u) * _epsilon(v) + alpha * _omega(v) + beta * _omega(u)) % 2


@lru_cache(maxsize=None)
def _oracle(a: SquareClass, b: SquareClass) -> int:
    modulus = 1 << ORACLE_EXPONENT
    squares = {z * z % modulus for z in range(modulus)}
    odd_squares = {z * z % modulus for z in range(1, modulus, 2)}
    ra, rb = a.representative(), b.representative()
    for x in range(modulus):
        for y in range(modulus):
            targets = odd_squares if x % 2 == 0 and y % 2 == 0 else squares
            if (ra * x * x + rb * y * y) % modulus in targets:
                return 0
    return 1


def hilbert_oracle(a, b) -> int:
    """
    Brute-force conic test: ax^2 + by^2 = z^2 has a primitive solution
    modulo 2^7. Representatives have valuation at most 1, for which this
    modulus decides solvability over Q2.
    """
    result = _oracle(coerce_class(a), coerce_class(b))
    logger.debug("oracle (%s, %s) = %s", a, b, result)
    return result


def hilbert_table() -> dict[tuple[SquareClass, SquareClass], int]:
    return {(a, b): hilbert(a, b) for a in SquareClass.all() for b in SquareClass.all()}
