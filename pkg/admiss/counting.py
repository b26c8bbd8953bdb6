"""
Closed-form counts of Galois U_2, D8 and U_4(F2) extensions of a
2-adic field of degree n over Q2. q is the largest power of 2 such that
the field contains the q-th roots of unity.
"""

from dataclasses import dataclass

from exceptions import PreconditionViolation


@dataclass(frozen=True)
class CountingParams:
    n: int
    q_is_2: bool = True

    def __post_init__(self):
        if self.n < 1:
            raise PreconditionViolation(f"degree n must be at least 1, got {self.n}")


def exact_div(numerator: int, denominator: int) -> int:
    quotient, remainder = divmod(numerator, denominator)
    if remainder:
        raise ArithmeticError(f"{numerator} is not divisible by {denominator}")
    return quotient


def count_pairs(p: CountingParams) -> int:
    n = p.n
    if p.q_is_2:
        return exact_div(4 * (2 ** (n + 1) - 1) * (2**n - 1) ** 2, 3)
    return exact_div(4 * (2 ** (n + 2) - 1) * (2**n - 1) * (2 ** (n - 1) - 1), 3)


def count_triples_per_pair(p: CountingParams) -> int:
    return 2 ** (3 * p.n - 1)


def count_u4(p: CountingParams) -> int:
    n = p.n
    if p.q_is_2:
        closed = exact_div((2 ** (n + 1) - 1) * (2**n - 1) ** 2 * 2 ** (3 * n + 1), 3)
    else:
        closed = exact_div((2 ** (n + 2) - 1) * (2**n - 1) * (2 ** (n - 1) - 1) * 2 ** (3 * n + 1), 3)
    if closed != count_pairs(p) * count_triples_per_pair(p):
        raise ArithmeticError(f"U4 count inconsistent for {p}")
    return closed


def count_d8_pairs(p: CountingParams) -> int:
    n = p.n
    if p.q_is_2:
        return (2 ** (n + 1) - 1) ** 2
    return (2 ** (n + 2) - 1) * (2**n - 1)


def count_d8_w(p: CountingParams) -> int:
    return 2**p.n


def count_d8(p: CountingParams) -> int:
    n = p.n
    if p.q_is_2:
        closed = 2**n * (2 ** (n + 1) - 1) ** 2
    else:
        closed = 2**n * (2 ** (n + 2) - 1) * (2**n - 1)
    if closed != count_d8_pairs(p) * count_d8_w(p):
        raise ArithmeticError(f"D8 count inconsistent for {p}")
    return closed


def count_u2(p: CountingParams) -> int:
    return 2 ** (p.n + 2) - 1
