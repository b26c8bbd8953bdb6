"""
The square-class group Q2^x / (Q2^x)^2 with ordered basis ([-1], [2], [5]).
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import ClassVar

from exceptions import PrecisionExhausted, PreconditionViolation

from .number import CLASS_DIGITS, Dyadic, two_valuation

# odd residue mod 8 -> (e_-1, e_5)
_UNIT_BITS = {1: (0, 0), 3: (1, 1), 5: (0, 1), 7: (1, 0)}


@dataclass(frozen=True, order=True)
class SquareClass:
    bits: tuple[int, int, int] = (0, 0, 0)

    BASIS: ClassVar[tuple[int, int, int]] = (-1, 2, 5)

    @classmethod
    def from_mask(cls, mask: int) -> "SquareClass":
        return cls(((mask >> 2) & 1, (mask >> 1) & 1, mask & 1))

    @classmethod
    def all(cls) -> list["SquareClass"]:
        return [cls.from_mask(m) for m in range(8)]

    @classmethod
    def nontrivial(cls) -> list["SquareClass"]:
        return [cls.from_mask(m) for m in range(1, 8)]

    @property
    def mask(self) -> int:
        e_m1, e_2, e_5 = self.bits
        return (e_m1 << 2) | (e_2 << 1) | e_5

    @property
    def is_trivial(self) -> bool:
        return self.mask == 0

    def representative(self) -> int:
        """The integer (-1)^e1 * 2^e2 * 5^e5."""
        e_m1, e_2, e_5 = self.bits
        return (-1) ** e_m1 * 2**e_2 * 5**e_5

    def __mul__(self, other: "SquareClass") -> "SquareClass":
        return SquareClass.from_mask(self.mask ^ other.mask)

    def __str__(self):
        return f"[{self.representative()}]"


def _class_of_integer(n: int) -> SquareClass:
    v = two_valuation(n)
    e_m1, e_5 = _UNIT_BITS[(n >> v) % 8]
    return SquareClass((e_m1, v % 2, e_5))


def square_class(x) -> SquareClass:
    """
    Square class of a nonzero 2-adic number.

    Accepts a Dyadic, an int or a Fraction; rationals skip the Dyadic
    conversion since [p/q] = [pq].
    """
    if isinstance(x, SquareClass):
        return x
    if isinstance(x, (int, Fraction)):
        q = Fraction(x)
        if q == 0:
            raise PreconditionViolation("zero has no square class")
        return _class_of_integer(q.numerator * q.denominator)
    if x.is_zero:
        if x.exact is not None:
            raise PreconditionViolation("zero has no square class")
        raise PrecisionExhausted(f"value is zero modulo 2^{x.valuation}")
    if x.exact is not None:
        return square_class(x.exact)
    if x.precision < CLASS_DIGITS:
        raise PrecisionExhausted(f"only {x.precision} unit digits known")
    e_m1, e_5 = _UNIT_BITS[x.unit % 8]
    return SquareClass((e_m1, x.valuation % 2, e_5))


def is_square(x) -> bool:
    return square_class(x).is_trivial


def class_span(classes) -> set[SquareClass]:
    """All products of subsets of the given classes."""
    span = {SquareClass()}
    for cls in classes:
        span |= {member * cls for member in span}
    return span


def class_dim(classes) -> int:
    return len(class_span(classes)).bit_length() - 1


def coerce_class(value) -> SquareClass:
    if isinstance(value, SquareClass):
        return value
    if isinstance(value, Dyadic):
        return square_class(value)
    return square_class(Fraction(value))
