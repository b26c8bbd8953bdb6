"""
Truncated 2-adic numbers.

A nonzero Dyadic is 2^valuation * unit, where unit is an odd integer known
modulo 2^precision. Values built from rationals also carry the exact
Fraction; arithmetic between exact operands stays exact, so zero tests and
rendering of rational coordinates never depend on truncation.
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction

from django.conf import settings

from exceptions import NotASquare, PrecisionExhausted

logger = logging.getLogger(__name__)

# a square class is decided by the unit modulo 8
CLASS_DIGITS = 3


def default_precision() -> int:
    return getattr(settings, "UNIPOTENT", {}).get("PRECISION", 64)


def two_valuation(n: int) -> int:
    """Exponent of 2 in a nonzero integer."""
    return (n & -n).bit_length() - 1


@dataclass(frozen=True)
class Dyadic:
    valuation: int
    unit: int
    precision: int
    exact: Fraction | None = None

    @classmethod
    def from_rational(cls, value, precision: int | None = None) -> "Dyadic":
        q = Fraction(value)
        if precision is None:
            precision = default_precision()
        if q == 0:
            return cls(0, 0, precision, q)
        num, den = q.numerator, q.denominator
        vn, vd = two_valuation(num), two_valuation(den)
        modulus = 1 << precision
        unit = (num >> vn) * pow(den >> vd, -1, modulus) % modulus
        return cls(vn - vd, unit, precision, q)

    @classmethod
    def zero_to(cls, bound: int) -> "Dyadic":
        """Zero known only modulo 2^bound."""
        return cls(bound, 0, 0, None)

    @property
    def is_zero(self) -> bool:
        if self.exact is not None:
            return self.exact == 0
        return self.unit == 0

    @property
    def is_exact(self) -> bool:
        return self.exact is not None

    @property
    def absolute_precision(self) -> float:
        if self.exact is not None:
            return math.inf
        return self.valuation + self.precision

    def unit_mod(self, bits: int) -> int:
        if bits <= self.precision:
            return self.unit % (1 << bits)
        if self.exact is None:
            raise PrecisionExhausted(
                f"{bits} unit digits requested, only {self.precision} known"
            )
        return Dyadic.from_rational(self.exact, bits).unit

    def digits(self, count: int) -> list[int]:
        return [(self.unit >> k) & 1 for k in range(count)]

    def __add__(self, other):
        other = as_dyadic(other)
        if self.exact is not None and other.exact is not None:
            return Dyadic.from_rational(
                self.exact + other.exact, min(self.precision, other.precision)
            )
        bound = int(min(self.absolute_precision, other.absolute_precision))
        terms = [x for x in (self, other) if not x.is_zero and x.valuation < bound]
        if not terms:
            raise PrecisionExhausted(f"sum vanished modulo 2^{bound}")
        low = min(x.valuation for x in terms)
        width = bound - low
        total = sum(x.unit_mod(bound - x.valuation) << (x.valuation - low) for x in terms)
        total %= 1 << width
        if total == 0:
            raise PrecisionExhausted(f"operands cancel modulo 2^{bound}")
        shift = two_valuation(total)
        return Dyadic(low + shift, total >> shift, width - shift)

    __radd__ = __add__

    def __neg__(self):
        if self.exact is not None:
            return Dyadic.from_rational(-self.exact, self.precision)
        if self.is_zero:
            return self
        return Dyadic(self.valuation, -self.unit % (1 << self.precision), self.precision)

    def __sub__(self, other):
        return self + (-as_dyadic(other))

    def __rsub__(self, other):
        return as_dyadic(other) - self

    def __mul__(self, other):
        other = as_dyadic(other)
        if self.exact is not None and other.exact is not None:
            return Dyadic.from_rational(
                self.exact * other.exact, min(self.precision, other.precision)
            )
        if self.exact == 0 or other.exact == 0:
            return Dyadic.from_rational(0)
        if self.is_zero or other.is_zero:
            bound = self.valuation + other.valuation
            return Dyadic.zero_to(bound)
        precision = min(x.precision for x in (self, other) if x.exact is None)
        modulus = 1 << precision
        unit = self.unit_mod(precision) * other.unit_mod(precision) % modulus
        return Dyadic(self.valuation + other.valuation, unit, precision)

    __rmul__ = __mul__

    def inverse(self) -> "Dyadic":
        if self.is_zero:
            raise ZeroDivisionError("inverse of a zero Dyadic")
        if self.exact is not None:
            return Dyadic.from_rational(1 / self.exact, self.precision)
        return Dyadic(
            -self.valuation, pow(self.unit, -1, 1 << self.precision), self.precision
        )

    def __truediv__(self, other):
        return self * as_dyadic(other).inverse()

    def __rtruediv__(self, other):
        return as_dyadic(other) * self.inverse()

    def __repr__(self):
        if self.exact is not None:
            return f"Dyadic({self.exact})"
        if self.is_zero:
            return f"Dyadic(O(2^{self.valuation}))"
        return f"Dyadic(2^{self.valuation}*{self.unit} + O(2^{self.absolute_precision}))"


ZERO = Dyadic(0, 0, 64, Fraction(0))
ONE = Dyadic(0, 1, 64, Fraction(1))


def as_dyadic(value) -> Dyadic:
    if isinstance(value, Dyadic):
        return value
    return Dyadic.from_rational(value)


def agrees(x, y) -> bool:
    """
    x = y to the precision the operands carry. Exact operands compare
    exactly; a difference that cancels every known digit counts as equal.
    """
    try:
        return (as_dyadic(x) - y).is_zero
    except PrecisionExhausted:
        return True


def add(x, y) -> Dyadic:
    return as_dyadic(x) + y


def mul(x, y) -> Dyadic:
    return as_dyadic(x) * y


def neg(x) -> Dyadic:
    return -as_dyadic(x)


def inv(x) -> Dyadic:
    return as_dyadic(x).inverse()


def rational_sqrt(q: Fraction) -> Fraction | None:
    if q <= 0:
        return None
    rn, rd = math.isqrt(q.numerator), math.isqrt(q.denominator)
    if rn * rn == q.numerator and rd * rd == q.denominator:
        return Fraction(rn, rd)
    return None


def _canonical(root: Dyadic) -> Dyadic:
    if root.unit % 4 == 3:
        return -root
    return root


def sqrt_hensel(x) -> Dyadic:
    """
    Square root by digit-wise Hensel lifting.

    Of the two roots the one whose unit is 1 mod 4 is returned. One unit
    digit is lost: the root is known modulo 2^(precision - 1).

    Raises:
        NotASquare: odd valuation or unit not 1 mod 8
        PrecisionExhausted: fewer than three unit digits known
    """
    x = as_dyadic(x)
    if x.is_zero:
        if x.exact is not None:
            return x
        raise PrecisionExhausted("square root of an unresolved zero")
    if x.valuation % 2:
        raise NotASquare(f"odd valuation {x.valuation}")
    if x.exact is None and x.precision < CLASS_DIGITS:
        raise PrecisionExhausted(f"only {x.precision} unit digits known")
    if x.unit_mod(CLASS_DIGITS) != 1:
        raise NotASquare(f"unit is {x.unit_mod(CLASS_DIGITS)} mod 8")

    if x.exact is not None:
        root = rational_sqrt(x.exact)
        if root is not None:
            return _canonical(Dyadic.from_rational(root, x.precision))

    precision = x.precision
    u = x.unit_mod(precision)
    r = 1
    for k in range(CLASS_DIGITS, precision):
        if (r * r - u) % (1 << (k + 1)):
            r += 1 << (k - 1)
    width = precision - 1
    r %= 1 << width
    return _canonical(Dyadic(x.valuation // 2, r, width))


def other_root(root: Dyadic) -> Dyadic:
    return -root


def _term(position: int) -> str:
    if position == 0:
        return "1"
    if position == 1:
        return "2"
    return f"2^{position}"


def expansion(x, digits: int) -> str:
    """Render the first `digits` 2-adic digits as "1+2^2+2^4+...". """
    x = as_dyadic(x)
    if x.is_zero:
        return "0"
    count = digits if x.exact is not None else min(digits, x.precision)
    unit = x.unit_mod(count)
    terms = [_term(x.valuation + k) for k in range(count) if (unit >> k) & 1]
    return "+".join(terms) + "+..."
