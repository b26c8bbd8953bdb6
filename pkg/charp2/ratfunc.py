"""
Rational functions in F2(t).
"""

import random
from dataclasses import dataclass
from tokenize import TokenError

from django.core.exceptions import ValidationError
from sympy import Poly, Symbol, fraction, together
from sympy.core.sympify import SympifyError
from sympy.parsing.sympy_parser import (
    convert_xor,
    implicit_multiplication_application,
    parse_expr,
    standard_transformations,
)
from sympy.polys.polyerrors import PolynomialError

from . import polynomials as P

t_symbol = Symbol("t")
TRANSFORMATIONS = standard_transformations + (implicit_multiplication_application, convert_xor)


@dataclass(frozen=True)
class RatFunc2:
    """num/den in lowest terms; den is nonzero and, over F2, automatically monic."""

    num: int
    den: int = 1

    @classmethod
    def of(cls, num: int, den: int = 1) -> "RatFunc2":
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            return cls(0, 1)
        g = P.pgcd(num, den)
        return cls(P.pdivmod(num, g)[0], P.pdivmod(den, g)[0])

    @classmethod
    def poly(cls, f: int) -> "RatFunc2":
        return cls(f, 1)

    @classmethod
    def t(cls) -> "RatFunc2":
        return cls(P.T, 1)

    @classmethod
    def coerce(cls, value) -> "RatFunc2":
        if isinstance(value, RatFunc2):
            return value
        if isinstance(value, int):
            return cls(value % 2, 1)
        return parse_ratfunc(value)

    @property
    def is_zero(self) -> bool:
        return self.num == 0

    @property
    def is_polynomial(self) -> bool:
        return self.den == 1

    def __add__(self, other):
        other = _operand(other)
        if other is None:
            return NotImplemented
        if self.den == other.den:
            return RatFunc2.of(self.num ^ other.num, self.den)
        return RatFunc2.of(P.pmul(self.num, other.den) ^ P.pmul(other.num, self.den), P.pmul(self.den, other.den))

    __radd__ = __add__
    __sub__ = __add__
    __rsub__ = __add__

    def __neg__(self):
        return self

    def __mul__(self, other):
        other = _operand(other)
        if other is None:
            return NotImplemented
        return RatFunc2.of(P.pmul(self.num, other.num), P.pmul(self.den, other.den))

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc2":
        if self.is_zero:
            raise ZeroDivisionError("zero has no inverse in F2(t)")
        return RatFunc2(self.den, self.num)

    def __truediv__(self, other):
        return self * RatFunc2.coerce(other).inverse()

    def __rtruediv__(self, other):
        return RatFunc2.coerce(other) * self.inverse()

    def __pow__(self, exponent: int) -> "RatFunc2":
        if exponent < 0:
            return self.inverse() ** -exponent
        return RatFunc2(P.ppow(self.num, exponent), P.ppow(self.den, exponent))

    def square(self) -> "RatFunc2":
        return RatFunc2(P.square(self.num), P.square(self.den))

    def __str__(self):
        if self.den == 1:
            return P.render(self.num)
        num = P.render(self.num)
        den = P.render(self.den)
        if not P.is_monomial(self.num) and self.num != 1:
            num = f"({num})"
        if not P.is_monomial(self.den):
            den = f"({den})"
        return f"{num}/{den}"


def _operand(value) -> RatFunc2 | None:
    if isinstance(value, (RatFunc2, int, str)):
        return RatFunc2.coerce(value)
    return None


ZERO = RatFunc2(0, 1)
ONE = RatFunc2(1, 1)


def wp(f) -> RatFunc2:
    """The Artin-Schreier operator f^2 + f."""
    f = RatFunc2.coerce(f)
    return f.square() + f


def parse_ratfunc(text) -> RatFunc2:
    """
    Parse a literal such as "(t^3+1)/(t^2+t)" into F2(t).

    Raises:
        ValidationError: malformed literal, foreign symbols or a denominator vanishing mod 2
    """
    source = str(text).strip()
    if not source:
        raise ValidationError("Empty rational function literal.")
    try:
        expr = parse_expr(source, local_dict={"t": t_symbol}, transformations=TRANSFORMATIONS)
        num, den = fraction(together(expr))
        if (num.free_symbols | den.free_symbols) - {t_symbol}:
            raise ValidationError(f"Only the variable t is allowed: {text!r}")
        num_mask = P.from_coefficients(Poly(num, t_symbol, modulus=2).all_coeffs())
        den_mask = P.from_coefficients(Poly(den, t_symbol, modulus=2).all_coeffs())
    except (SympifyError, SyntaxError, TypeError, PolynomialError, TokenError) as exc:
        raise ValidationError(f"Invalid rational function literal: {text!r}") from exc
    if not den_mask:
        raise ValidationError(f"Denominator of {text!r} vanishes modulo 2.")
    return RatFunc2.of(num_mask, den_mask)


def random_ratfunc(rng: random.Random, max_degree: int = 4, poles: bool = True) -> RatFunc2:
    num = rng.getrandbits(max_degree + 1)
    den = 1
    if poles:
        den = rng.getrandbits(max_degree) | (1 << rng.randint(0, max_degree - 1))
    return RatFunc2.of(num, den)
