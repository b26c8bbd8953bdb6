"""
Square roots and square tests in Q2(sqrt a) and in E = Q2(sqrt a, sqrt c).

Both levels use the same descent. For z = p + q sqrt(r) with q != 0, a
root s + t sqrt(r) satisfies s^2 + r t^2 = p and 2st = q, so
s^2 = (p +- sqrt(Nm z)) / 2 for one choice of sign, and t = q / 2s. The
sign yielding less cancellation is tried, its partner being
r q^2 / (4 s^2). When q = 0, z is a square iff z or z / r is a square one
level down.
"""

import logging
from fractions import Fraction

from dyadic.number import ZERO, sqrt_hensel
from dyadic.square_class import is_square
from exceptions import PrecisionExhausted, PreconditionViolation

from .elements import BiquadElement, QuadElement, norm_quad, split_over

logger = logging.getLogger(__name__)


def _larger_branch(plus, minus, size):
    """
    Of the two descent branches, the one of smaller valuation. A branch
    whose subtraction cancels every known digit is skipped.
    """
    branches = []
    for compute in (plus, minus):
        try:
            value = compute()
        except PrecisionExhausted:
            continue
        if not value.is_zero:
            branches.append(value)
    if not branches:
        raise PrecisionExhausted("descent lost all digits")
    return min(branches, key=size)


def quad_sqrt(z: QuadElement) -> QuadElement | None:
    """A square root of z in Q2(sqrt a), or None if z is not a square."""
    p, q, a = z.x, z.y, z.a
    if q.is_zero:
        if p.is_zero:
            return z
        if is_square(p):
            return QuadElement(a, sqrt_hensel(p), ZERO)
        scaled = p / a
        if is_square(scaled):
            return QuadElement(a, ZERO, sqrt_hensel(scaled))
        return None

    n = norm_quad(z)
    if n.is_zero:
        raise PrecisionExhausted("norm vanished to working precision")
    if not is_square(n):
        return None
    r = sqrt_hensel(n)
    w = _larger_branch(
        lambda: (p + r) * Fraction(1, 2), lambda: (p - r) * Fraction(1, 2), lambda w: w.valuation
    )
    if is_square(w):
        s = sqrt_hensel(w)
    elif is_square(w / a):
        s = sqrt_hensel(q * q * a / (w * 4))
    else:
        return None
    return QuadElement(a, s, q / (s * 2))


def in_squares_or_twist(z: QuadElement, c: int) -> bool:
    """z in K^2 or c K^2, K = Q2(sqrt a)."""
    return quad_sqrt(z) is not None or quad_sqrt(z.scale(Fraction(1, c))) is not None


def is_square_in_E(e: BiquadElement) -> bool:
    """
    Decide e in (E^x)^2 by descent through K = Q2(sqrt a): writing
    e = u + v sqrt(c) with u, v in K, e is a square iff Nm_{E/K}(e) = y^2
    and (u + y) / 2 lies in K^2 or c K^2.
    """
    if e.is_zero:
        raise PreconditionViolation("zero is not a unit of E")
    u, v, _ = split_over(e, "a")
    if v.is_zero:
        return in_squares_or_twist(u, e.c)

    y = quad_sqrt(u * u - v * v * e.c)
    if y is None:
        return False
    z = _larger_branch(lambda: (u + y).halve(), lambda: (u - y).halve(), lambda z: z.size)
    return in_squares_or_twist(z, e.c)


def same_class_in_E(x: BiquadElement, y: BiquadElement) -> bool:
    """[x] = [y] in E^x / (E^x)^2, tested on the product."""
    return is_square_in_E(x * y)
