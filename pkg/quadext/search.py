"""
Deterministic small-height searches: norm equations in Q2(sqrt a) and E,
and representatives of the norm kernel on square classes.

Candidates have integer coordinates in {0, +-1, ..., +-H}, visited ring by
ring (max |coordinate| = H) with H doubling up to the search cap.
"""

import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction

from django.conf import settings

from dyadic.hilbert import hilbert
from dyadic.number import agrees, as_dyadic
from dyadic.square_class import SquareClass, class_dim, coerce_class, square_class
from exceptions import IdentityViolation, NotSolvable, PreconditionViolation, SearchExhausted

from .elements import BiquadElement, QuadElement, elements_agree, norm_quad
from .squares import is_square_in_E, quad_sqrt

logger = logging.getLogger(__name__)

KERNEL_SIZE = 32
QUAD_KERNEL_SIZE = 4


def default_search_cap() -> int:
    return getattr(settings, "UNIPOTENT", {}).get("SEARCH_CAP", 32)


def _ordered(height: int) -> list[int]:
    values = [0]
    for h in range(1, height + 1):
        values += [h, -h]
    return values


def candidates(dims: int, cap: int | None = None):
    """Integer coordinate tuples by increasing height, the zero tuple excluded."""
    cap = cap or default_search_cap()
    previous = 0
    height = 1
    while True:
        height = min(height, cap)
        logger.debug("search height %d (%d coordinates)", height, dims)
        for coords in itertools.product(_ordered(height), repeat=dims):
            if max(abs(x) for x in coords) > previous:
                yield coords
        if height >= cap:
            return
        previous = height
        height *= 2


@dataclass(frozen=True)
class EClassRep:
    element: BiquadElement
    tag: int


def _radicand(value) -> int:
    return coerce_class(value).representative()


def solve_norm_quad(a, b, cap: int | None = None) -> QuadElement:
    """delta in Q2(sqrt a) whose norm has square class b."""
    a, b = coerce_class(a), coerce_class(b)
    if a.is_trivial:
        raise PreconditionViolation("radicand class must be nontrivial")
    if hilbert(a, b):
        raise NotSolvable(f"{b} is not a norm from Q2(√{a.representative()})")
    ra = a.representative()
    for x, y in candidates(2, cap):
        n = x * x - ra * y * y
        if n and square_class(n) == b:
            return QuadElement.of(ra, x, y)
    raise SearchExhausted(f"no element of norm class {b} found", bound=cap or default_search_cap())


def d8_second_generator(d1: QuadElement, b, d) -> QuadElement:
    """
    Given delta_1 = x + y sqrt(a) with Nm(delta_1) = b d^2 exactly, return
    delta_2 = 2(x + d sqrt(b)). The identity
    (x + y sqrt a + d sqrt b)^2 = 2 (x + y sqrt a)(x + d sqrt b)
    is re-checked in Q2(sqrt a, sqrt b).
    """
    b_value = b.representative() if isinstance(b, SquareClass) else Fraction(b)
    if isinstance(b_value, Fraction) and b_value.denominator == 1:
        b_value = int(b_value)
    d = as_dyadic(d)
    if d1.x.is_zero:
        raise PreconditionViolation("delta_1 = y sqrt(a) has x = 0")
    if not agrees(norm_quad(d1), d * d * b_value):
        raise PreconditionViolation("Nm(delta_1) != b d^2")

    a = d1.a
    witness = BiquadElement.of(a, b_value, d1.x, d1.y, d)
    second = QuadElement(b_value, d1.x, d)
    lhs = witness * witness
    rhs = (BiquadElement.lift(d1, a, b_value) * BiquadElement.lift(second, a, b_value)).scale(2)
    if not elements_agree(lhs, rhs):
        raise IdentityViolation("(x+y√a+d√b)^2 != 2(x+y√a)(x+d√b)")
    return second.scale(2)


def int_norm_full(a: int, c: int, coords) -> int:
    """Nm_{E/Q2} of an integer-coordinate element, computed exactly."""
    x0, x1, x2, x3 = coords
    real = x0 * x0 + a * x1 * x1 - c * (x2 * x2 + a * x3 * x3)
    imag = 2 * x0 * x1 - 2 * c * x2 * x3
    return real * real - a * imag * imag


def _check_plane(V) -> tuple[int, int]:
    a, c = (coerce_class(v) for v in V)
    if class_dim([a, c]) != 2:
        raise PreconditionViolation(f"{a} and {c} do not span a plane")
    return a.representative(), c.representative()


def solve_norm_biquad(V, b, cap: int | None = None) -> BiquadElement:
    """
    delta in E = Q2(sqrt V) whose full norm has square class b. Elements
    alpha + gamma (alpha in Q2(sqrt a), gamma in Q2(sqrt c)) are tried
    before general four-coordinate elements.
    """
    from admiss.pairs import is_admissible_pair

    b = coerce_class(b)
    if not is_admissible_pair(b, V):
        raise PreconditionViolation(f"({b}, V) is not admissible")
    ra, rc = _check_plane(V)
    for shape in (3, 4):
        for coords in candidates(shape, cap):
            coords = tuple(coords) + (0,) * (4 - shape)
            n = int_norm_full(ra, rc, coords)
            if n and square_class(n) == b:
                logger.debug("norm class %s reached by %s", b, coords)
                return BiquadElement.of(ra, rc, *coords)
    raise SearchExhausted(f"no element of norm class {b} found", bound=cap or default_search_cap())


def kernel_norm_classes(V, cap: int | None = None) -> list[EClassRep]:
    """
    Representatives of the 32 classes of E^x/(E^x)^2 whose full norm is a
    square. Tags are bitmasks over the kernel basis in discovery order.
    """
    ra, rc = _check_plane(V)
    group = [EClassRep(BiquadElement.of(ra, rc, 1), 0)]
    for coords in candidates(4, cap):
        n = int_norm_full(ra, rc, coords)
        if n == 0 or not square_class(n).is_trivial:
            continue
        candidate = BiquadElement.of(ra, rc, *coords)
        if any(is_square_in_E(candidate * rep.element) for rep in group):
            continue
        bit = len(group)
        group += [EClassRep(rep.element * candidate, rep.tag | bit) for rep in group]
        logger.debug("kernel class generator %s, %d classes", coords, len(group))
        if len(group) == KERNEL_SIZE:
            return group
    raise SearchExhausted(
        f"found only {len(group)} of {KERNEL_SIZE} kernel classes", bound=cap or default_search_cap()
    )


def kernel_norm_classes_quad(a, cap: int | None = None) -> list[QuadElement]:
    """The 4 classes of Q2(sqrt a)^x / squares with square norm."""
    ra = _radicand(a)
    group = [QuadElement.of(ra, 1)]
    for x, y in candidates(2, cap):
        n = x * x - ra * y * y
        if n == 0 or not square_class(n).is_trivial:
            continue
        candidate = QuadElement.of(ra, x, y)
        if any(quad_sqrt(candidate * g) is not None for g in group):
            continue
        group += [g * candidate for g in group]
        if len(group) == QUAD_KERNEL_SIZE:
            return group
    raise SearchExhausted(
        f"found only {len(group)} of {QUAD_KERNEL_SIZE} kernel classes", bound=cap or default_search_cap()
    )


def identify_class(element: BiquadElement, kernel: list[EClassRep], base: BiquadElement | None = None) -> int:
    """Tag t with [element] = [base * kernel[t]]."""
    target = element if base is None else element * base
    for rep in kernel:
        if is_square_in_E(target * rep.element):
            return rep.tag
    raise PreconditionViolation("element does not lie in the given kernel coset")


def square_class_dim(radicands=()) -> int:
    """dim of E^x/(E^x)^2 for E = Q2 adjoined square roots of the radicands."""
    classes = [coerce_class(r) for r in radicands]
    if len(classes) > 2 or class_dim(classes) != len(classes):
        raise PreconditionViolation("radicands must be independent and at most two")
    return 2 ** len(classes) + 2
