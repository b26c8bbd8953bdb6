"""
Elements of Q2(sqrt a) and of E = Q2(sqrt a, sqrt c).

Radicands are integer square-class representatives; coordinates are
Dyadics, exact whenever they come from rationals.
"""

from dataclasses import dataclass
from fractions import Fraction

from sympy import factorint

from dyadic.number import ONE, ZERO, Dyadic, agrees, as_dyadic, expansion, rational_sqrt
from exceptions import PreconditionViolation

KEEP_CHOICES = ("a", "c", "ac")


def _size(coords) -> float:
    """Smallest valuation among nonzero coordinates; larger means smaller element."""
    valuations = [x.valuation for x in coords if not x.is_zero]
    return min(valuations) if valuations else float("inf")


@dataclass(frozen=True)
class QuadElement:
    a: int
    x: Dyadic
    y: Dyadic

    @classmethod
    def of(cls, a: int, x=0, y=0) -> "QuadElement":
        return cls(a, as_dyadic(x), as_dyadic(y))

    @property
    def is_zero(self) -> bool:
        return self.x.is_zero and self.y.is_zero

    @property
    def is_rational(self) -> bool:
        return self.y.is_zero

    @property
    def size(self) -> float:
        return _size((self.x, self.y))

    def _check(self, other: "QuadElement"):
        if self.a != other.a:
            raise PreconditionViolation(f"radicands differ: {self.a} vs {other.a}")

    def __add__(self, other):
        if not isinstance(other, QuadElement):
            return QuadElement(self.a, self.x + other, self.y)
        self._check(other)
        return QuadElement(self.a, self.x + other.x, self.y + other.y)

    __radd__ = __add__

    def __neg__(self):
        return QuadElement(self.a, -self.x, -self.y)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, QuadElement):
            return self.scale(other)
        self._check(other)
        return QuadElement(
            self.a,
            self.x * other.x + self.y * other.y * self.a,
            self.x * other.y + self.y * other.x,
        )

    __rmul__ = __mul__

    def scale(self, factor) -> "QuadElement":
        return QuadElement(self.a, self.x * factor, self.y * factor)

    def halve(self) -> "QuadElement":
        return self.scale(Fraction(1, 2))

    def conjugate(self) -> "QuadElement":
        return QuadElement(self.a, self.x, -self.y)

    def norm(self) -> Dyadic:
        return norm_quad(self)

    def inverse(self) -> "QuadElement":
        n = self.norm()
        if n.is_zero:
            raise ZeroDivisionError("inverse of a zero QuadElement")
        return self.conjugate().scale(n.inverse())

    def __truediv__(self, other):
        if not isinstance(other, QuadElement):
            return self.scale(as_dyadic(other).inverse())
        return self * other.inverse()

    def trace(self) -> Dyadic:
        return self.x + self.x

    def __str__(self):
        return render_coordinates([self.x, self.y], [1, self.a])


def norm_quad(e: QuadElement) -> Dyadic:
    """x^2 - a y^2."""
    return e.x * e.x - e.y * e.y * e.a


@dataclass(frozen=True)
class BiquadElement:
    """x0 + x1 sqrt(a) + x2 sqrt(c) + x3 sqrt(ac)."""

    a: int
    c: int
    coords: tuple[Dyadic, Dyadic, Dyadic, Dyadic]

    @classmethod
    def of(cls, a: int, c: int, *coords) -> "BiquadElement":
        padded = list(coords) + [0] * (4 - len(coords))
        return cls(a, c, tuple(as_dyadic(x) for x in padded))

    @classmethod
    def lift(cls, q: QuadElement, a: int, c: int) -> "BiquadElement":
        """Embed an element of Q2(sqrt a), Q2(sqrt c) or Q2(sqrt ac)."""
        if q.a == a:
            return cls(a, c, (q.x, q.y, ZERO, ZERO))
        if q.a == c:
            return cls(a, c, (q.x, ZERO, q.y, ZERO))
        if q.a == a * c:
            return cls(a, c, (q.x, ZERO, ZERO, q.y))
        raise PreconditionViolation(f"radicand {q.a} is not one of {a}, {c}, {a * c}")

    @classmethod
    def constant(cls, value, a: int, c: int) -> "BiquadElement":
        return cls(a, c, (as_dyadic(value), ZERO, ZERO, ZERO))

    @property
    def is_zero(self) -> bool:
        return all(x.is_zero for x in self.coords)

    @property
    def size(self) -> float:
        return _size(self.coords)

    def _check(self, other: "BiquadElement"):
        if (self.a, self.c) != (other.a, other.c):
            raise PreconditionViolation("elements of different biquadratic fields")

    def __add__(self, other):
        if not isinstance(other, BiquadElement):
            other = BiquadElement.constant(other, self.a, self.c)
        self._check(other)
        return BiquadElement(self.a, self.c, tuple(x + y for x, y in zip(self.coords, other.coords)))

    __radd__ = __add__

    def __neg__(self):
        return BiquadElement(self.a, self.c, tuple(-x for x in self.coords))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, BiquadElement):
            return self.scale(other)
        self._check(other)
        a, c = self.a, self.c
        x0, x1, x2, x3 = self.coords
        y0, y1, y2, y3 = other.coords
        return BiquadElement(
            a,
            c,
            (
                x0 * y0 + x1 * y1 * a + x2 * y2 * c + x3 * y3 * (a * c),
                x0 * y1 + x1 * y0 + (x2 * y3 + x3 * y2) * c,
                x0 * y2 + x2 * y0 + (x1 * y3 + x3 * y1) * a,
                x0 * y3 + x3 * y0 + x1 * y2 + x2 * y1,
            ),
        )

    __rmul__ = __mul__

    def scale(self, factor) -> "BiquadElement":
        factor = as_dyadic(factor)
        return BiquadElement(self.a, self.c, tuple(x * factor for x in self.coords))

    def sigma_a(self) -> "BiquadElement":
        x0, x1, x2, x3 = self.coords
        return BiquadElement(self.a, self.c, (x0, -x1, x2, -x3))

    def sigma_c(self) -> "BiquadElement":
        x0, x1, x2, x3 = self.coords
        return BiquadElement(self.a, self.c, (x0, x1, -x2, -x3))

    def sigma_ac(self) -> "BiquadElement":
        x0, x1, x2, x3 = self.coords
        return BiquadElement(self.a, self.c, (x0, -x1, -x2, x3))

    def inverse(self) -> "BiquadElement":
        """sigma_c(e) over the norm down to Q2(sqrt a)."""
        n = norm_partial(self, "a")
        if n.is_zero:
            raise ZeroDivisionError("inverse of a zero BiquadElement")
        return self.sigma_c() * BiquadElement.lift(n.inverse(), self.a, self.c)

    def __truediv__(self, other):
        if not isinstance(other, BiquadElement):
            return self.scale(as_dyadic(other).inverse())
        return self * other.inverse()

    def __pow__(self, exponent: int) -> "BiquadElement":
        result = BiquadElement.constant(ONE, self.a, self.c)
        for _ in range(exponent):
            result = result * self
        return result

    def __str__(self):
        return render_coordinates(list(self.coords), [1, self.a, self.c, self.a * self.c])


def norm_partial(e: BiquadElement, keep: str = "a") -> QuadElement:
    """
    e times its conjugate under the automorphism fixing the kept
    quadratic subfield; the result lies in that subfield.
    """
    if keep not in KEEP_CHOICES:
        raise PreconditionViolation(f"keep must be one of {KEEP_CHOICES}")
    u, v, r = split_over(e, keep)
    return u * u - (v * v).scale(r)


def split_over(e: BiquadElement, keep: str) -> tuple[QuadElement, QuadElement, int]:
    """
    (u, v, r) with e = u + v sqrt(r), u and v in the kept subfield. Norms
    computed as u^2 - r v^2 carry no coordinate that cancels structurally.
    """
    x0, x1, x2, x3 = e.coords
    a, c = e.a, e.c
    if keep == "a":
        return QuadElement(a, x0, x1), QuadElement(a, x2, x3), c
    if keep == "c":
        return QuadElement(c, x0, x2), QuadElement(c, x1, x3), a
    # sqrt(c) = sqrt(a) sqrt(ac) / a
    return QuadElement(a * c, x0, x3), QuadElement(a * c, x1, x2 * Fraction(1, a)), a


def norm_full(e: BiquadElement) -> Dyadic:
    return norm_quad(norm_partial(e, "a"))


def elements_agree(x: QuadElement | BiquadElement, y: QuadElement | BiquadElement) -> bool:
    """Coordinate-wise agreement to the precision the coordinates carry."""
    x._check(y)
    if isinstance(x, QuadElement):
        pairs = ((x.x, y.x), (x.y, y.y))
    else:
        pairs = zip(x.coords, y.coords)
    return all(agrees(p, q) for p, q in pairs)


def render_coefficient(x: Dyadic) -> str:
    if x.exact is not None:
        return str(x.exact)
    return f"({expansion(x, 8)})"


def square_free_part(m: int) -> tuple[int, int]:
    """(k, m0) with m = k^2 m0 and m0 square-free."""
    k, m0 = 1, 1 if m > 0 else -1
    for p, e in factorint(abs(m)).items():
        k *= p ** (e // 2)
        m0 *= p ** (e % 2)
    return k, m0


def render_coordinates(coords: list[Dyadic], radicands: list[int]) -> str:
    """
    Render sum(coords[k] sqrt(radicands[k])), e.g. "4+√2+√10" or
    "(1/3)√10". Square factors leave the root: √-50 renders as 5√-2.
    """
    terms = []
    for x, m in zip(coords, radicands):
        if x.is_zero:
            continue
        k, m0 = square_free_part(m)
        label = "" if m0 == 1 else f"√{m0}"
        text = render_coefficient(x * k)
        if label:
            if text in ("1", "-1"):
                text = text[:-1] + label
            elif "/" in text and not text.startswith("("):
                text = f"({text}){label}"
            else:
                text = f"{text}{label}"
        terms.append(text)
    if not terms:
        return "0"
    return "+".join(terms).replace("+-", "-")


def _root_in(m: int, a: int, c: int) -> BiquadElement:
    for index, n in ((1, a), (2, c), (3, a * c)):
        k = rational_sqrt(Fraction(m, n))
        if k is not None:
            coords = [0, 0, 0, 0]
            coords[index] = k
            return BiquadElement.of(a, c, *coords)
    raise PreconditionViolation(f"√{m} is not a rational multiple of √{a}, √{c} or √{a * c}")


def rebase(e: BiquadElement, a: int, c: int) -> BiquadElement:
    """
    The element e of Q2(sqrt e.a, sqrt e.c) written over sqrt a, sqrt c.
    Each of e.a, e.c must be a rational square times one of a, c, ac.
    """
    if (e.a, e.c) == (a, c):
        return e
    root_a, root_c = _root_in(e.a, a, c), _root_in(e.c, a, c)
    x0, x1, x2, x3 = e.coords
    return (
        BiquadElement.constant(x0, a, c)
        + root_a.scale(x1)
        + root_c.scale(x2)
        + (root_a * root_c).scale(x3)
    )
