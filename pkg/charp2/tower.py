"""
Artin-Schreier towers F2(t)(theta_1, ..., theta_k) with theta_i^2 = theta_i + r_i.

Coordinates are indexed by subsets of the thetas: bit i of the index
selects theta_i. The last radicand is the top of the tower, so the first
half of the coordinates is the sub-tower and the second half its theta-multiple.
"""

import logging
from dataclasses import dataclass

from exceptions import PreconditionViolation

from .artin_schreier import ap_reduce
from .ratfunc import ONE, ZERO, RatFunc2

logger = logging.getLogger(__name__)


def _add(x, y):
    return tuple(u + v for u, v in zip(x, y))


def _scale(x, f):
    return tuple(u * f for u in x)


def _mul(x, y, radicands):
    if not radicands:
        return (x[0] * y[0],)
    half = len(x) // 2
    u, v = x[:half], x[half:]
    u2, v2 = y[:half], y[half:]
    lower, r = radicands[:-1], radicands[-1]
    uu = _mul(u, u2, lower)
    vv = _mul(v, v2, lower)
    cross = _add(_mul(u, v2, lower), _mul(v, u2, lower))
    return _add(uu, _scale(vv, r)) + _add(cross, vv)


@dataclass(frozen=True)
class ASTowerElement:
    radicands: tuple[RatFunc2, ...]
    coords: tuple[RatFunc2, ...]

    def __post_init__(self):
        if len(self.coords) != 1 << len(self.radicands):
            raise PreconditionViolation(
                f"{len(self.coords)} coordinates for a tower of level {len(self.radicands)}"
            )

    @classmethod
    def of(cls, radicands, *coords) -> "ASTowerElement":
        radicands = tuple(RatFunc2.coerce(r) for r in radicands)
        size = 1 << len(radicands)
        padded = [RatFunc2.coerce(c) for c in coords] + [ZERO] * (size - len(coords))
        return cls(radicands, tuple(padded))

    @classmethod
    def constant(cls, value, radicands) -> "ASTowerElement":
        return cls.of(radicands, value)

    @classmethod
    def theta(cls, index: int, radicands) -> "ASTowerElement":
        coords = [ZERO] * (1 << len(radicands))
        coords[1 << index] = ONE
        return cls.of(radicands, *coords)

    @classmethod
    def lift(cls, e: "ASTowerElement", radicands) -> "ASTowerElement":
        """Embed e into a tower whose radicands extend e.radicands."""
        radicands = tuple(RatFunc2.coerce(r) for r in radicands)
        if radicands[: e.level] != e.radicands:
            raise PreconditionViolation("radicands of e are not a prefix of the target tower")
        return cls.of(radicands, *e.coords)

    @property
    def level(self) -> int:
        return len(self.radicands)

    @property
    def is_zero(self) -> bool:
        return all(c.is_zero for c in self.coords)

    def _coerce(self, other) -> "ASTowerElement":
        if isinstance(other, ASTowerElement):
            if other.radicands != self.radicands:
                raise PreconditionViolation("elements of different towers")
            return other
        return ASTowerElement.constant(other, self.radicands)

    def __add__(self, other):
        other = self._coerce(other)
        return ASTowerElement(self.radicands, _add(self.coords, other.coords))

    __radd__ = __add__
    __sub__ = __add__

    def __neg__(self):
        return self

    def __mul__(self, other):
        if isinstance(other, (RatFunc2, int, str)):
            return ASTowerElement(self.radicands, _scale(self.coords, RatFunc2.coerce(other)))
        other = self._coerce(other)
        return ASTowerElement(self.radicands, _mul(self.coords, other.coords, self.radicands))

    __rmul__ = __mul__

    def sigma(self, index: int) -> "ASTowerElement":
        """theta_index -> theta_index + 1, other thetas fixed."""
        bit = 1 << index
        coords = list(self.coords)
        for j, c in enumerate(self.coords):
            if j & bit:
                coords[j ^ bit] = coords[j ^ bit] + c
        return ASTowerElement(self.radicands, tuple(coords))

    def trace(self, index: int) -> "ASTowerElement":
        """e + sigma_index(e), as an element of the tower without theta_index."""
        bit = 1 << index
        low = bit - 1
        radicands = self.radicands[:index] + self.radicands[index + 1 :]
        compressed = [ZERO] * (len(self.coords) // 2)
        for j, c in enumerate(self.coords):
            if j & bit:
                compressed[(j & low) | ((j >> (index + 1)) << index)] = c
        return ASTowerElement(radicands, tuple(compressed))

    def full_trace(self) -> RatFunc2:
        e = self
        while e.level:
            e = trace_down(e)
        return e.coords[0]

    def in_base(self) -> bool:
        return all(c.is_zero for c in self.coords[1:])

    def __str__(self):
        terms = []
        for j, c in enumerate(self.coords):
            if c.is_zero:
                continue
            thetas = "".join(f"θ{i + 1}" for i in range(self.level) if j >> i & 1)
            coefficient = str(c)
            if thetas and c != ONE:
                coefficient = f"({coefficient})" if "+" in coefficient else coefficient
                terms.append(f"{coefficient}·{thetas}")
            else:
                terms.append(thetas or coefficient)
        return " + ".join(terms) if terms else "0"


def wp_tower(e: ASTowerElement) -> ASTowerElement:
    return e * e + e


def trace_down(e: ASTowerElement) -> ASTowerElement:
    """Trace to the sub-tower one level down: x + y theta_top -> y."""
    if e.level < 1:
        raise PreconditionViolation("trace_down needs a tower of level at least 1")
    return e.trace(e.level - 1)


def wp_solve(e: ASTowerElement) -> ASTowerElement | None:
    """
    g with wp(g) = e, or None. Descends the tower: for e = u + v theta with
    wp(theta) = r, wp(p + q theta) = (wp(p) + q^2 r) + wp(q) theta, and the
    solutions of wp(q) = v are q and q + 1 when the radicands are independent.
    """
    if e.level == 0:
        nf, g = ap_reduce(e.coords[0])
        return ASTowerElement.of((), g) if nf.is_zero else None
    half = len(e.coords) // 2
    lower, r = e.radicands[:-1], e.radicands[-1]
    u = ASTowerElement(lower, e.coords[:half])
    v = ASTowerElement(lower, e.coords[half:])
    q = wp_solve(v)
    if q is None:
        return None
    for candidate in (q, q + ONE):
        p = wp_solve(u + candidate * candidate * r)
        if p is not None:
            return ASTowerElement(e.radicands, p.coords + candidate.coords)
    return None


def in_wp_image(e: ASTowerElement) -> bool:
    return wp_solve(e) is not None
