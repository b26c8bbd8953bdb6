"""
Admissible pairs and triples over F = F2(t).

A pair ([b], V = <[a], [c]>) is admissible when [a], [c], [b] are
independent in F/wp(F). For E = F(theta_a, theta_c) the element
delta = b theta_a theta_c has Tr_{E/F}(delta) = b, so every admissible
pair carries the triple generated by it.
"""

import logging
from dataclasses import dataclass, field

from charp2.artin_schreier import classes_independent, in_class_span
from charp2.ratfunc import ZERO, RatFunc2, wp
from charp2.tower import ASTowerElement, trace_down, wp_tower
from exceptions import PreconditionViolation

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Char2Pair:
    b: RatFunc2
    V: tuple[RatFunc2, RatFunc2]

    def __post_init__(self):
        if not classes_independent([*self.V, self.b]):
            raise PreconditionViolation(f"([{self.b}], <[{self.V[0]}], [{self.V[1]}]>) is not admissible")

    @classmethod
    def of(cls, b, a, c) -> "Char2Pair":
        return cls(RatFunc2.coerce(b), (RatFunc2.coerce(a), RatFunc2.coerce(c)))

    @property
    def a(self) -> RatFunc2:
        return self.V[0]

    @property
    def c(self) -> RatFunc2:
        return self.V[1]

    @property
    def radicands(self) -> tuple[RatFunc2, RatFunc2]:
        return self.V

    def __str__(self):
        return f"b={self.b} V=<{self.a}, {self.c}>"


def b_class_survives(pair: Char2Pair) -> bool:
    """[b]_E != 0, i.e. [b]_F lies outside <[a]_F, [c]_F>."""
    return not in_class_span(pair.b, pair.V)


@dataclass(frozen=True)
class Char2Triple:
    pair: Char2Pair
    delta: ASTowerElement
    d: RatFunc2 = field(default=ZERO)

    @property
    def b(self) -> RatFunc2:
        return self.pair.b

    @property
    def A(self) -> ASTowerElement:
        """Tr_{E/F(theta_a)}(delta), embedded in E."""
        return ASTowerElement.lift(trace_down(self.delta), self.pair.radicands)

    @property
    def C(self) -> ASTowerElement:
        """Tr_{E/F(theta_c)}(delta), embedded in E with theta_c in the second slot."""
        down = self.delta.trace(0)
        return ASTowerElement.of(self.pair.radicands, down.coords[0], ZERO, down.coords[1])

    def trace(self) -> RatFunc2:
        return self.delta.full_trace()

    def trace_condition(self) -> bool:
        """Tr_{E/F}(delta) = b + wp(d) exactly."""
        return self.trace() == self.b + wp(self.d)

    def validate(self):
        if self.delta.radicands != self.pair.radicands:
            raise PreconditionViolation("delta does not live in E = F(theta_a, theta_c)")
        if not self.trace_condition():
            raise PreconditionViolation(f"Tr(delta) = {self.trace()} differs from b + wp(d)")
        if not b_class_survives(self.pair):
            raise PreconditionViolation(f"[{self.b}] vanishes in E")


def make_delta(pair: Char2Pair) -> Char2Triple:
    radicands = pair.radicands
    theta_a = ASTowerElement.theta(0, radicands)
    theta_c = ASTowerElement.theta(1, radicands)
    triple = Char2Triple(pair, pair.b * theta_a * theta_c, ZERO)
    triple.validate()
    logger.debug("%s: delta = %s", pair, triple.delta)
    return triple


def shift_by_wp(t: Char2Triple, h: ASTowerElement) -> Char2Triple:
    """delta + wp(h), with d moved by Tr_{E/F}(h) so the trace condition stays exact."""
    return Char2Triple(t.pair, t.delta + wp_tower(h), t.d + h.full_trace())
