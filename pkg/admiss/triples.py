"""
Admissible triples ([b], V, W) over Q2 and their enumeration.

W is the F2[Gal(E/Q2)]-module generated by [delta] in E^x/(E^x)^2; as a
group it is spanned by [delta], [A], [C], [b] where A and C are the partial
norms of delta to Q2(sqrt a) and Q2(sqrt c).
"""

import itertools
import logging
import math
from dataclasses import dataclass, field, replace
from fractions import Fraction
from functools import cached_property, lru_cache

from dyadic.number import Dyadic, sqrt_hensel
from dyadic.square_class import SquareClass, square_class
from exceptions import IdentityViolation, PrecisionExhausted, PreconditionViolation
from quadext.elements import BiquadElement, QuadElement, norm_full, norm_partial, square_free_part
from quadext.search import candidates, kernel_norm_classes, solve_norm_biquad
from quadext.squares import is_square_in_E

from .pairs import AdmissiblePair

logger = logging.getLogger(__name__)

ORBIT_SIZE = 8
SHAPE_CANDIDATES = 10


@dataclass(frozen=True)
class OrbitMember:
    eps_a: int
    eps_c: int
    eps_b: int
    element: BiquadElement


@dataclass(frozen=True)
class Summand:
    """
    sign sqrt(b / N) (x + y sqrt m0) in Q2(sqrt radicand), radicand = k^2 m0,
    N = x^2 - m0 y^2. sqrt is the canonical root; the norm is b exactly.
    """

    radicand: int
    x: int
    y: int
    b_value: int
    sign: int = 1

    @property
    def quotient(self) -> Fraction:
        _, m0 = square_free_part(self.radicand)
        return Fraction(self.b_value, self.x * self.x - m0 * self.y * self.y)

    @property
    def scale(self) -> Dyadic:
        return sqrt_hensel(self.quotient) * self.sign

    def element(self) -> QuadElement:
        k, _ = square_free_part(self.radicand)
        s = self.scale
        return QuadElement(self.radicand, s * self.x, s * Fraction(self.y, k))

    def __str__(self):
        _, m0 = square_free_part(self.radicand)
        s = self.scale
        if s.is_exact:
            return str(QuadElement.of(m0, s.exact * self.x, s.exact * self.y))
        prefix = "-" if self.sign < 0 else ""
        return f"{prefix}√({self.quotient})({QuadElement.of(m0, self.x, self.y)})"


@dataclass(frozen=True)
class AdmissibleTriple:
    pair: AdmissiblePair
    delta: BiquadElement
    d: Dyadic
    fingerprint: tuple[int, ...] = ()
    alpha: Summand | None = field(default=None, compare=False)
    gamma: Summand | None = field(default=None, compare=False)

    @classmethod
    def build(cls, pair: AdmissiblePair, delta: BiquadElement, **extra) -> "AdmissibleTriple":
        """Recover d from Nm(delta) = b d^2."""
        b_value = pair.b.representative()
        d = sqrt_hensel(norm_full(delta) / b_value)
        return cls(pair, delta, d, **extra)

    @property
    def b_value(self) -> int:
        return self.pair.b.representative()

    @cached_property
    def A(self) -> BiquadElement:
        e = self.delta
        return BiquadElement.lift(norm_partial(e, "a"), e.a, e.c)

    @cached_property
    def C(self) -> BiquadElement:
        e = self.delta
        return BiquadElement.lift(norm_partial(e, "c"), e.a, e.c)

    @property
    def b_element(self) -> BiquadElement:
        return BiquadElement.constant(self.b_value, self.delta.a, self.delta.c)

    def module_generators(self) -> list[BiquadElement]:
        return [self.delta, self.A, self.C, self.b_element]

    def module_elements(self) -> list[BiquadElement]:
        """The 16 products spanning W as a group, identity first."""
        return list(self._span)

    @cached_property
    def _span(self) -> tuple[BiquadElement, ...]:
        elements = [BiquadElement.of(self.delta.a, self.delta.c, 1)]
        for g in self.module_generators():
            elements += [x * g for x in elements]
        return tuple(elements)

    @cached_property
    def orbit(self) -> tuple[OrbitMember, ...]:
        return tuple(generator_orbit(self))

    def norm_class(self) -> SquareClass:
        return square_class(norm_full(self.delta))

    def is_free(self) -> bool:
        """[delta], [A], [C], [b] independent in E^x/(E^x)^2."""
        return not any(is_square_in_E(x) for x in self.module_elements()[1:])

    def validate(self):
        if self.norm_class() != self.pair.b:
            raise PreconditionViolation(f"Nm(delta) has class {self.norm_class()}, not {self.pair.b}")
        if not self.is_free():
            raise PreconditionViolation("W is not free of rank one")

    def contains(self, element: BiquadElement) -> bool:
        return any(is_square_in_E(element * w) for w in self.module_elements())

    def shape_generators(self) -> list[str]:
        """[alpha, gamma, alpha + gamma] as text; empty without a sum shape."""
        if self.alpha is None:
            return []
        gamma = str(self.gamma)
        joiner = "" if gamma.startswith("-") else "+"
        return [str(self.alpha), gamma, f"{self.alpha}{joiner}{gamma}"]


def generator_orbit(t: AdmissibleTriple) -> list[OrbitMember]:
    """delta A^eA C^eC b^eb for the 8 sign patterns; each has norm class b."""
    members = []
    for eps_a, eps_c, eps_b in itertools.product((0, 1), repeat=3):
        element = t.delta * (t.A**eps_a) * (t.C**eps_c) * (t.b_element**eps_b)
        if square_class(norm_full(element)) != t.pair.b:
            raise IdentityViolation(f"orbit member ({eps_a},{eps_c},{eps_b}) lost norm class {t.pair.b}")
        members.append(OrbitMember(eps_a, eps_c, eps_b, element))
    return members


def same_module(t: AdmissibleTriple, delta: BiquadElement) -> bool:
    """delta generates the W of t: its class is one of the 8 orbit classes."""
    return any(is_square_in_E(delta * m.element) for m in t.orbit)


def _subfield_pairs(a: int, c: int) -> tuple[tuple[int, int], ...]:
    return ((a, c), (a, a * c), (c, a * c))


@lru_cache(maxsize=None)
def shaped_summands(radicand: int, b_value: int, cap=None) -> tuple[Summand, ...]:
    """
    Summands of norm exactly b in Q2(sqrt radicand) over the first
    SHAPE_CANDIDATES coprime pairs (x, y), y > 0, both signs.
    """
    _, m0 = square_free_part(radicand)
    b = square_class(b_value)
    found: list[Summand] = []
    for x, y in candidates(2, cap):
        if y <= 0 or math.gcd(x, y) != 1:
            continue
        n = x * x - m0 * y * y
        if n and square_class(n) == b:
            found += [Summand(radicand, x, y, b_value), Summand(radicand, x, y, b_value, -1)]
            if len(found) == 2 * SHAPE_CANDIDATES:
                break
    return tuple(found)


def _accept_shape(t: AdmissibleTriple, lifted: list[BiquadElement], delta: BiquadElement) -> bool:
    """alpha, gamma in W and <alpha, gamma, delta, b> = W."""
    if not all(t.contains(x) for x in lifted):
        return False
    span = [BiquadElement.of(delta.a, delta.c, 1)]
    for g in lifted + [delta, t.b_element]:
        span += [x * g for x in span]
    return not any(is_square_in_E(x) for x in span[1:])


def _place_shape(triples: list[AdmissibleTriple], alpha: Summand, gamma: Summand) -> int | None:
    """Index of the open triple whose W alpha + gamma generates in sum shape."""
    pair = triples[0].pair
    a, c = pair.radicands
    lifted = [BiquadElement.lift(s.element(), a, c) for s in (alpha, gamma)]
    delta = lifted[0] + lifted[1]
    if square_class(norm_full(delta)) != pair.b:
        return None
    for k, t in enumerate(triples):
        if same_module(t, delta):
            if t.alpha is None and _accept_shape(t, lifted, delta):
                return k
            return None
    return None


def attach_shapes(triples: list[AdmissibleTriple], cap=None) -> list[AdmissibleTriple]:
    """
    Attach to each triple a pair of summands alpha, gamma of norm b whose
    sum generates its W. Summands are drawn from any two of the three
    quadratic subfields of E.
    """
    if not triples:
        return triples
    pair = triples[0].pair
    a, c = pair.radicands
    b_value = pair.b.representative()
    result = list(triples)
    combos = itertools.chain.from_iterable(
        itertools.product(shaped_summands(m1, b_value, cap), shaped_summands(m2, b_value, cap))
        for m1, m2 in _subfield_pairs(a, c)
    )
    for alpha, gamma in combos:
        if all(t.alpha is not None for t in result):
            break
        try:
            k = _place_shape(result, alpha, gamma)
        except PrecisionExhausted as err:
            logger.debug("%s: %s + %s skipped: %s", pair, alpha, gamma, err)
            continue
        if k is not None:
            result[k] = replace(result[k], alpha=alpha, gamma=gamma)
    shaped = sum(t.alpha is not None for t in result)
    if shaped < len(result):
        logger.warning("%s: %d of %d generators in sum shape", pair, shaped, len(result))
    return result


def enumerate_triples(pair: AdmissiblePair, cap=None) -> list[AdmissibleTriple]:
    """
    The 4 admissible triples over a pair: the seed delta_0 times the 32
    norm-kernel classes, cut into 8-element generator orbits. Each triple
    carries the sorted kernel tags of its orbit as fingerprint.
    """
    seed = solve_norm_biquad(pair.V.basis, pair.b, cap)
    kernel = kernel_norm_classes(pair.V.basis, cap)
    remaining = {rep.tag: seed * rep.element for rep in kernel}
    triples = []
    while remaining:
        tag = min(remaining)
        triple = AdmissibleTriple.build(pair, remaining[tag])
        tags = []
        for member in generator_orbit(triple):
            match = next(
                (t for t, x in remaining.items() if t not in tags and is_square_in_E(member.element * x)),
                None,
            )
            if match is None:
                raise IdentityViolation(f"orbit member of tag {tag} left the norm coset")
            tags.append(match)
        for t in tags:
            del remaining[t]
        triples.append(replace(triple, fingerprint=tuple(sorted(tags))))
        logger.debug("%s: W with fingerprint %s", pair, sorted(tags))
    return attach_shapes(triples, cap)
