"""
Classes in F/wp(F) for F = F2(t).

Every class has a unique representative

    e + (odd-degree polynomial) + sum over monic irreducible p of
        sum over odd k of c_{p,k} / p^k,   deg c_{p,k} < deg p,

with e in F2. It is reached from the partial-fraction decomposition by
trading even pole orders and even monomials for lower ones using wp-shifts.
"""

import itertools
import logging
from dataclasses import dataclass

from exceptions import PreconditionViolation

from . import polynomials as P
from .ratfunc import ZERO, RatFunc2

logger = logging.getLogger(__name__)

MAX_INDEPENDENCE_SIZE = 4


def partial_fractions(f: RatFunc2) -> tuple[int, dict[int, dict[int, int]]]:
    """
    f = poly + sum_p sum_k c_{p,k} / p^k with deg c_{p,k} < deg p. Returns
    (poly, {p: {k: c_{p,k}}}).
    """
    poly, remainder = P.pdivmod(f.num, f.den)
    poles: dict[int, dict[int, int]] = {}
    if not remainder:
        return poly, poles
    for p, e in P.factor(f.den):
        block = P.ppow(p, e)
        cofactor = P.pdivmod(f.den, block)[0]
        part = P.pmod(P.pmul(remainder, P.pinvmod(cofactor, block)), block)
        terms = {}
        for k in range(e, 0, -1):
            part, digit = P.pdivmod(part, p)
            if digit:
                terms[k] = digit
        if terms:
            poles[p] = terms
    return poly, poles


@dataclass(frozen=True)
class APClass:
    const_bit: int
    poly_part: int
    pole_parts: tuple[tuple[int, tuple[tuple[int, int], ...]], ...] = ()

    @property
    def is_zero(self) -> bool:
        return not (self.const_bit or self.poly_part or self.pole_parts)

    def poles(self) -> dict[int, dict[int, int]]:
        return {p: dict(terms) for p, terms in self.pole_parts}

    def __add__(self, other: "APClass") -> "APClass":
        poles = self.poles()
        for p, terms in other.pole_parts:
            block = poles.setdefault(p, {})
            for k, c in terms:
                block[k] = block.get(k, 0) ^ c
        return _pack(self.const_bit ^ other.const_bit, self.poly_part ^ other.poly_part, poles)

    def representative(self) -> RatFunc2:
        f = RatFunc2.poly(self.poly_part ^ self.const_bit)
        for p, terms in self.pole_parts:
            for k, c in terms:
                f = f + RatFunc2.of(c, P.ppow(p, k))
        return f

    def __str__(self):
        terms = []
        if self.const_bit:
            terms.append("1")
        for i in range(1, P.degree(self.poly_part) + 1):
            if (self.poly_part >> i) & 1:
                terms.append(P.render(1 << i))
        for p, block in self.pole_parts:
            for k, c in block:
                terms.append(_render_pole(c, p, k))
        return " + ".join(terms) if terms else "0"


def _render_pole(c: int, p: int, k: int) -> str:
    num = P.render(c) if P.is_monomial(c) else f"({P.render(c)})"
    den = P.render(p) if P.is_monomial(p) else f"({P.render(p)})"
    if k > 1:
        den = f"{den}^{k}"
    return f"{num}/{den}"


def _pack(const_bit: int, poly_part: int, poles: dict[int, dict[int, int]]) -> APClass:
    packed = tuple(
        (p, tuple(sorted((k, c) for k, c in terms.items() if c)))
        for p, terms in sorted(poles.items())
        if any(terms.values())
    )
    return APClass(const_bit, poly_part, packed)


def ap_reduce(f) -> tuple[APClass, RatFunc2]:
    """(nf, g) with f = nf.representative() + wp(g)."""
    f = RatFunc2.coerce(f)
    poly, poles = partial_fractions(f)
    shift = ZERO

    for p, terms in poles.items():
        top = max(terms)
        for k in range(top, 1, -1):
            c = terms.get(k, 0)
            if k % 2 or not c:
                continue
            # c/p^k + wp(g/p^(k/2)) = ((c + g^2)/p)/p^(k-1) + g/p^(k/2)
            g = P.sqrt_mod(c, p)
            carry = P.pdivmod(c ^ P.square(g), p)[0]
            del terms[k]
            terms[k - 1] = terms.get(k - 1, 0) ^ carry
            terms[k // 2] = terms.get(k // 2, 0) ^ g
            shift = shift + RatFunc2.of(g, P.ppow(p, k // 2))

    for i in range(P.degree(poly), 1, -1):
        if i % 2 == 0 and (poly >> i) & 1:
            poly ^= (1 << i) | (1 << (i // 2))
            shift = shift + RatFunc2.poly(1 << (i // 2))

    nf = _pack(poly & 1, poly & ~1, poles)
    return nf, shift


def ap_normal_form(f) -> APClass:
    return ap_reduce(f)[0]


def wp_preimage(f) -> RatFunc2 | None:
    """g with wp(g) = f, or None when f is not in wp(F2(t))."""
    nf, g = ap_reduce(f)
    return g if nf.is_zero else None


def same_class(f, g) -> bool:
    return ap_normal_form(RatFunc2.coerce(f) + RatFunc2.coerce(g)).is_zero


def classes_independent(elements) -> bool:
    """No nonempty subset sums to the zero class of F/wp(F)."""
    elements = [RatFunc2.coerce(x) for x in elements]
    if len(elements) > MAX_INDEPENDENCE_SIZE:
        raise PreconditionViolation(f"at most {MAX_INDEPENDENCE_SIZE} elements, got {len(elements)}")
    forms = [ap_normal_form(x) for x in elements]
    for size in range(1, len(forms) + 1):
        for subset in itertools.combinations(forms, size):
            total = subset[0]
            for nf in subset[1:]:
                total = total + nf
            if total.is_zero:
                logger.debug("dependent classes: %s", [str(x) for x in subset])
                return False
    return True


def in_class_span(f, generators) -> bool:
    """[f] lies in the F2-span of the classes of the generators."""
    target = ap_normal_form(f)
    forms = [ap_normal_form(g) for g in generators]
    zero = ap_normal_form(ZERO)
    for bits in itertools.product((0, 1), repeat=len(forms)):
        total = zero
        for bit, nf in zip(bits, forms):
            if bit:
                total = total + nf
        if total == target:
            return True
    return False


def is_nonzero_class(f) -> bool:
    return not ap_normal_form(f).is_zero

