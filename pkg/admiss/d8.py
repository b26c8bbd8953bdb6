"""
D8 = U_3(F2) extensions over Q2 from unordered admissible pairs {a, b}.

For delta_1 in Q2(sqrt a) with norm class b, L = E(sqrt delta_1) with
E = Q2(sqrt a, sqrt b). The compatible W for a pair are the classes of
delta_0 k in E^x/(E^x)^2, k running over the norm kernel of Q2(sqrt a).
"""

import logging
from dataclasses import dataclass

from dyadic.number import Dyadic, sqrt_hensel
from exceptions import IdentityViolation
from quadext.elements import QuadElement, norm_quad
from quadext.search import d8_second_generator, kernel_norm_classes_quad, solve_norm_quad
from quadext.squares import in_squares_or_twist

from .pairs import UnorderedPair

logger = logging.getLogger(__name__)

W_PER_PAIR = 2


@dataclass(frozen=True)
class D8Extension:
    pair: UnorderedPair
    delta1: QuadElement
    d: Dyadic
    delta2: QuadElement | None
    fingerprint: tuple[int, ...]

    @property
    def b_value(self) -> int:
        return self.pair.b.representative()


def same_d8_class(x: QuadElement, y: QuadElement, b_value: int) -> bool:
    """[x] = [y] in E^x/(E^x)^2 for E = Q2(sqrt a, sqrt b)."""
    return in_squares_or_twist(x * y, b_value)


def enumerate_d8(pair: UnorderedPair, cap=None) -> list[D8Extension]:
    b_value = pair.b.representative()
    seed = solve_norm_quad(pair.a, pair.b, cap)
    kernel = kernel_norm_classes_quad(pair.a, cap)
    coset = [seed * k for k in kernel]

    groups: list[list[int]] = []
    for index, element in enumerate(coset):
        for group in groups:
            if same_d8_class(coset[group[0]], element, b_value):
                group.append(index)
                break
        else:
            groups.append([index])
    if len(groups) != W_PER_PAIR:
        raise IdentityViolation(f"{pair}: {len(groups)} classes of delta_1 instead of {W_PER_PAIR}")

    extensions = []
    for group in groups:
        members = [coset[k] for k in group]
        delta1 = next((m for m in members if not m.x.is_zero), members[0])
        d = sqrt_hensel(norm_quad(delta1) / b_value)
        delta2 = d8_second_generator(delta1, pair.b, d) if not delta1.x.is_zero else None
        extensions.append(D8Extension(pair, delta1, d, delta2, tuple(group)))
    logger.debug("%s: delta_1 classes %s", pair, [str(e.delta1) for e in extensions])
    return extensions
