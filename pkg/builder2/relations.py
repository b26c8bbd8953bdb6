"""
Symbolic checks of the Galois action in characteristic 2.

For a triple with generator delta in E = F(theta_a, theta_c):

    sigma_c(delta) = delta + A      sigma_a(delta) = delta + C
    sigma_a(A) = A + b + wp(d)      sigma_c(C) = C + b + wp(d)

and for D8 the second generator delta_2 = x + a theta_b + ab + ad^2 with
delta_1 + delta_2 = wp(theta_a theta_b) + wp(d theta_a).
"""

import itertools
import logging
from dataclasses import dataclass

from admiss.relations import RelationReport
from charp2.artin_schreier import ap_normal_form, same_class
from charp2.ratfunc import RatFunc2, wp
from charp2.tower import ASTowerElement, trace_down, wp_solve, wp_tower
from exceptions import IdentityViolation, PreconditionViolation

from .pairs import Char2Triple

logger = logging.getLogger(__name__)


def d8_second_generator_char2(d1: ASTowerElement, b, d) -> ASTowerElement:
    """
    delta_2 in F(theta_b) for delta_1 = x + y theta_a with y = b + wp(d).

    Raises:
        PreconditionViolation: d1 is not of level 1 or y != b + wp(d)
        IdentityViolation: the defining identity fails in F(theta_a, theta_b)
    """
    b, d = RatFunc2.coerce(b), RatFunc2.coerce(d)
    if d1.level != 1:
        raise PreconditionViolation("delta_1 must lie in F(theta_a)")
    (a,) = d1.radicands
    x, y = d1.coords
    if y != b + wp(d):
        raise PreconditionViolation(f"theta_a coefficient {y} is not b + wp(d)")

    delta2 = ASTowerElement.of((b,), x + a * b + a * d.square(), a)

    tower = (a, b)
    theta_a = ASTowerElement.theta(0, tower)
    theta_b = ASTowerElement.theta(1, tower)
    lhs = ASTowerElement.lift(d1, tower) + ASTowerElement.of(tower, delta2.coords[0], 0, delta2.coords[1])
    rhs = wp_tower(theta_a * theta_b) + wp_tower(theta_a * d)
    if lhs != rhs:
        raise IdentityViolation("delta_1 + delta_2 != wp(theta_a theta_b) + wp(d theta_a)")
    return delta2


def verify_d8_relations_char2(d1: ASTowerElement, b, d) -> RelationReport:
    """Action on delta_1 in E = F(theta_a, theta_b) and on its root theta_delta."""
    b, d = RatFunc2.coerce(b), RatFunc2.coerce(d)
    (a,) = d1.radicands
    tower = (a, b)
    delta = ASTowerElement.lift(d1, tower)
    theta_b = ASTowerElement.theta(1, tower)
    shift = b + wp(d)

    report = RelationReport()
    report.results["sigma_a(delta) = delta + b + wp(d)"] = delta.sigma(0) == delta + shift
    report.results["sigma_b(delta) = delta"] = delta.sigma(1) == delta
    report.results["wp(theta_b + d) = b + wp(d)"] = wp_tower(theta_b + d) == ASTowerElement.constant(shift, tower)
    report.results["[Tr(delta_1)] = [b]"] = same_class(trace_down(d1).coords[0], b)
    return report


def verify_u4_relations(t: Char2Triple) -> RelationReport:
    delta, A, C = t.delta, t.A, t.C
    shift = ASTowerElement.constant(t.b + wp(t.d), delta.radicands)

    report = RelationReport()
    report.results["sigma_c(delta) = delta + A"] = delta.sigma(1) == delta + A
    report.results["sigma_a(delta) = delta + C"] = delta.sigma(0) == delta + C
    report.results["sigma_a(A) = A + b + wp(d)"] = A.sigma(0) == A + shift
    report.results["sigma_c(C) = C + b + wp(d)"] = C.sigma(1) == C + shift
    report.results["[sigma_a(A) + A] = [b]"] = same_class((A.sigma(0) + A).coords[0], t.b)
    if not report.passed:
        failed = [name for name, ok in report.results.items() if not ok]
        logger.warning("%s: relations failed %s; Tr(delta) = %s", t.pair, failed, ap_normal_form(t.trace()))
    return report


@dataclass(frozen=True)
class Char2OrbitMember:
    eps_a: int
    eps_c: int
    eps_b: int
    element: ASTowerElement


def class_nonzero_in_E(e: ASTowerElement) -> bool:
    """[e] != 0 in E/wp(E)."""
    return wp_solve(e) is None


def generator_orbit_char2(t: Char2Triple) -> list[Char2OrbitMember]:
    """delta + eA A + eC C + eb b for the 8 sign patterns; each has trace class [b]."""
    b_element = ASTowerElement.constant(t.b, t.delta.radicands)
    members = []
    for eps_a, eps_c, eps_b in itertools.product((0, 1), repeat=3):
        element = t.delta
        for eps, summand in ((eps_a, t.A), (eps_c, t.C), (eps_b, b_element)):
            if eps:
                element = element + summand
        if not same_class(element.full_trace(), t.b):
            raise IdentityViolation(f"orbit member ({eps_a},{eps_c},{eps_b}) lost trace class [{t.b}]")
        members.append(Char2OrbitMember(eps_a, eps_c, eps_b, element))
    return members


def orbit_classes_distinct(members: list[Char2OrbitMember]) -> bool:
    return all(class_nonzero_in_E(x.element + y.element) for x, y in itertools.combinations(members, 2))
