import logging

from exceptions import PreconditionViolation

from .matrix import UnipotentMatrix, commutator, full_group, generate, standard_generators

logger = logging.getLogger(__name__)


def commutator_subgroup(n: int) -> frozenset[UnipotentMatrix]:
    elements = full_group(n)
    commutators = {commutator(x, y) for x in elements for y in elements}
    return generate(commutators)


def is_elementary_abelian(elements) -> bool:
    elements = list(elements)
    return all((x * x).is_identity for x in elements) and all(
        x * y == y * x for x in elements for y in elements
    )


def commutator_decomposition(n: int = 4) -> tuple[frozenset[UnipotentMatrix], tuple[UnipotentMatrix, ...]]:
    """
    Commutator subgroup Phi of U_n(F2) with its basis of iterated
    commutators of the standard generators. Raises AssertionError if Phi
    is not elementary abelian or the basis does not span it freely.
    """
    if n == 3:
        s1, s2 = standard_generators(3)
        basis = (commutator(s1, s2),)
    elif n == 4:
        s1, s2, s3 = standard_generators(4)
        basis = (commutator(s1, s2), commutator(s2, s3), commutator(commutator(s1, s2), s3))
    else:
        raise PreconditionViolation(f"no commutator basis recorded for n={n}")

    phi = commutator_subgroup(n)
    if not is_elementary_abelian(phi):
        raise AssertionError("commutator subgroup is not elementary abelian")
    if generate(basis) != phi or len(phi) != 2 ** len(basis):
        raise AssertionError("iterated commutators do not form a basis of Phi")
    logger.debug("commutator subgroup of U_%d has order %d", n, len(phi))
    return phi, basis


def modulo_phi(x: UnipotentMatrix) -> tuple[int, ...]:
    """Image in U_n / Phi, read off the superdiagonal."""
    return x.superdiagonal()
