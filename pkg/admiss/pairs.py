import itertools
import logging
from dataclasses import dataclass

from dyadic.hilbert import hilbert
from dyadic.square_class import SquareClass, class_dim, coerce_class
from exceptions import PreconditionViolation

from .subspaces import Subspace, as_subspace, planes

logger = logging.getLogger(__name__)


def is_admissible_pair(b, V) -> bool:
    """
    dim V = 2, b outside V, and (b, v) = 0 for every v in V.
    """
    b = coerce_class(b)
    V = as_subspace(V)
    if V.dim != 2 or b in V:
        return False
    return all(hilbert(b, v) == 0 for v in V.nontrivial_members())


@dataclass(frozen=True)
class AdmissiblePair:
    b: SquareClass
    V: Subspace

    def __post_init__(self):
        if not is_admissible_pair(self.b, self.V):
            raise PreconditionViolation(f"({self.b}, {self.V}) is not admissible")

    @classmethod
    def of(cls, b, V) -> "AdmissiblePair":
        return cls(coerce_class(b), as_subspace(V))

    @property
    def radicands(self) -> tuple[int, int]:
        return self.V.radicands()

    def __str__(self):
        return f"b={self.b} V={self.V}"


def enumerate_admissible_pairs() -> list[AdmissiblePair]:
    """All admissible pairs over Q2, ordered by the bit vector of b."""
    found = [
        AdmissiblePair(b, V)
        for b in sorted(SquareClass.nontrivial())
        for V in planes()
        if is_admissible_pair(b, V)
    ]
    logger.debug("%d admissible pairs", len(found))
    return found


@dataclass(frozen=True, order=True)
class UnorderedPair:
    """
    {a, b} with (a, b) = 0 and dim <a, b> = 2. The smaller class (by bit
    vector) is the radicand a of the first generator delta_1.
    """

    a: SquareClass
    b: SquareClass

    def __post_init__(self):
        if self.b < self.a:
            raise PreconditionViolation("store unordered pairs with a < b")
        if class_dim([self.a, self.b]) != 2 or hilbert(self.a, self.b):
            raise PreconditionViolation(f"{{{self.a}, {self.b}}} is not admissible")

    @classmethod
    def of(cls, x, y) -> "UnorderedPair":
        x, y = sorted((coerce_class(x), coerce_class(y)))
        return cls(x, y)

    def __str__(self):
        return f"{{{self.a}, {self.b}}}"


def is_admissible_unordered(x, y) -> bool:
    x, y = coerce_class(x), coerce_class(y)
    return class_dim([x, y]) == 2 and hilbert(x, y) == 0


def enumerate_unordered_pairs() -> list[UnorderedPair]:
    return [
        UnorderedPair(x, y)
        for x, y in itertools.combinations(sorted(SquareClass.nontrivial()), 2)
        if is_admissible_unordered(x, y)
    ]
