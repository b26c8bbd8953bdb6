"""
Catalogs of the U_2, D8 = U_3 and U_4 Galois extensions of Q2.

A tower is described by the radicands whose square roots generate it over
its base field, together with the admissibility data it came from.
"""

import logging
from dataclasses import dataclass, field

from admiss.d8 import enumerate_d8
from admiss.pairs import enumerate_admissible_pairs, enumerate_unordered_pairs
from admiss.triples import enumerate_triples
from dyadic.square_class import SquareClass

logger = logging.getLogger(__name__)

GROUPS = ("u2", "u3", "u4")
BASE_Q2 = "Q2"
BASE_K = "Q2(√-1,√2,√5)"


@dataclass
class TowerDescription:
    group: str
    base: str
    label: str
    generators: list[str]
    b_class: list[int] = field(default_factory=list)
    V: list[list[int]] = field(default_factory=list)
    w_fingerprint: list[int] = field(default_factory=list)

    def tower(self) -> str:
        roots = ", ".join(f"√{g}" if _atomic(g) else f"√({g})" for g in self.generators)
        return f"{self.base}({roots})"


@dataclass
class Catalog:
    group: str
    base: str
    entries: list[TowerDescription]


def _atomic(radicand: str) -> bool:
    body = radicand[1:] if radicand.startswith("-") else radicand
    return body.isdigit()


def _bits(cls: SquareClass) -> list[int]:
    return list(cls.bits)


def u2_catalog() -> Catalog:
    entries = [
        TowerDescription("u2", BASE_Q2, f"L{k}", [str(cls.representative())], _bits(cls))
        for k, cls in enumerate(SquareClass.nontrivial(), start=1)
    ]
    return Catalog("u2", BASE_Q2, entries)


def u3_catalog(cap=None) -> Catalog:
    """Q2(sqrt delta_1, sqrt b) for the two W of every unordered pair {a, b}."""
    entries = []
    for pair in enumerate_unordered_pairs():
        for ext in enumerate_d8(pair, cap):
            entries.append(
                TowerDescription(
                    "u3",
                    BASE_Q2,
                    f"L{len(entries) + 1}",
                    [str(ext.delta1), str(ext.b_value)],
                    _bits(pair.b),
                    [_bits(pair.a), _bits(pair.b)],
                    list(ext.fingerprint),
                )
            )
    logger.info("u3 catalog: %d towers", len(entries))
    return Catalog("u3", BASE_Q2, entries)


def u4_catalog(cap=None) -> Catalog:
    """
    K(sqrt alpha, sqrt gamma, sqrt(alpha + gamma)) when the generator of W was
    found in sum shape, K(sqrt delta, sqrt A, sqrt C) otherwise.
    """
    entries = []
    for pair in enumerate_admissible_pairs():
        for t in enumerate_triples(pair, cap):
            generators = t.shape_generators() or [str(t.delta), str(t.A), str(t.C)]
            entries.append(
                TowerDescription(
                    "u4",
                    BASE_K,
                    f"L{len(entries) + 1}",
                    generators,
                    _bits(pair.b),
                    [_bits(v) for v in pair.V.basis],
                    list(t.fingerprint),
                )
            )
    logger.info("u4 catalog: %d towers", len(entries))
    return Catalog("u4", BASE_K, entries)


def build_catalog(group: str, cap=None) -> Catalog:
    if group == "u2":
        return u2_catalog()
    if group == "u3":
        return u3_catalog(cap)
    if group == "u4":
        return u4_catalog(cap)
    raise ValueError(f"unknown group {group!r}; expected one of {GROUPS}")
