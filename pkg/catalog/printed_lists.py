"""
Cross-check of the published U_3 and U_4 tower lists against the
enumeration.

Each printed tower is rebuilt from its fixture coordinates and checked for
the norm class of its generators, for being distinct from the other towers
printed for the same pair, and for landing on one of the enumerated W.
"""

import itertools
import json
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from django.conf import settings

from admiss.d8 import enumerate_d8, same_d8_class
from admiss.pairs import AdmissiblePair, UnorderedPair, enumerate_admissible_pairs, enumerate_unordered_pairs
from admiss.triples import AdmissibleTriple, enumerate_triples, same_module
from dyadic.expansions import select_printed_root
from dyadic.number import sqrt_hensel
from dyadic.square_class import coerce_class, square_class
from exceptions import AlgebraError
from quadext.elements import BiquadElement, QuadElement, norm_full, norm_quad, rebase
from quadext.search import d8_second_generator

from .towers import BASE_K

logger = logging.getLogger(__name__)


def load_fixture(name: str):
    path = Path(settings.UNIPOTENT["FIXTURES_DIR"]) / name
    with open(path, encoding="utf-8") as handle:
        return json.load(handle)


def printed_roots() -> dict:
    """Printed 2-adic square roots keyed by radicand text."""
    return {
        item["radicand"]: select_printed_root(item["radicand"], item["printed"])
        for item in load_fixture("expansions.json")
    }


@dataclass
class EntryCheck:
    label: str
    text: str
    checks: dict[str, bool] = field(default_factory=dict)
    matched: str | None = None
    computed: str = ""
    error: str | None = None

    @property
    def passed(self) -> bool:
        return self.error is None and self.matched is not None and all(self.checks.values())

    def as_dict(self) -> dict:
        return {
            "label": self.label,
            "text": self.text,
            "checks": self.checks,
            "matched": self.matched,
            "computed": self.computed,
            "error": self.error,
            "passed": self.passed,
        }


@dataclass
class PrintedListReport:
    group: str
    entries: list[EntryCheck] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return bool(self.entries) and all(e.passed for e in self.entries)

    def failures(self) -> list[EntryCheck]:
        return [e for e in self.entries if not e.passed]

    def side_by_side(self) -> list[str]:
        return [f"{e.label:>4}  {e.text}  ->  {e.matched or '?'}  {e.computed}" for e in self.entries]

    def as_dict(self) -> dict:
        return {
            "group": self.group,
            "passed": self.passed,
            "entries": [e.as_dict() for e in self.entries],
        }


def _quad(radicand: int, item: dict) -> QuadElement:
    return QuadElement.of(radicand, Fraction(item["x"]), Fraction(item["y"]))


def _u3_labels(cap) -> dict[UnorderedPair, list]:
    computed, number = {}, 1
    for pair in enumerate_unordered_pairs():
        extensions = enumerate_d8(pair, cap)
        computed[pair] = [(f"L{number + k}", ext) for k, ext in enumerate(extensions)]
        number += len(extensions)
    return computed


def _to_pair_field(delta: QuadElement, b_printed: int, pair: UnorderedPair) -> QuadElement:
    """The printed generator moved to Q2(sqrt a) when it was printed over Q2(sqrt b)."""
    if square_class(delta.a) == pair.a:
        return delta
    d = sqrt_hensel(norm_quad(delta) / b_printed)
    return d8_second_generator(delta, b_printed, d)


def verify_u3(cap=None) -> PrintedListReport:
    report = PrintedListReport("u3")
    computed = _u3_labels(cap)
    number = 0
    for group in load_fixture("printed_u3.json")["groups"]:
        pair = UnorderedPair.of(*group["pair"])
        radicand, b_printed = group["radicand"], group["b"]
        deltas = [_quad(radicand, item) for item in group["entries"]]
        for k, (item, delta) in enumerate(zip(group["entries"], deltas)):
            number += 1
            check = EntryCheck(f"L{number}", item["text"])
            report.entries.append(check)
            try:
                check.checks["norm class is b"] = square_class(norm_quad(delta)) == coerce_class(b_printed)
                check.checks["distinct from the other tower of the pair"] = not any(
                    same_d8_class(delta, other, b_printed) for j, other in enumerate(deltas) if j != k
                )
                moved = _to_pair_field(delta, b_printed, pair)
                b_value = pair.b.representative()
                for label, ext in computed[pair]:
                    if same_d8_class(moved, ext.delta1, b_value):
                        check.matched = label
                        check.computed = f"Q2(√({ext.delta1}), √{b_value})"
                        break
            except AlgebraError as err:
                check.error = f"{type(err).__name__}: {err}"
    logger.info("u3 list: %d of %d towers confirmed", len(report.entries) - len(report.failures()), len(report.entries))
    return report


def _scaled(radicand: int, item: dict, roots: dict) -> QuadElement:
    element = _quad(radicand, item)
    if "scale" in item:
        root = roots[item["scale"]]
        if item.get("scale_power", 1) < 0:
            root = root.inverse()
        element = element.scale(root)
    return element


def _u4_labels(cap) -> dict[AdmissiblePair, list]:
    computed, number = {}, 1
    for pair in enumerate_admissible_pairs():
        triples = enumerate_triples(pair, cap)
        computed[pair] = [(f"L{number + k}", t) for k, t in enumerate(triples)]
        number += len(triples)
    return computed


def verify_u4(cap=None) -> PrintedListReport:
    """
    Each printed tower K(sqrt alpha, sqrt gamma, sqrt(alpha + gamma)) is
    rebuilt with the printed square roots, moved onto the basis of the
    enumerated pair and matched against the enumerated W.
    """
    report = PrintedListReport("u4")
    roots = printed_roots()
    computed = _u4_labels(cap)
    for group in load_fixture("printed_u4.json")["groups"]:
        pair = AdmissiblePair.of(group["b"], group["V"])
        a_printed, c_printed = group["V"]
        a, c = pair.radicands
        deltas = []
        for label, (alpha_item, gamma_item) in zip(
            group["labels"], itertools.product(group["alphas"], group["gammas"])
        ):
            check = EntryCheck(label, f"K(√({alpha_item['text']}), √({gamma_item['text']}), √(α+γ))")
            report.entries.append(check)
            try:
                alpha = _scaled(a_printed, alpha_item, roots)
                gamma = _scaled(c_printed, gamma_item, roots)
                delta = BiquadElement.lift(alpha, a_printed, c_printed) + BiquadElement.lift(gamma, a_printed, c_printed)
                delta = rebase(delta, a, c)
                check.checks["Nm(alpha) has class b"] = square_class(norm_quad(alpha)) == pair.b
                check.checks["Nm(gamma) has class b"] = square_class(norm_quad(gamma)) == pair.b
                check.checks["Nm(delta) has class b"] = square_class(norm_full(delta)) == pair.b
                triple = AdmissibleTriple.build(pair, delta)
                check.checks["W is free of rank one"] = triple.is_free()
                check.checks["distinct from the other towers of the pair"] = not any(
                    same_module(AdmissibleTriple.build(pair, other), delta) for other in deltas
                )
                deltas.append(delta)
                for computed_label, t in computed[pair]:
                    if same_module(t, delta):
                        check.matched = computed_label
                        radicands = t.shape_generators() or [str(t.delta)]
                        check.computed = f"{BASE_K}(" + ", ".join(f"√({g})" for g in radicands) + ")"
                        break
            except AlgebraError as err:
                check.error = f"{type(err).__name__}: {err}"
    logger.info("u4 list: %d of %d towers confirmed", len(report.entries) - len(report.failures()), len(report.entries))
    return report


def verify_printed_list(group: str, cap=None) -> PrintedListReport:
    if group == "u3":
        return verify_u3(cap)
    if group == "u4":
        return verify_u4(cap)
    raise ValueError(f"no printed list for {group!r}")
