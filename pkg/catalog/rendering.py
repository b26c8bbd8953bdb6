"""
Line-oriented text form of a catalog and its parser, plus a reader for
rendered radicands such as "4+√2+√10" or "1/3+(1/3)√10".
"""

import re
from fractions import Fraction

from django.core.exceptions import ValidationError

from dyadic.number import rational_sqrt
from quadext.elements import BiquadElement, QuadElement

from .towers import Catalog

_TERM = re.compile(
    r"(?P<sign>[+-]?)"
    r"(?:\((?P<paren>-?\d+(?:/\d+)?)\)|(?P<plain>\d+(?:/\d+)?))?"
    r"(?:√(?:\((?P<rootp>-?\d+)\)|(?P<root>-?\d+)))?"
)
GENERATOR_SEPARATOR = " ; "
VECTOR_SEPARATOR = " , "


def _split_terms(text: str) -> list[str]:
    terms, depth, start = [], 0, 0
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch in "+-" and depth == 0 and i > start and text[i - 1] != "√":
            terms.append(text[start:i])
            start = i
    terms.append(text[start:])
    return terms


def parse_radicand(text: str) -> dict[int, Fraction]:
    """
    Coefficients of a rendered radicand keyed by the integer under the root
    (1 for the rational part).

    Raises:
        ValidationError: a term is not of the form [±][coefficient][√m]
    """
    source = text.replace(" ", "").replace("−", "-")
    coefficients: dict[int, Fraction] = {}
    for term in _split_terms(source):
        match = _TERM.fullmatch(term)
        if not match or not term.strip("+-"):
            raise ValidationError(f"Unreadable radicand term {term!r} in {text!r}")
        coefficient = Fraction(match["paren"] or match["plain"] or 1)
        if match["sign"] == "-":
            coefficient = -coefficient
        root = int(match["rootp"] or match["root"] or 1)
        coefficients[root] = coefficients.get(root, 0) + coefficient
    return coefficients


def _coordinates(text: str, slots: tuple[int, ...], field: str) -> list[Fraction]:
    """
    Coefficients on sqrt(slots[k]); a root √m counts towards the slot n
    with m / n a rational square, e.g. 5√-2 is √-50.
    """
    coords = [Fraction(0)] * len(slots)
    for m, coefficient in parse_radicand(text).items():
        for index, n in enumerate(slots):
            k = rational_sqrt(Fraction(m, n))
            if k is not None:
                coords[index] += coefficient * k
                break
        else:
            raise ValidationError(f"{text!r} does not lie in {field}")
    return coords


def radicand_to_quad(text: str, a: int) -> QuadElement:
    return QuadElement.of(a, *_coordinates(text, (1, a), f"Q2(√{a})"))


def radicand_to_biquad(text: str, a: int, c: int) -> BiquadElement:
    return BiquadElement.of(a, c, *_coordinates(text, (1, a, c, a * c), f"Q2(√{a}, √{c})"))


def _vector(bits) -> str:
    return " ".join(str(b) for b in bits)


def render_text(catalog: Catalog) -> str:
    lines = [f"group: {catalog.group}", f"base: {catalog.base}"]
    for entry in catalog.entries:
        lines += [
            "",
            f"[{entry.label}]",
            f"generators: {GENERATOR_SEPARATOR.join(entry.generators)}",
            f"b_class: {_vector(entry.b_class)}",
            f"V: {VECTOR_SEPARATOR.join(_vector(v) for v in entry.V)}",
            f"w_fingerprint: {_vector(entry.w_fingerprint)}",
            f"tower: {entry.tower()}",
        ]
    return "\n".join(lines) + "\n"


def _ints(value: str) -> list[int]:
    return [int(x) for x in value.split()]


def parse_text_catalog(text: str) -> dict:
    """
    Read render_text output back into the dict the JSON serializer emits.

    Raises:
        ValidationError: unknown keys or lines outside an entry
    """
    catalog: dict = {"entries": []}
    entry = None
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("[") and line.endswith("]"):
            entry = {"label": line[1:-1]}
            catalog["entries"].append(entry)
            continue
        key, sep, value = line.partition(":")
        if not sep:
            raise ValidationError(f"line {number}: expected 'key: value'")
        key, value = key.strip(), value.strip()
        if entry is None:
            if key not in ("group", "base"):
                raise ValidationError(f"line {number}: unexpected header {key!r}")
            catalog[key] = value
        elif key == "generators":
            entry[key] = value.split(GENERATOR_SEPARATOR.strip()) if value else []
            entry[key] = [g.strip() for g in entry[key]]
        elif key in ("b_class", "w_fingerprint"):
            entry[key] = _ints(value)
        elif key == "V":
            entry[key] = [_ints(v) for v in value.split(VECTOR_SEPARATOR.strip())] if value else []
        elif key == "tower":
            continue
        else:
            raise ValidationError(f"line {number}: unknown key {key!r}")
    return catalog
