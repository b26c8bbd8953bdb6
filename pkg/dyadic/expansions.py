"""
Comparison of computed square roots with printed 2-adic expansions.

Printed expansions are written as sums of powers of two in TeX style,
"1+2+2^4+2^{10}". Tokens that do not fit that grammar but have an obvious
reading ("26" for 2^6, "2^12" for 2^{12}) are flagged instead of failing.
"""

import logging
import re
from dataclasses import dataclass, field

from django.core.exceptions import ValidationError

from .number import Dyadic, as_dyadic, other_root, sqrt_hensel
from .parsing import parse_rational

logger = logging.getLogger(__name__)

_SINGLE = re.compile(r"^2\^(\d)$")
_BRACED = re.compile(r"^2\^\{(\d+)\}$")
_UNBRACED = re.compile(r"^2\^(\d{2,})$")
_RUN_ON = re.compile(r"^2(\d)$")


@dataclass(frozen=True)
class PrintedToken:
    text: str
    position: int
    flagged: bool = False


@dataclass
class ExpansionReport:
    radicand: str
    printed: str
    matched_root: str | None
    flagged: list[str] = field(default_factory=list)
    mismatches: dict[str, list[int]] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.matched_root is not None

    def as_dict(self) -> dict:
        return {
            "radicand": self.radicand,
            "printed": self.printed,
            "matched_root": self.matched_root,
            "flagged": self.flagged,
            "passed": self.passed,
        }


def parse_printed_token(token: str) -> PrintedToken:
    token = token.strip()
    if token == "1":
        return PrintedToken(token, 0)
    if token == "2":
        return PrintedToken(token, 1)
    for pattern, flagged in ((_SINGLE, False), (_BRACED, False), (_UNBRACED, True), (_RUN_ON, True)):
        match = pattern.match(token)
        if match:
            return PrintedToken(token, int(match.group(1)), flagged)
    raise ValidationError(f"Unreadable expansion token: {token!r}")


def parse_printed_expansion(text: str) -> list[PrintedToken]:
    body = text.replace("\\cdots", "").replace("...", "").replace(" ", "")
    return [parse_printed_token(t) for t in body.split("+") if t]


def root_bits(root: Dyadic, last_position: int) -> set[int]:
    unit = root.unit_mod(last_position + 1)
    return {root.valuation + k for k in range(last_position + 1) if (unit >> k) & 1}


def compare_with_printed(radicand, printed: str) -> ExpansionReport:
    """
    Compare both square roots of `radicand` with a printed expansion,
    digit by digit up to the last printed position.
    """
    value = as_dyadic(parse_rational(radicand))
    tokens = parse_printed_expansion(printed)
    positions = {t.position for t in tokens}
    last = max(positions)
    canonical = sqrt_hensel(value)
    report = ExpansionReport(
        radicand=str(radicand),
        printed=printed,
        matched_root=None,
        flagged=[t.text for t in tokens if t.flagged],
    )
    for label, root in (("canonical", canonical), ("other", other_root(canonical))):
        bits = root_bits(root, last - root.valuation)
        diff = sorted(bits ^ positions)
        report.mismatches[label] = diff
        if not diff and report.matched_root is None:
            report.matched_root = label
    if report.matched_root is None:
        logger.warning("printed expansion of sqrt(%s) matches neither root: %s", radicand, report.mismatches)
    return report


def select_printed_root(radicand, printed: str) -> Dyadic:
    """The square root of `radicand` whose digits agree with `printed`."""
    report = compare_with_printed(radicand, printed)
    if not report.passed:
        raise ValidationError(f"No square root of {radicand} has digits {printed}")
    root = sqrt_hensel(as_dyadic(parse_rational(radicand)))
    return root if report.matched_root == "canonical" else other_root(root)
