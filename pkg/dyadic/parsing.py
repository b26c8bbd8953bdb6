from fractions import Fraction

from django.core.exceptions import ValidationError


def normalize_literal(text: str) -> str:
    return text.strip().replace("−", "-").replace(" ", "")


def parse_rational(text) -> Fraction:
    """
    Parse an integer or fraction literal such as "-2/14" exactly.

    Raises:
        ValidationError: malformed literal or zero denominator
    """
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    value = normalize_literal(str(text)).strip("[]")
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValidationError(f"Invalid rational literal: {text!r}") from exc


def parse_nonzero_rational(text) -> Fraction:
    value = parse_rational(text)
    if value == 0:
        raise ValidationError("Zero has no square class.")
    return value
