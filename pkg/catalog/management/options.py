"""Flags and error translation shared by the catalog commands."""

from contextlib import contextmanager

from django.conf import settings
from django.core.exceptions import ValidationError
from django.core.management.base import CommandError
from django.test.utils import override_settings

from exceptions import AlgebraError


def add_arithmetic_flags(parser):
    parser.add_argument("--precision", type=int, help="2-adic digits carried by inexact values (default 64)")
    parser.add_argument("--search-cap", type=int, help="largest coordinate height tried by searches (default 32)")


@contextmanager
def arithmetic_settings(options):
    """UNIPOTENT settings with the --precision / --search-cap overrides applied."""
    values = dict(getattr(settings, "UNIPOTENT", {}))
    if options.get("precision"):
        values["PRECISION"] = options["precision"]
    if options.get("search_cap"):
        values["SEARCH_CAP"] = options["search_cap"]
    with override_settings(UNIPOTENT=values):
        yield values


@contextmanager
def algebra_errors():
    try:
        yield
    except ValidationError as exc:
        raise CommandError("; ".join(exc.messages)) from exc
    except (AlgebraError, ZeroDivisionError) as exc:
        raise CommandError(f"{type(exc).__name__}: {exc}") from exc
