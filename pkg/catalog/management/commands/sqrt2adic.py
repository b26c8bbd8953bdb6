import json

from django.core.management.base import BaseCommand, CommandError

from catalog.management.options import add_arithmetic_flags, algebra_errors, arithmetic_settings
from catalog.printed_lists import load_fixture
from dyadic.expansions import compare_with_printed
from dyadic.number import as_dyadic, expansion, other_root, sqrt_hensel
from dyadic.parsing import normalize_literal, parse_nonzero_rational


class Command(BaseCommand):
    help = (
        "Print both 2-adic square roots of a rational, canonical (1 mod 4) first. "
        "Put -- before a negative fraction: sqrt2adic -- -10/6"
    )

    def add_arguments(self, parser):
        parser.add_argument("rational")
        parser.add_argument("--digits", type=int, default=8)
        parser.add_argument("--check-printed", action="store_true", help="compare with the printed expansion")
        add_arithmetic_flags(parser)

    def handle(self, *args, **options):
        with algebra_errors(), arithmetic_settings(options):
            value = parse_nonzero_rational(options["rational"])
            root = sqrt_hensel(as_dyadic(value))
            self.stdout.write(f"+ {expansion(root, options['digits'])}")
            self.stdout.write(f"- {expansion(other_root(root), options['digits'])}")
            if options["check_printed"]:
                self._check_printed(normalize_literal(options["rational"]), value)

    def _check_printed(self, text, value):
        """The printed radicand written as given wins over an equal fraction written differently."""
        printed = load_fixture("expansions.json")
        match = next((item for item in printed if item["radicand"] == text), None)
        match = match or next((item for item in printed if parse_nonzero_rational(item["radicand"]) == value), None)
        if match is None:
            raise CommandError(f"no printed expansion of sqrt({text})")
        report = compare_with_printed(match["radicand"], match["printed"])
        self.stdout.write(json.dumps(report.as_dict(), ensure_ascii=False))
        if not report.passed:
            raise CommandError("printed digits match neither square root")
        self.stdout.write(self.style.SUCCESS(f"printed expansion is the {report.matched_root} root"))
