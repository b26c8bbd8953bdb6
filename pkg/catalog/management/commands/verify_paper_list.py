import json

from django.core.management.base import BaseCommand, CommandError

from catalog.management.options import add_arithmetic_flags, algebra_errors, arithmetic_settings
from catalog.printed_lists import verify_printed_list


class Command(BaseCommand):
    help = "Check the printed U_3 or U_4 tower list of the worked Q2 example against the enumeration."

    def add_arguments(self, parser):
        parser.add_argument("group", choices=("u3", "u4"))
        add_arithmetic_flags(parser)

    def handle(self, *args, **options):
        with algebra_errors(), arithmetic_settings(options) as values:
            report = verify_printed_list(options["group"], values.get("SEARCH_CAP"))

        for line in report.side_by_side():
            self.stdout.write(line)
        if not report.passed:
            failures = {"group": report.group, "failures": [e.as_dict() for e in report.failures()]}
            self.stdout.write(json.dumps(failures, indent=2, ensure_ascii=False))
            raise CommandError(f"{len(report.failures())} of {len(report.entries)} printed towers not confirmed")
        self.stdout.write(self.style.SUCCESS(f"All {len(report.entries)} printed {report.group} towers confirmed"))
