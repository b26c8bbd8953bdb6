import json

from django.core.management.base import BaseCommand

from catalog.management.options import algebra_errors
from catalog.tables import count_table


class Command(BaseCommand):
    help = (
        "Closed-form counts of U_2, D8 and U_4 extensions. For --char 0, n is the "
        "degree over Q2 and --q says whether 2 is the largest power of two with "
        "q-th roots of unity; for --char 2, n = dim F/wp(F)."
    )

    def add_arguments(self, parser):
        parser.add_argument("--char", type=int, choices=(0, 2), default=0)
        parser.add_argument("--n", type=int, default=1)
        parser.add_argument("--q", choices=("2", "other"), default="2")
        parser.add_argument("--format", choices=("text", "json"), default="text")

    def handle(self, *args, **options):
        with algebra_errors():
            table = count_table(options["char"], options["n"], options["q"] == "2")
        if options["format"] == "json":
            self.stdout.write(json.dumps(table.reset_index().to_dict(orient="records")))
        else:
            self.stdout.write(table.to_string())
