import pandas as pd
from django.core.management.base import BaseCommand, CommandError

from catalog.management.options import algebra_errors
from dyadic.hilbert import hilbert, hilbert_table
from dyadic.parsing import parse_nonzero_rational
from dyadic.square_class import SquareClass


class Command(BaseCommand):
    help = "Hilbert symbol (a, b) over Q2 as a bit: 0 split, 1 not split."

    def add_arguments(self, parser):
        parser.add_argument("a", nargs="?")
        parser.add_argument("b", nargs="?")
        parser.add_argument("--table", action="store_true", help="print the 8 x 8 table on square classes")

    def handle(self, *args, **options):
        if options["table"]:
            table = hilbert_table()
            labels = [str(cls.representative()) for cls in SquareClass.all()]
            frame = pd.DataFrame(
                [[table[(a, b)] for b in SquareClass.all()] for a in SquareClass.all()],
                index=labels,
                columns=labels,
            )
            self.stdout.write(frame.to_string())
            return
        if options["a"] is None or options["b"] is None:
            raise CommandError("give two nonzero rationals a b, or --table")
        with algebra_errors():
            a = parse_nonzero_rational(options["a"])
            b = parse_nonzero_rational(options["b"])
            self.stdout.write(str(hilbert(a, b)))
