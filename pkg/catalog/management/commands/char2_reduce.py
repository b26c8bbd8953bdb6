from django.core.management.base import BaseCommand

from catalog.management.options import algebra_errors
from charp2.artin_schreier import MAX_INDEPENDENCE_SIZE, ap_normal_form, classes_independent
from charp2.ratfunc import parse_ratfunc


class Command(BaseCommand):
    help = "Normal forms in F2(t)/wp(F2(t)) of rational functions such as 't^2+1/(t+1)'."

    def add_arguments(self, parser):
        parser.add_argument("expressions", nargs="+")

    def handle(self, *args, **options):
        with algebra_errors():
            functions = [parse_ratfunc(text) for text in options["expressions"]]
            for text, f in zip(options["expressions"], functions):
                self.stdout.write(f"{text} -> {ap_normal_form(f)}")
            if 1 < len(functions) <= MAX_INDEPENDENCE_SIZE:
                verdict = "independent" if classes_independent(functions) else "dependent"
                self.stdout.write(f"classes: {verdict}")
