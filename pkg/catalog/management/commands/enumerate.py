import json
import logging

from django.core.management.base import BaseCommand

from catalog.management.options import add_arithmetic_flags, algebra_errors, arithmetic_settings
from catalog.rendering import render_text
from catalog.schema import validate_catalog
from catalog.serializers import catalog_to_dict
from catalog.towers import GROUPS, build_catalog

logger = logging.getLogger(__name__)


class Command(BaseCommand):
    help = "Enumerate the U_2, D8 (u3) or U_4 extensions of Q2 as a catalog of towers."

    def add_arguments(self, parser):
        parser.add_argument("group", choices=GROUPS)
        parser.add_argument("--format", choices=("text", "json"), default="text")
        add_arithmetic_flags(parser)

    def handle(self, *args, **options):
        group = options["group"]
        logger.info("enumerating %s", group)
        with algebra_errors(), arithmetic_settings(options) as values:
            catalog = build_catalog(group, values.get("SEARCH_CAP"))
        data = catalog_to_dict(catalog)
        validate_catalog(data)

        if options["format"] == "json":
            self.stdout.write(json.dumps(data, indent=2, ensure_ascii=False))
        else:
            self.stdout.write(render_text(catalog), ending="")
