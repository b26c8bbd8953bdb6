import jsonschema

BITS = {"type": "array", "items": {"type": "integer", "minimum": 0, "maximum": 1}}

CATALOG_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["group", "base", "entries"],
    "properties": {
        "group": {"enum": ["u2", "u3", "u4"]},
        "base": {"type": "string"},
        "entries": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["generators", "b_class", "V", "w_fingerprint"],
                "properties": {
                    "label": {"type": "string"},
                    "generators": {"type": "array", "items": {"type": "string"}, "minItems": 1},
                    "b_class": BITS,
                    "V": {"type": "array", "items": BITS, "maxItems": 2},
                    "w_fingerprint": {"type": "array", "items": {"type": "integer", "minimum": 0}},
                },
                "additionalProperties": False,
            },
        },
    },
    "additionalProperties": False,
}


def validate_catalog(data: dict):
    """Raises jsonschema.ValidationError when data does not follow CATALOG_SCHEMA."""
    jsonschema.validate(instance=data, schema=CATALOG_SCHEMA)
