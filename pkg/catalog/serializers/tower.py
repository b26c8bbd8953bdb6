import json

from rest_framework import serializers

from ..towers import GROUPS, Catalog


class TowerEntrySerializer(serializers.Serializer):
    label = serializers.CharField()
    generators = serializers.ListField(child=serializers.CharField(), allow_empty=False)
    b_class = serializers.ListField(child=serializers.IntegerField(min_value=0, max_value=1))
    V = serializers.ListField(
        child=serializers.ListField(child=serializers.IntegerField(min_value=0, max_value=1))
    )
    w_fingerprint = serializers.ListField(child=serializers.IntegerField(min_value=0))


class CatalogSerializer(serializers.Serializer):
    group = serializers.ChoiceField(choices=GROUPS)
    base = serializers.CharField()
    entries = TowerEntrySerializer(many=True)


def catalog_to_dict(catalog: Catalog) -> dict:
    """Plain JSON-compatible dict of a catalog."""
    return json.loads(json.dumps(CatalogSerializer(catalog).data))
