"""
Tests for the text catalog format, the JSON schema and radicand parsing
"""

from fractions import Fraction

import jsonschema
import pytest
from django.core.exceptions import ValidationError

from catalog.rendering import parse_radicand, parse_text_catalog, radicand_to_biquad, radicand_to_quad, render_text
from catalog.schema import validate_catalog
from catalog.serializers import CatalogSerializer, catalog_to_dict
from catalog.towers import Catalog, TowerDescription, u2_catalog
from quadext.elements import BiquadElement, QuadElement


@pytest.fixture
def d8_catalog():
    entry = TowerDescription("u3", "Q2", "L1", ["1+√2", "-1"], [1, 0, 0], [[0, 1, 0], [1, 0, 0]], [0, 2])
    return Catalog("u3", "Q2", [entry])


class TestParseRadicand:
    def test_sum_of_roots(self):
        assert parse_radicand("4+√2+√10") == {1: 4, 2: 1, 10: 1}

    def test_fraction_coefficients(self):
        assert parse_radicand("1/3+(1/3)√10") == {1: Fraction(1, 3), 10: Fraction(1, 3)}
        assert parse_radicand("(-1/3)√10") == {10: Fraction(-1, 3)}

    def test_negative_radicands(self):
        assert parse_radicand("-2+√-2") == {1: -2, -2: 1}
        assert parse_radicand("1-√-10") == {1: 1, -10: -1}
        assert parse_radicand("√(-10)") == {-10: 1}

    def test_multiple(self):
        assert parse_radicand("3√10") == {10: 3}
        assert parse_radicand("-√2") == {2: -1}

    def test_unreadable(self):
        with pytest.raises(ValidationError):
            parse_radicand("2+x")
        with pytest.raises(ValidationError):
            parse_radicand("1+")

    def test_rendered_quad_reads_back(self):
        q = QuadElement.of(10, Fraction(1, 3), Fraction(-1, 3))
        assert (radicand_to_quad(str(q), 10) - q).is_zero

    def test_rendered_biquad_reads_back(self):
        e = BiquadElement.of(2, 5, 4, 1, 0, 1)
        assert (radicand_to_biquad(str(e), 2, 5) - e).is_zero

    def test_square_factor_reads_back(self):
        e = BiquadElement.of(-5, 10, 1, 0, 0, 1)
        assert str(e) == "1+5√-2"
        assert (radicand_to_biquad(str(e), -5, 10) - e).is_zero
        assert radicand_to_quad("5√-2", -50).y.exact == 1

    def test_wrong_field(self):
        with pytest.raises(ValidationError):
            radicand_to_quad("1+√5", 2)


class TestTextCatalog:
    def test_u2_round_trip(self):
        catalog = u2_catalog()
        assert parse_text_catalog(render_text(catalog)) == catalog_to_dict(catalog)

    def test_entry_round_trip(self, d8_catalog):
        text = render_text(d8_catalog)
        assert "tower: Q2(√(1+√2), √-1)" in text
        assert parse_text_catalog(text) == catalog_to_dict(d8_catalog)

    def test_unknown_key(self):
        with pytest.raises(ValidationError):
            parse_text_catalog("group: u2\nbase: Q2\n[L1]\ncolour: red\n")

    def test_header_after_entry_is_rejected(self):
        with pytest.raises(ValidationError):
            parse_text_catalog("group: u2\n[L1]\nbase: Q2\n")


class TestSchema:
    def test_serialized_catalog_validates(self, d8_catalog):
        validate_catalog(catalog_to_dict(d8_catalog))
        validate_catalog(catalog_to_dict(u2_catalog()))

    def test_bits_only(self, d8_catalog):
        data = catalog_to_dict(d8_catalog)
        data["entries"][0]["b_class"] = [2, 0, 0]
        with pytest.raises(jsonschema.ValidationError):
            validate_catalog(data)

    def test_entries_required(self):
        with pytest.raises(jsonschema.ValidationError):
            validate_catalog({"group": "u2", "base": "Q2"})

    def test_serializer_reads_catalog_dict(self, d8_catalog):
        serializer = CatalogSerializer(data=catalog_to_dict(d8_catalog))
        assert serializer.is_valid(), serializer.errors
        assert serializer.validated_data["entries"][0]["generators"] == ["1+√2", "-1"]

    def test_serializer_rejects_unknown_group(self, d8_catalog):
        data = catalog_to_dict(d8_catalog)
        data["group"] = "u5"
        assert not CatalogSerializer(data=data).is_valid()
