"""
Tests for the catalog management commands
"""

import json
from io import StringIO

import pytest
from django.core.management import call_command
from django.core.management.base import CommandError

from catalog.rendering import parse_text_catalog
from catalog.schema import validate_catalog


def run(*args, **options) -> str:
    out = StringIO()
    call_command(*args, stdout=out, **options)
    return out.getvalue()


class TestEnumerate:
    def test_json(self):
        data = json.loads(run("enumerate", "u2", format="json"))
        validate_catalog(data)
        assert len(data["entries"]) == 7

    def test_text_parses_to_json(self):
        text = run("enumerate", "u2")
        assert parse_text_catalog(text) == json.loads(run("enumerate", "u2", format="json"))

    def test_precision_flag(self):
        assert "[L7]" in run("enumerate", "u2", precision=32)

    @pytest.mark.slow
    def test_u3(self):
        assert len(json.loads(run("enumerate", "u3", format="json"))["entries"]) == 18


class TestCount:
    def test_char_two(self):
        rows = json.loads(run("count", "--char", "2", "--n", "3", "--format", "json"))
        assert rows[0]["U4"] == 224

    def test_text(self):
        assert "196" in run("count", "--n", "2")


class TestSqrt2adic:
    def test_both_roots(self):
        lines = run("sqrt2adic", "--", "-10/6").splitlines()
        assert [line[0] for line in lines] == ["+", "-"]
        assert any(line.endswith("1+2+2^4+2^5+2^6+2^7+...") for line in lines)

    def test_check_printed(self):
        out = run("sqrt2adic", "--check-printed", "--", "-5/11")
        assert '"passed": true' in out

    def test_not_a_square(self):
        with pytest.raises(CommandError):
            run("sqrt2adic", "3")

    def test_not_printed(self):
        with pytest.raises(CommandError):
            run("sqrt2adic", "17", check_printed=True)


class TestHilbert:
    def test_symbol(self):
        assert run("hilbert", "-1", "-1").strip() == "1"
        assert run("hilbert", "2", "-1").strip() == "0"

    def test_table(self):
        assert len(run("hilbert", table=True).splitlines()) == 9

    def test_missing_arguments(self):
        with pytest.raises(CommandError):
            run("hilbert", "2")


class TestChar2Reduce:
    def test_normal_form(self):
        assert run("char2_reduce", "t^2").strip() == "t^2 -> t"

    def test_independence(self):
        out = run("char2_reduce", "t", "1/t", "t^2+1/t^2")
        assert out.splitlines()[-1] == "classes: dependent"

    def test_parse_error(self):
        with pytest.raises(CommandError):
            run("char2_reduce", "t^2+s")


@pytest.mark.slow
def test_verify_printed_u3_list():
    assert "All 18 printed u3 towers confirmed" in run("verify_paper_list", "u3")
