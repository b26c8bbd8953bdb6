"""
Tests for the printed U_3 and U_4 lists of the worked Q2 example
"""

from fractions import Fraction

import pytest

from catalog.printed_lists import load_fixture, printed_roots, verify_u3, verify_u4
from dyadic.number import expansion
from dyadic.square_class import coerce_class, square_class
from quadext.elements import QuadElement, norm_quad


class TestFixtures:
    def test_shapes(self):
        u3 = load_fixture("printed_u3.json")["groups"]
        u4 = load_fixture("printed_u4.json")["groups"]
        assert len(u3) == 9
        assert all(len(g["entries"]) == 2 for g in u3)
        assert len(u4) == 4
        assert sum(len(g["alphas"]) * len(g["gammas"]) for g in u4) == 16

    def test_u3_norm_classes(self):
        """Nm(1+√2) = -1, Nm(4+√5) = 11 with [11] = [-5], ..."""
        for group in load_fixture("printed_u3.json")["groups"]:
            for item in group["entries"]:
                delta = QuadElement.of(group["radicand"], Fraction(item["x"]), Fraction(item["y"]))
                assert square_class(norm_quad(delta)) == coerce_class(group["b"]), item["text"]

    def test_printed_roots(self):
        roots = printed_roots()
        assert len(roots) == 9
        assert expansion(roots["-7"], 6) == "1+2^2+2^4+2^5+..."
        assert expansion(roots["-10/6"], 8) == "1+2+2^4+2^5+2^6+2^7+..."


@pytest.mark.slow
class TestVerification:
    def test_u3(self):
        report = verify_u3()
        assert len(report.entries) == 18
        assert report.passed, report.as_dict()
        assert len({e.matched for e in report.entries}) == 18

    def test_u4(self):
        report = verify_u4()
        assert len(report.entries) == 16
        assert report.passed, report.as_dict()
        assert len({e.matched for e in report.entries}) == 16
        assert report.side_by_side()[0].strip().startswith("L1")
