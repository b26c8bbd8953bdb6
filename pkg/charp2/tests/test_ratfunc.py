"""
Tests for F2(t) arithmetic and literal parsing
"""

import random

import pytest
from django.core.exceptions import ValidationError

from charp2.ratfunc import ONE, ZERO, RatFunc2, parse_ratfunc, random_ratfunc, wp

SEED = 1729


class TestParse:
    def test_reduced_form(self):
        f = parse_ratfunc("(t^3+1)/(t^2+t)")
        assert (f.num, f.den) == (0b111, 0b10)
        assert str(f) == "(t^2+t+1)/t"

    def test_coefficients_mod_two(self):
        assert parse_ratfunc("3*t^2 + 2*t + 1") == RatFunc2(0b101)

    @pytest.mark.parametrize("literal", ["", "(t+", "x+1", "t/2", "1/(2*t)"])
    def test_invalid(self, literal):
        with pytest.raises(ValidationError):
            parse_ratfunc(literal)


class TestField:
    def test_axioms(self):
        rng = random.Random(SEED)
        for _ in range(100):
            f, g, h = (random_ratfunc(rng) for _ in range(3))
            assert (f + g) * h == f * h + g * h
            assert (f * g) * h == f * (g * h)
            assert f + f == ZERO
            if not f.is_zero:
                assert f * f.inverse() == ONE

    def test_zero_division(self):
        with pytest.raises(ZeroDivisionError):
            ONE / ZERO


class TestWp:
    def test_t(self):
        assert wp("t") == RatFunc2(0b110)

    def test_roots_in_F2(self):
        assert wp(0) == ZERO
        assert wp(1) == ZERO

    def test_one_over_t(self):
        assert wp("1/t") == RatFunc2(0b11, 0b100)

    def test_additive(self):
        rng = random.Random(SEED)
        for _ in range(50):
            f, g = random_ratfunc(rng), random_ratfunc(rng)
            assert wp(f + g) == wp(f) + wp(g)
