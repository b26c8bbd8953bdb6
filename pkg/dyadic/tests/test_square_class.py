import random
from fractions import Fraction

import pytest

from dyadic.number import Dyadic
from dyadic.square_class import SquareClass, class_dim, is_square, square_class
from exceptions import PrecisionExhausted, PreconditionViolation


class TestSquareClass:
    """Test square classes over the basis (-1, 2, 5)"""

    def test_ten(self):
        assert square_class(10).bits == (0, 1, 1)

    def test_minus_seven_is_square(self):
        assert square_class(Dyadic.from_rational(-7)).is_trivial
        assert is_square(-7)

    def test_three(self):
        assert square_class(3).bits == (1, 0, 1)

    def test_five_is_not_square(self):
        assert not is_square(5)

    def test_four_is_square(self):
        assert is_square(4)

    def test_fraction_uses_product(self):
        assert square_class(Fraction(-2, 14)) == square_class(-28)

    def test_representatives_round_trip(self):
        for cls in SquareClass.all():
            assert square_class(cls.representative()) == cls

    def test_zero_rejected(self):
        with pytest.raises(PreconditionViolation):
            square_class(0)

    def test_short_precision_rejected(self):
        with pytest.raises(PrecisionExhausted):
            square_class(Dyadic(0, 1, 2))

    def test_class_of_product_is_xor(self):
        rng = random.Random(1729)
        for _ in range(300):
            x = rng.choice([-1, 1]) * rng.randrange(1, 10**5)
            y = rng.choice([-1, 1]) * rng.randrange(1, 10**5)
            assert square_class(x * y) == square_class(x) * square_class(y)

    def test_inexact_dyadic(self):
        x = Dyadic.from_rational(-10)
        assert square_class(Dyadic(x.valuation, x.unit, 5)) == SquareClass((1, 1, 1))

    def test_dimension(self):
        assert class_dim([square_class(2), square_class(10), square_class(5)]) == 2
