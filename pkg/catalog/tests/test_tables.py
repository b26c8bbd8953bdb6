"""
Tests for the count tables
"""

import pytest

from catalog.tables import count_table
from exceptions import PreconditionViolation


class TestCharZero:
    def test_q2(self):
        row = count_table(0, 1).loc[1]
        assert row["U2"] == 7
        assert row["D8"] == 18
        assert row["U4"] == 16
        assert row["max unipotent level"] == 4

    def test_enumerated_columns(self):
        row = count_table(0, 1).loc[1]
        assert row["D8 pairs (enumerated)"] == row["D8 pairs"] == 9
        assert row["U4 pairs (enumerated)"] == row["U4 pairs"] == 4

    def test_degree_two(self):
        table = count_table(0, 2)
        assert table.loc[2, "D8"] == 196
        assert "D8 pairs (enumerated)" not in table.columns


class TestCharTwo:
    def test_n3(self):
        row = count_table(2, 3).loc[3]
        assert row["U4 pairs"] == row["U4 pairs (enumerated)"] == 28
        assert row["W per U4 pair"] == 8
        assert row["U4"] == 224

    def test_no_triples_below_three(self):
        assert "U4" not in count_table(2, 2).columns

    def test_no_brute_force_above_limit(self):
        assert "U4 pairs (enumerated)" not in count_table(2, 6).columns


def test_other_characteristic():
    with pytest.raises(PreconditionViolation):
        count_table(3, 1)
