"""Count tables for the closed-form formulas, with enumerated columns where feasible."""

import pandas as pd

from admiss.counting import (
    CountingParams,
    count_d8,
    count_d8_pairs,
    count_d8_w,
    count_pairs,
    count_triples_per_pair,
    count_u2,
    count_u4,
)
from admiss.pairs import enumerate_admissible_pairs, enumerate_unordered_pairs
from builder2.counting import (
    BRUTE_FORCE_LIMIT,
    MIN_TRIPLE_DIM,
    Char2CountingParams,
    brute_count_pairs,
    count_pairs_char2,
    count_triples_char2,
    count_u4_char2,
)
from exceptions import PreconditionViolation
from ugroup.matrix import max_unipotent_level


def _char0_row(n: int, q_is_2: bool) -> dict:
    p = CountingParams(n, q_is_2)
    row = {
        "n": n,
        "U2": count_u2(p),
        "D8 pairs": count_d8_pairs(p),
        "W per D8 pair": count_d8_w(p),
        "D8": count_d8(p),
        "U4 pairs": count_pairs(p),
        "W per U4 pair": count_triples_per_pair(p),
        "U4": count_u4(p),
        "max unipotent level": max_unipotent_level(n + 2),
    }
    if n == 1 and q_is_2:
        row["D8 pairs (enumerated)"] = len(enumerate_unordered_pairs())
        row["U4 pairs (enumerated)"] = len(enumerate_admissible_pairs())
    return row


def _char2_row(n: int) -> dict:
    p = Char2CountingParams(n)
    row = {"n": n, "free rank over E": p.free_rank, "U4 pairs": count_pairs_char2(p)}
    if n <= BRUTE_FORCE_LIMIT:
        row["U4 pairs (enumerated)"] = brute_count_pairs(n)
    if n >= MIN_TRIPLE_DIM:
        row["W per U4 pair"] = count_triples_char2(p)
        row["U4"] = count_u4_char2(p)
    return row


def count_table(char: int, n: int, q_is_2: bool = True) -> pd.DataFrame:
    """
    One row for degree (char 0) or Artin-Schreier dimension (char 2) n.
    Columns that do not apply are left out.
    """
    if char == 0:
        row = _char0_row(n, q_is_2)
    elif char == 2:
        row = _char2_row(n)
    else:
        raise PreconditionViolation(f"characteristic must be 0 or 2, got {char}")
    return pd.DataFrame([row]).set_index("n")
