"""Cross-checks between the two independent brute-force enumerators.

A third, even more literal enumerator is included here in the tests: it
builds every candidate matrix from rows whose nonzero entries alternate
+1, -1, ..., +1, then filters by the same condition on columns.  That
is the definition, transcribed, with no transfer-matrix or triangle
machinery, so it anchors both production oracles for tiny sizes.
"""

from fractions import Fraction
from itertools import combinations, product

import pytest

from asm3 import counts
from asm3.errors import SizeLimitExceeded
from asm3.oracle import (
    DP_LIMIT,
    MT_LIMIT,
    dp_refined_enum,
    mt_refined_enum,
    oracle_cross_check,
)

F = Fraction


def _alternating_rows(n):
    rows = []
    for sz in range(1, n + 1, 2):
        for cols in combinations(range(n), sz):
            row = [0] * n
            for i, c in enumerate(cols):
                row[c] = 1 if i % 2 == 0 else -1
            rows.append(tuple(row))
    return rows


def _is_alternating(seq):
    nz = [v for v in seq if v]
    if not nz or nz[0] != 1 or nz[-1] != 1:
        return False
    return all(a == -b for a, b in zip(nz, nz[1:]))


def literal_refined_enum(n, x):
    """Definition-level enumeration; exponential, n <= 4 in practice."""
    weights = [x ** 0 - x ** 0] * n  # list of zeros of the right type
    for mat in product(_alternating_rows(n), repeat=n):
        if not all(_is_alternating(col) for col in zip(*mat)):
            continue
        r = mat[0].index(1)
        minus = sum(row.count(-1) for row in mat)
        weights[r] = weights[r] + x ** minus
    return tuple(weights)


def test_literal_oracle_tiny_values():
    assert literal_refined_enum(1, 1) == (1,)
    assert literal_refined_enum(2, 1) == (1, 1)
    assert literal_refined_enum(3, 1) == (2, 3, 2)
    assert literal_refined_enum(3, 3) == (2, 5, 2)


def test_dp_against_literal_definition():
    for n in range(1, 5):
        for x in (1, 3, F(5, 7)):
            assert dp_refined_enum(n, x).counts == literal_refined_enum(n, x)


def test_mt_against_literal_definition():
    for n in range(1, 5):
        for x in (1, 3, F(5, 7)):
            assert mt_refined_enum(n, x).counts == literal_refined_enum(n, x)


def test_dp_refined_small_values():
    assert dp_refined_enum(3, 1).counts == (2, 3, 2)
    assert dp_refined_enum(3, 3).counts == (2, 5, 2)
    assert dp_refined_enum(3, 2).counts == (2, 4, 2)
    assert dp_refined_enum(1, 1).counts == (1,)


def test_dp_totals():
    assert dp_refined_enum(6, 1).total == 7436
    assert dp_refined_enum(4, 2).total == 2 ** 6
    assert dp_refined_enum(4, 3).total == 90


def test_dp_matches_closed_forms():
    for n in range(1, 8):
        assert dp_refined_enum(n, 1).counts == counts.asm_table(n).counts
        assert dp_refined_enum(n, 3).counts == counts.asm3_table(n).counts


def test_dp_two_enumeration_shares():
    for n in range(1, 9):
        t = dp_refined_enum(n, 2)
        tot = t.total
        for r in range(1, n + 1):
            assert F(t.counts[r - 1], tot) == counts.refined_asm2_ratio(n, r)


def test_oracles_agree_on_fractional_weight():
    x = F(5, 7)
    for n in range(1, MT_LIMIT + 1):
        assert oracle_cross_check(n, x)


def test_fractional_weights_stay_exact():
    t = dp_refined_enum(4, F(1, 3))
    assert all(isinstance(v, F) for v in t.counts)
    assert t.counts == mt_refined_enum(4, F(1, 3)).counts


def test_weight_zero_counts_permutation_like_matrices():
    # x = 0 keeps only matrices with no -1 at all: the permutations
    t = dp_refined_enum(4, 0)
    assert t.total == 24
    assert t.counts == (6, 6, 6, 6)


def test_size_limits():
    with pytest.raises(SizeLimitExceeded):
        dp_refined_enum(DP_LIMIT + 1, 1)
    with pytest.raises(SizeLimitExceeded):
        mt_refined_enum(MT_LIMIT + 1, 1)
    with pytest.raises(SizeLimitExceeded):
        dp_refined_enum(0, 1)
    assert dp_refined_enum(5, 1, limit=20).total == 429


def test_provenance_tags():
    assert dp_refined_enum(2, 1).provenance is counts.Provenance.ORACLE_DP
    assert mt_refined_enum(2, 1).provenance is counts.Provenance.ORACLE_MT
