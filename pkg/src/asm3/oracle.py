"""Two independent brute-force ground truths for the refined counts.

The first oracle runs a transfer-matrix dynamic program over bitmask
states: state S after row k is the set of columns whose partial sum is
1, so S has exactly k bits set.  A row of the matrix is the difference
of two consecutive states; it is admissible when its prefix sums stay
in {0, 1} and close at 1, and it contributes weight x^(p-1) where p is
its number of +1 entries.

The second oracle enumerates the same objects as triangles of strictly
increasing rows where consecutive rows interlace, written directly on
sorted tuples with no bitmasks and no shared code with the DP.  Each
step down weights x to the power of the entries that disappear.  The
refined index r is the single entry of the top row in both pictures.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Tuple, Union

from .counts import EnumTable, Provenance
from .errors import SizeLimitExceeded

DP_LIMIT = 14
MT_LIMIT = 8

Weight = Union[int, Fraction]


def _normalize_weight(x) -> Weight:
    x = Fraction(x)
    if x.denominator == 1:
        return x.numerator
    return x


@lru_cache(maxsize=None)
def _row_successors(n: int, state: int) -> Tuple[Tuple[int, int], ...]:
    """All states reachable from state by one admissible row.

    Walks the columns keeping the running prefix of the row difference,
    which may only sit at 0 or 1 and must end at 1.  Returns pairs
    (next_state, number_of_plus_ones).
    """
    out = []

    def walk(col: int, acc: int, prefix: int, plus: int) -> None:
        if col == n:
            if prefix == 1:
                out.append((acc, plus))
            return
        bit = (state >> col) & 1
        if bit:
            walk(col + 1, acc | (1 << col), prefix, plus)
            if prefix == 1:
                walk(col + 1, acc, 0, plus)
        else:
            walk(col + 1, acc, prefix, plus)
            if prefix == 0:
                walk(col + 1, acc | (1 << col), 1, plus + 1)

    walk(0, 0, 0, 0)
    return tuple(out)


def dp_refined_enum(n: int, x, limit: int = DP_LIMIT) -> EnumTable:
    """Weighted refined counts by transfer-matrix DP over column masks."""
    if n < 1 or n > limit:
        raise SizeLimitExceeded(f"n must lie in 1..{limit}")
    x = _normalize_weight(x)
    one = x ** 0
    xpow = [x ** max(p - 1, 0) for p in range((n + 3) // 2 + 1)]
    full = (1 << n) - 1
    counts = []
    for r in range(1, n + 1):
        layer = {1 << (r - 1): one}
        for row in range(2, n + 1):
            nxt: dict = {}
            for state, w in layer.items():
                for succ, plus in _row_successors(n, state):
                    add = w * xpow[plus]
                    if succ in nxt:
                        nxt[succ] += add
                    else:
                        nxt[succ] = add
            layer = nxt
            if any(bin(s).count("1") != row for s in layer):
                raise AssertionError("state width drifted from the row index")
        counts.append(layer.get(full, 0))
    return EnumTable(n, Fraction(x), tuple(counts), Provenance.ORACLE_DP)


def _interlacing_extensions(row: Tuple[int, ...], n: int):
    """Strictly increasing rows of length len(row)+1 interlacing row."""
    k = len(row)

    def build(i: int, lo: int, acc: list):
        hi = row[i] if i < k else n
        for v in range(lo, hi + 1):
            acc.append(v)
            if i == k:
                yield tuple(acc)
            else:
                nxt_lo = max(v + 1, row[i])
                yield from build(i + 1, nxt_lo, acc)
            acc.pop()

    yield from build(0, 1, [])


def mt_refined_enum(n: int, x, limit: int = MT_LIMIT) -> EnumTable:
    """Weighted refined counts by recursion over interlacing triangles.

    The recursion weighs a completion of a partial triangle from its
    current row down to the full bottom row 1..n; the drop count of a
    step is how many entries of the upper row are missing from the
    lower one.  Completions are cached per row, which leaves the
    recursion structure untouched.
    """
    if n < 1 or n > limit:
        raise SizeLimitExceeded(f"n must lie in 1..{limit}")
    x = _normalize_weight(x)
    cache: dict = {}

    def below(row: Tuple[int, ...]) -> Weight:
        if len(row) == n:
            return 1
        got = cache.get(row)
        if got is not None:
            return got
        total = 0
        for ext in _interlacing_extensions(row, n):
            dropped = len(set(row) - set(ext))
            total += x ** dropped * below(ext)
        cache[row] = total
        return total

    counts = tuple(below((r,)) for r in range(1, n + 1))
    return EnumTable(n, Fraction(x), counts, Provenance.ORACLE_MT)


def oracle_cross_check(n: int, x) -> bool:
    """Agreement of the two oracles on the full refined table."""
    return dp_refined_enum(n, x).counts == mt_refined_enum(n, x).counts
