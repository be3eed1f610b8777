"""Reference values exactly as printed in the source text.

These literals feed the mismatch scanner only.  They are transcribed
verbatim, typos included: the scanner's whole purpose is to compare the
printed claim against an independent recomputation, so nothing here is
"corrected".  Public predicates never read the known-bad entries directly;
see predicates.py for the corrected lists they use instead.

Known discrepancies the scanner is expected to flag:
  * the quarter-threshold exception list for the n+12 bound omits 32;
  * the minimum-size table prints 1 at n=1 and 2110 at n=1111111;
  * the k=8 row of the upper-interval enumeration prints 60 for 66.
"""

from __future__ import annotations

# Printed table of eps(n), n/eps(n), delta(n) and floor(n/4) for n = 1..111,
# stored row-wise in the same order as the source.
TABLE_EPS = (
    1, 1, 1, 2, 1, 2, 1, 2, 3, 2, 1, 3, 1, 2, 3, 4, 1, 3,
    1, 4, 3, 2, 1, 4, 5, 2, 3, 4, 1, 5, 1, 4, 3, 2,
    5, 6, 1, 2, 3, 5, 1, 6, 1, 4, 5, 2, 1, 6, 7, 5,
    3, 4, 1, 6, 5, 7, 3, 2, 1, 6, 1, 2, 7, 8, 5, 6,
    1, 4, 3, 7, 1, 8, 1, 2, 5, 4, 7, 6, 1, 8, 9, 2,
    1, 7, 5, 2, 3, 8, 1, 9, 7, 4, 3, 2, 5, 8, 1, 7,
    9, 10, 1, 6, 1, 8, 7, 2, 1, 9, 1, 10, 3,
)

TABLE_COFACTOR = (
    1, 2, 3, 2, 5, 3, 7, 4, 3, 5, 11, 4, 13, 7, 5, 4, 17, 6,
    19, 5, 7, 11, 23, 6, 5, 13, 9, 7, 29, 6, 31, 8, 11, 17,
    7, 6, 37, 19, 13, 8, 41, 7, 43, 11, 9, 23, 47, 8, 7, 10,
    17, 13, 53, 9, 11, 8, 19, 29, 59, 10, 61, 31, 9, 8, 13, 11,
    67, 17, 23, 10, 71, 9, 73, 37, 15, 19, 11, 13, 79, 10, 9, 41,
    83, 12, 17, 43, 29, 11, 89, 10, 13, 23, 31, 47, 19, 12, 97, 14,
    11, 10, 101, 17, 103, 13, 15, 53, 107, 12, 109, 11, 37,
)

# The n=92 column survives extraction with eps=4 and cofactor=23 but a
# mangled delta digit; their sum 27 is the only self-consistent reading.
TABLE_DELTA = (
    2, 3, 4, 4, 6, 5, 8, 6, 6, 7, 12, 7, 14, 9, 8, 8, 18, 9,
    20, 9, 10, 13, 24, 10, 10, 15, 12, 11, 30, 11, 32, 12, 14, 19,
    12, 12, 38, 21, 16, 13, 42, 13, 44, 15, 14, 25, 48, 14, 14, 15,
    20, 17, 54, 15, 16, 15, 22, 31, 60, 16, 62, 33, 16, 16, 18, 17,
    68, 21, 26, 17, 72, 17, 74, 39, 20, 23, 18, 19, 80, 18, 18, 43,
    84, 19, 22, 45, 32, 19, 90, 19, 20, 27, 34, 49, 24, 20, 98, 21,
    20, 20, 102, 23, 104, 21, 22, 55, 108, 21, 110, 21, 40,
)

TABLE_QUARTER = (
    0, 0, 0, 1, 1, 1, 1, 2, 2, 2, 2, 3, 3, 3, 3, 4, 4, 4,
    4, 5, 5, 5, 5, 6, 6, 6, 6, 7, 7, 7, 7, 8, 8, 8,
    8, 9, 9, 9, 9, 10, 10, 10, 10, 11, 11, 11, 11, 12, 12, 12,
    12, 13, 13, 13, 13, 14, 14, 14, 14, 15, 15, 15, 15, 16, 16, 16,
    16, 17, 17, 17, 17, 18, 18, 18, 18, 19, 19, 19, 19, 20, 20, 20,
    20, 21, 21, 21, 21, 22, 22, 22, 22, 23, 23, 23, 23, 24, 24, 24,
    24, 25, 25, 25, 25, 26, 26, 26, 26, 27, 27, 27, 27,
)

assert len(TABLE_EPS) == len(TABLE_COFACTOR) == len(TABLE_DELTA) == len(TABLE_QUARTER) == 111

# The 19 printed n <= 111 with delta(n) strictly below n/4 (claim lemma_3_7).
BELOW_QUARTER_LIST = (
    70, 72, 77, 78, 80, 81, 84, 88, 90, 91, 96, 98, 99, 100, 102, 104, 105, 108, 110,
)

# The 27 printed exceptions in the quarter-threshold characterisation
# (claim prop_3_10, condition b).
QUARTER_EXCEPTIONS = (
    1, 16, 18, 24, 25, 27, 30, 32, 35, 36, 40, 42, 45, 48, 49, 50,
    54, 55, 56, 60, 63, 64, 65, 66, 75, 85, 95,
)

# Printed exceptions in the (n+12)/4 characterisation (claim prop_4_1_b);
# the recomputation shows 32 belongs here as well.
QUARTER_PLUS_THREE_EXCEPTIONS_PRINTED = (4, 6, 8, 16, 18, 24, 25, 27, 30, 35, 36, 40)
QUARTER_PLUS_THREE_EQUALITY = (4, 36, 40)

# Printed enumerations of the n attaining the interval minimum of delta,
# keyed by k (claims example_6_4 and example_6_8).
LOWER_MINIMIZER_ROWS = {
    1: (1,),
    2: (3, 4),
    3: (8, 9),
    4: (15, 16),
    5: (21, 24, 25),
    6: (32, 35, 36),
    7: (45, 48, 49),
    8: (60, 63, 64),
    9: (77, 80, 81),
    10: (91, 96, 99, 100),
}

UPPER_MINIMIZER_ROWS = {
    1: (2,),
    2: (6,),
    3: (10, 12),
    4: (18, 20),
    5: (28, 30),
    6: (40, 42),
    7: (50, 54, 56),
    8: (60, 70, 72),
    9: (84, 88, 90),
    10: (104, 108, 110),
}

# Printed sample of the minimum design size (claim table_8_3_phi).
PHI_TABLE = {
    1: 1,
    2: 3,
    3: 4,
    4: 4,
    5: 5,
    6: 5,
    7: 6,
    8: 6,
    9: 6,
    10: 7,
    11: 7,
    12: 7,
    13: 8,
    14: 8,
    15: 8,
    16: 8,
    17: 9,
    18: 9,
    19: 9,
    20: 9,
    100: 20,
    1000: 64,
    1000000: 2000,
    1001000: 2001,
    1111111: 2110,
}
