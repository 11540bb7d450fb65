"""Known classification reference values for small stabilizer codes.

Frozen copies of the published classification of binary stabilizer codes
up to local-Clifford + qubit-permutation equivalence, on up to 9 qubits.
Used as oracles by the unit and acceptance tests.

Class indices assigned by this package are lexicographic ranks of
canonical keys and do not match the row labels below; rows are matched
by the (n, k, d, |Aut|, w) fingerprint instead.
"""

from stabdb.pauli import StabGroup

# Number of equivalence classes per (n, k), k = 0..n.
CLASS_COUNTS = {
    1: (1, 1),
    2: (2, 2, 1),
    3: (3, 5, 3, 1),
    4: (6, 13, 11, 4, 1),
    5: (11, 36, 40, 19, 5, 1),
    6: (26, 115, 185, 109, 32, 6, 1),
    7: (59, 448, 1075, 852, 267, 48, 7, 1),
    8: (182, 2371, 10010, 11422, 3963, 614, 71, 8, 1),
    9: (675, 20128, 181039, 353569, 146658, 18445, 1344, 99, 9, 1),
}

# Of those, the number that are indecomposable.
INDECOMPOSABLE_COUNTS = {
    1: (1, 1),
    2: (1, 1),
    3: (1, 2, 1),
    4: (2, 6, 4, 1),
    5: (4, 17, 18, 6, 1),
    6: (11, 63, 107, 53, 10, 1),
    7: (26, 284, 754, 556, 131, 13, 1),
    8: (101, 1767, 8328, 9417, 2834, 306, 19, 1),
    9: (440, 17143, 167595, 331296, 131035, 13852, 668, 24, 1),
}

TOTAL_CLASS_COUNTS = {1: 2, 2: 5, 3: 12, 4: 35, 5: 112, 6: 474, 7: 2757,
                      8: 28642, 9: 721967}
TOTAL_INDECOMPOSABLE_COUNTS = {1: 2, 2: 2, 3: 4, 4: 13, 5: 46, 6: 245,
                               7: 1765, 8: 22773, 9: 662054}

# Indecomposable classes with k >= 1 and d >= 2, keyed by (n, k, d).
INDECOMP_NKD_COUNTS = {
    (4, 1, 2): 2, (4, 2, 2): 1,
    (5, 1, 2): 4, (5, 2, 2): 2, (5, 1, 3): 1,
    (6, 1, 2): 27, (6, 2, 2): 25, (6, 3, 2): 5, (6, 4, 2): 1, (6, 1, 3): 1,
    (7, 1, 2): 128, (7, 2, 2): 209, (7, 3, 2): 62, (7, 4, 2): 6,
    (7, 1, 3): 16,
    (8, 1, 2): 964, (8, 2, 2): 3450, (8, 3, 2): 2043, (8, 4, 2): 255,
    (8, 5, 2): 11, (8, 6, 2): 1, (8, 1, 3): 157, (8, 2, 3): 20, (8, 3, 3): 1,
    (9, 1, 2): 9395, (9, 2, 2): 94048, (9, 3, 2): 128405, (9, 4, 2): 23844,
    (9, 5, 2): 757, (9, 6, 2): 12, (9, 1, 3): 3411, (9, 2, 3): 4425,
    (9, 3, 3): 221,
}

# Same refinement restricted to classes that admit a CSS representative.
INDECOMP_CSS_NKD_COUNTS = {
    (4, 1, 2): 1, (4, 2, 2): 1,
    (5, 1, 2): 3, (5, 2, 2): 1,
    (6, 1, 2): 12, (6, 2, 2): 10, (6, 3, 2): 2, (6, 4, 2): 1,
    (7, 1, 2): 41, (7, 2, 2): 37, (7, 3, 2): 13, (7, 4, 2): 2, (7, 1, 3): 1,
    (8, 1, 2): 168, (8, 2, 2): 244, (8, 3, 2): 114, (8, 4, 2): 31,
    (8, 5, 2): 3, (8, 6, 2): 1, (8, 1, 3): 1,
    (9, 1, 2): 717, (9, 2, 2): 1475, (9, 3, 2): 1082, (9, 4, 2): 305,
    (9, 5, 2): 40, (9, 6, 2): 3, (9, 1, 3): 19,
}

# GF(4)-linear classes (decomposable ones included; trivial groups are
# never counted as GF(4)-linear), keyed by (n, k, d), n <= 6.
GF4_NKD_COUNTS = {
    (2, 0, 2): 1,
    (3, 1, 1): 1,
    (4, 0, 2): 1, (4, 2, 1): 1, (4, 2, 2): 1,
    (5, 1, 1): 1, (5, 1, 3): 1, (5, 3, 1): 2,
    (6, 0, 2): 1, (6, 0, 4): 1, (6, 2, 1): 2, (6, 2, 2): 2,
    (6, 4, 1): 2, (6, 4, 2): 1,
}

# The indecomposable GF(4)-linear classes with n <= 6:
# (n, k, d, |Aut|, generators).
GF4_INDECOMPOSABLE_ROWS = (
    (2, 0, 2, 12, "Z0Z1;X0X1"),
    (4, 2, 2, 144, "Z0Z1Z2Z3;X0X1X2X3"),
    (5, 1, 3, 360, "Y0Y1Z2Z3;Y0Z1Y2Z4;X0Z2X3Z4;X0Z1Z3X4"),
    (6, 0, 4, 2160, "Y0Z1Z2Z5;Z0Y1Z3Z5;Z0Y2Z4Z5;Z1Y3Z4Z5;Z2Z3Y4Z5;X0Z3Z4Y5"),
    (6, 2, 2, 288, "Z0Z1Z2Z3;X0X1X2X3;Z0Z1Z4Z5;X0X1X4X5"),
    (6, 4, 2, 4320, "Z0Z1Z2Z3Z4Z5;Y0Y1Y2Y3Y4Y5"),
)

# Per-class rows (n, k, d, |Aut|, generators, weight enumerator coefficients).
# Complete for every indecomposable class with n <= 5 and with (n,k) = (6,0);
# the remaining rows are selected known classes on 6 and 7 qubits.
CLASS_ROWS = (
    (1, 0, 1, 2, "Z0", (1, 1)),
    (1, 1, 1, 6, "", (1, 0)),
    (2, 0, 2, 12, "Z0Z1;X0X1", (1, 0, 3)),
    (2, 1, 1, 8, "X0X1", (1, 0, 1)),
    (3, 0, 2, 24, "X0X1;X0X2;Z0Z1Z2", (1, 0, 3, 4)),
    (3, 1, 1, 8, "X0X2;Z0Z1Z2", (1, 0, 1, 2)),
    (3, 1, 1, 48, "X0X1;X0X2", (1, 0, 3, 0)),
    (3, 2, 1, 48, "Z0Z1Z2", (1, 0, 0, 1)),
    (4, 0, 2, 32, "X0X2;Z1Z3;Z0Z2Z3;X1X2X3", (1, 0, 2, 8, 5)),
    (4, 0, 2, 192, "Z0Z3;Z1Z3;Z2Z3;X0X1X2X3", (1, 0, 6, 0, 9)),
    (4, 1, 1, 8, "Z1Z3;Z0Z2Z3;X1X2X3", (1, 0, 1, 4, 2)),
    (4, 1, 1, 32, "X0X2;Z1Z3;X1X2X3", (1, 0, 2, 4, 1)),
    (4, 1, 1, 48, "Z1Z3;Z2Z3;X0X1X2X3", (1, 0, 3, 0, 4)),
    (4, 1, 1, 384, "Z0Z3;Z1Z3;Z2Z3", (1, 0, 6, 0, 1)),
    (4, 1, 2, 24, "Z0X2Z3;Y0X1Y2;Z1Z2X3", (1, 0, 0, 4, 3)),
    (4, 1, 2, 32, "X0X1;X2X3;Z0Z1Z2Z3", (1, 0, 2, 0, 5)),
    (4, 2, 1, 16, "Z0Z2Z3;X1X2X3", (1, 0, 0, 2, 1)),
    (4, 2, 1, 32, "X2X3;Z0Z1Z2Z3", (1, 0, 1, 0, 2)),
    (4, 2, 1, 64, "Z1Z3;Z0Z2Z3", (1, 0, 1, 2, 0)),
    (4, 2, 2, 144, "Z0Z1Z2Z3;X0X1X2X3", (1, 0, 0, 0, 3)),
    (4, 3, 1, 384, "X0X1X2X3", (1, 0, 0, 0, 1)),
    (5, 0, 2, 32, "Z0Z4;Z1Z2;Z1Z3Z4;X1X2X3;X0X3X4", (1, 0, 2, 8, 13, 8)),
    (5, 0, 2, 96, "Z0Z4;Z1Z4;X2X3;Z2Z3Z4;X0X1X3X4", (1, 0, 4, 6, 11, 10)),
    (5, 0, 2, 1920, "Z0Z4;Z1Z4;Z2Z4;Z3Z4;X0X1X2X3X4", (1, 0, 10, 0, 5, 16)),
    (5, 0, 3, 120, "X0Z1Z2;Z0X1Z3;Z0X2Z4;Z1X3Z4;Z2Z3X4", (1, 0, 0, 10, 15, 6)),
    (5, 1, 1, 8, "Z1Z2;Z1Z3Z4;X1X2X3;X0X3X4", (1, 0, 1, 5, 6, 3)),
    (5, 1, 1, 16, "Z0X1Z3;Z0X2Z4;Z1X3Z4;Z2Z3X4", (1, 0, 0, 6, 7, 2)),
    (5, 1, 1, 32, "Z0Z4;Z1Z2;Z1Z3Z4;X1X2X3", (1, 0, 2, 6, 5, 2)),
    (5, 1, 1, 32, "Z1Z4;X2X3;Z2Z3Z4;X0X1X3X4", (1, 0, 2, 4, 5, 4)),
    (5, 1, 1, 48, "Z0Z4;Z1Z4;Z2Z3Z4;X0X1X3X4", (1, 0, 3, 3, 4, 5)),
    (5, 1, 1, 64, "X0Z4;X1X2;Y1Z2Y3Z4;Z0Z1Z2X4", (1, 0, 2, 0, 13, 0)),
    (5, 1, 1, 64, "Z0Z4;Z1Z2;X1X2X3;X0X3X4", (1, 0, 2, 4, 5, 4)),
    (5, 1, 1, 64, "Z0Z4;Z1Z2;Z1Z3Z4;X0X1X2X4", (1, 0, 2, 4, 5, 4)),
    (5, 1, 1, 192, "Z0Z4;Z1Z4;X2X3;X0X1X3X4", (1, 0, 4, 0, 11, 0)),
    (5, 1, 1, 192, "Z0Z4;Z1Z4;X2X3;Z2Z3Z4", (1, 0, 4, 6, 3, 2)),
    (5, 1, 1, 384, "Z1Z4;Z2Z4;Z3Z4;X0X1X2X3X4", (1, 0, 6, 0, 1, 8)),
    (5, 1, 1, 3840, "Z0Z4;Z1Z4;Z2Z4;Z3Z4", (1, 0, 10, 0, 5, 0)),
    (5, 1, 2, 8, "Z0Z1Z3;Z2Z3Z4;X1X2X3;X0X3X4", (1, 0, 0, 4, 7, 4)),
    (5, 1, 2, 8, "X1X2;X1Z3Z4;Y0X3Y4;X0Y1Z2Y3", (1, 0, 1, 3, 6, 5)),
    (5, 1, 2, 16, "Z1Z4;X2X3;X0X1X4;Z0Z2Z3Z4", (1, 0, 2, 2, 5, 6)),
    (5, 1, 2, 96, "Z0Z4;Z1Z4;Z2Z3;X0X1X2X3X4", (1, 0, 4, 0, 3, 8)),
    (5, 1, 3, 360, "Y0Y1Z2Z3;Y0Z1Y2Z4;X0Z2X3Z4;X0Z1Z3X4", (1, 0, 0, 0, 15, 0)),
    (5, 2, 1, 8, "Z2Z3Z4;X1X2X3;X0X3X4", (1, 0, 0, 3, 3, 1)),
    (5, 2, 1, 8, "X2Z3Z4;Y1Y2X3;Z0Z1Z2X4", (1, 0, 0, 2, 3, 2)),
    (5, 2, 1, 16, "Z1Z2;Z1Z3Z4;X0X1X2X4", (1, 0, 1, 2, 2, 2)),
    (5, 2, 1, 16, "X2X3;X0X1X4;Z1Z2Z3Z4", (1, 0, 1, 1, 2, 3)),
    (5, 2, 1, 32, "Z1Z2;Z1Z3Z4;X0X3X4", (1, 0, 1, 3, 2, 1)),
    (5, 2, 1, 32, "Z1Z4;X0X1X4;Z0Z2Z3Z4", (1, 0, 1, 2, 2, 2)),
    (5, 2, 1, 32, "X1X2;Y1Z2Y3Z4;Z0Z1Z2X4", (1, 0, 1, 0, 6, 0)),
    (5, 2, 1, 32, "X1X2X3;X0X3X4;Z0Z1Z2Z4", (1, 0, 0, 2, 3, 2)),
    (5, 2, 1, 48, "X0X1X2Z4;X0Y1Z2Y3;Z0Z1Z2X4", (1, 0, 0, 0, 7, 0)),
    (5, 2, 1, 64, "Z1Z4;X2X3;Z0Z2Z3Z4", (1, 0, 2, 0, 5, 0)),
    (5, 2, 1, 64, "Z1Z2;X1X2X3;X0X3X4", (1, 0, 1, 3, 2, 1)),
    (5, 2, 1, 64, "Z1Z4;Z2Z3;X0X1X2X3X4", (1, 0, 2, 0, 1, 4)),
    (5, 2, 1, 96, "Z0X1Z3;Z0X2Z4;Z2Z3X4", (1, 0, 0, 4, 3, 0)),
    (5, 2, 1, 192, "Z0Z4;Z1Z4;X0X1X2X3X4", (1, 0, 3, 0, 0, 4)),
    (5, 2, 1, 256, "Z0Z4;Z1Z2;Z1Z3Z4", (1, 0, 2, 4, 1, 0)),
    (5, 2, 1, 384, "Z0Z4;Z1Z4;Z2Z3Z4", (1, 0, 3, 3, 0, 1)),
    (5, 2, 2, 12, "Z0Z1X4;X0X2Z3Z4;X1Z2X3Z4", (1, 0, 0, 1, 3, 3)),
    (5, 2, 2, 48, "Z1Z4;Z0Z2Z3Z4;X0X1X2X3X4", (1, 0, 1, 0, 2, 4)),
    (5, 3, 1, 32, "X0X1X4;Z1Z2Z3Z4", (1, 0, 0, 1, 1, 1)),
    (5, 3, 1, 96, "X0X2Z3Z4;X1Z2X3Z4", (1, 0, 0, 0, 3, 0)),
    (5, 3, 1, 96, "Z1Z2Z3Z4;X0X1X2X3X4", (1, 0, 0, 0, 1, 2)),
    (5, 3, 1, 192, "Z2Z3;X0X1X2X3X4", (1, 0, 1, 0, 0, 2)),
    (5, 3, 1, 256, "X1X2X3;X0X3X4", (1, 0, 0, 2, 1, 0)),
    (5, 3, 1, 384, "Z1Z4;Z0Z2Z3Z4", (1, 0, 1, 0, 2, 0)),
    (5, 4, 1, 3840, "X0X1X2X3X4", (1, 0, 0, 0, 0, 1)),
    (6, 0, 2, 32, "X0X4;Z1Z5;X2X3X4;Z2Z3Z5;Z0Z3Z4;X1X2X5",
     (1, 0, 2, 8, 17, 24, 12)),
    (6, 0, 2, 32, "X0Z5;X1Z3Z5;X2Z4Z5;Z1X3Z4;Z2Z3X4;Z0Z1Z2X5",
     (1, 0, 1, 8, 19, 24, 11)),
    (6, 0, 2, 96, "Z0Z5;Z1Z5;Z2Z4;Z3Z4Z5;X2X3X4;X0X1X3X5",
     (1, 0, 4, 8, 13, 24, 14)),
    (6, 0, 2, 128, "Z0Z5;X1X3;X2X4;Z1Z3Z5;Z2Z4Z5;X0X3X4X5",
     (1, 0, 3, 8, 15, 24, 13)),
    (6, 0, 2, 384, "Z0Z4;Z1Z5;Z2Z3;Z2Z4Z5;X0X2X3X4;X1X2X3X5",
     (1, 0, 3, 8, 15, 24, 13)),
    (6, 0, 2, 384, "X0Z3;X1Z4;X2Z5;Z0X3Z4Z5;Z1Z3X4Z5;Z2Z3Z4X5",
     (1, 0, 3, 0, 39, 0, 21)),
    (6, 0, 2, 768, "Z0Z5;Z1Z5;Z2Z5;X3X4;Z3Z4Z5;X0X1X2X4X5",
     (1, 0, 7, 8, 7, 24, 17)),
    (6, 0, 2, 1152, "X0X4;Z1Z5;Z2Z5;X3X4;Z0Z3Z4Z5;X1X2X4X5",
     (1, 0, 6, 0, 33, 0, 24)),
    (6, 0, 2, 23040, "Z0Z5;Z1Z5;Z2Z5;Z3Z5;Z4Z5;X0X1X2X3X4X5",
     (1, 0, 15, 0, 15, 0, 33)),
    (6, 0, 3, 48, "X0X1X2;Z0Z1Z4;Z0Z2Z5;Z3Z4Z5;X1X3X4;X2X3X5",
     (1, 0, 0, 8, 21, 24, 10)),
    (6, 0, 4, 2160, "Y0Z1Z2Z5;Z0Y1Z3Z5;Z0Y2Z4Z5;Z1Y3Z4Z5;Z2Z3Y4Z5;X0Z3Z4Y5",
     (1, 0, 0, 0, 45, 0, 18)),
    (6, 1, 3, 96, "X0Z5;X1X2Z3Z4;Y1Y3Z4Z5;X1Z2X4Z5;Z0Y1Z2Z3Y5",
     (1, 0, 1, 0, 11, 16, 3)),
    (6, 2, 2, 288, "Z0Z1Z2Z3;X0X1X2X3;Z0Z1Z4Z5;X0X1X4X5",
     (1, 0, 0, 0, 9, 0, 6)),
    (6, 4, 2, 4320, "Z0Z1Z2Z3Z4Z5;Y0Y1Y2Y3Y4Y5", (1, 0, 0, 0, 0, 0, 3)),
    (7, 1, 3, 4, "Z3X4Z6;Z2Z4X6;Y0Y1Z2Z5;Y0Z1Y2Z6;Z0X1X3Z4;X0Z2Z3X5",
     (1, 0, 0, 2, 9, 24, 22, 6)),
    (7, 1, 3, 6, "Z1Z3X5;Z2Z4X6;Y0Y1Z2Z5;Y0Z1Y2Z6;Z0X1X3Z4;Z0X2Z3X4",
     (1, 0, 0, 2, 9, 24, 22, 6)),
    (7, 1, 3, 16, "X0X1Z3Z4;X0X2Z3Z5;Z0Z1Y3Y4;Z2Z3Z4X5;Z0Z1Z2X6;Y0Y3Z4Z5Z6",
     (1, 0, 0, 0, 13, 24, 18, 8)),
    (7, 1, 3, 16, "X0Z6;Z1Z3X4;Z2Z3X5;X1X2Z4Z5;X1X3Z5Z6;Z0Y1Z2Z4Y6",
     (1, 0, 1, 2, 7, 24, 23, 6)),
    (7, 1, 3, 32, "X0Z4;Y1Y2Z3Z5;Y1Z2Y3Z6;Z0X4Z5Z6;Z2Z3Y5Y6;X1Z3Z4X5Z6",
     (1, 0, 1, 0, 11, 24, 19, 8)),
    (7, 1, 3, 32, "X0Z6;X1X2Z4Z5;X1X3Z5Z6;Y1Z3Y4Z6;Y2Z3Y5Z6;Z0Z1Z2X6",
     (1, 0, 1, 0, 19, 0, 43, 0)),
    (7, 1, 3, 42, "Y0Y1Z2Z5;Y0Z1Y2Z6;Z0X1X3Z4;Z0X2Z3X4;X0Z2Z3X5;X0Z1Z4X6",
     (1, 0, 0, 0, 21, 0, 42, 0)),
    (7, 1, 3, 48, "X0X1Z3Z4;X0X2Z3Z5;Z0Z1Y3Y4;Z0Z2Y3Y5;Z0Z1Z2X6;Y0Y3Z4Z5Z6",
     (1, 0, 0, 0, 13, 24, 18, 8)),
    (7, 1, 3, 64, "X0Z5;X1Z6;Y2Y3Z4Z5;Y2Z3Y4Z6;Z0X2Z4X5Z6;Z1X2Z3Z5X6",
     (1, 0, 2, 0, 9, 24, 20, 8)),
    (7, 1, 3, 64, "X0Z6;X1Z3;Z3X4Z5Z6;Z1X2Y3Y4;Z2Z4X5Z6;Z0Y2Z4Y6",
     (1, 0, 2, 0, 17, 0, 44, 0)),
    (7, 1, 3, 96, "X0Z1;Z0X1Z6;X2X3Z4Z5;Y2Y4Z5Z6;X2Z3X5Z6;Z1Y2Z3Z4Y6",
     (1, 0, 1, 2, 7, 24, 23, 6)),
    (7, 1, 3, 144, "Y0Y1Z5Z6;Z0X1X2Z3;X0Z1Z2X3;X0Z1X4Z6;Z0Z3Z4X5;Z1Z2Z4X6",
     (1, 0, 0, 0, 21, 0, 42, 0)),
    (7, 1, 3, 192, "X0Z6;X1Z5;X2Z4;Z2X3X4Z5;Z1Y3Y5Z6;Z0Z3Z4X6",
     (1, 0, 3, 0, 15, 0, 45, 0)),
    (7, 1, 3, 576, "X0Z6;X1Z6;X2X3Z4Z5;Y2Y4Z5Z6;X2Z3X5Z6;Z0Z1Y2Z3Z4Y6",
     (1, 0, 3, 0, 15, 0, 45, 0)),
    (7, 1, 3, 768, "X0Z4;X1Z4;X2Z5;X3Z6;Z2Z3Y5Y6;Z0Z1Z2X4X5Z6",
     (1, 0, 5, 0, 11, 0, 47, 0)),
    (7, 1, 3, 1008, "Z0Z1Z3Z6;Z0Z2Z3Z5;Y1Y2Y3Y4;Z3Z4Z5Z6;Y0Y1Y4Y5;Y0Y2Y4Y6",
     (1, 0, 0, 0, 21, 0, 42, 0)),
)

# Fingerprints singled out by the verification plan.
STEANE_ROW = CLASS_ROWS[-1]
PERFECT_513_ROW = next(r for r in CLASS_ROWS if r[:3] == (5, 1, 3))
HEXACODE_ROW = next(r for r in CLASS_ROWS if r[:3] == (6, 0, 4))


def tokens_to_string(tokens, n):
    """Expand a subscript-token Pauli such as 'Y0Z1Z2' to letter form."""
    letters = ["I"] * n
    for i in range(0, len(tokens), 2):
        letters[int(tokens[i + 1])] = tokens[i]
    return "".join(letters)


def group_from_row(row):
    """Build the StabGroup for a CLASS_ROWS / GF4 row."""
    n, gens = row[0], row[4]
    if not gens:
        return StabGroup.from_strings([], n)
    return StabGroup.from_strings(
        [tokens_to_string(tok, n) for tok in gens.split(";")], n)
