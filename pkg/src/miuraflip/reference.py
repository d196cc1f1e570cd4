"""Published reference values checked by the verification suite."""

# v_n^d for 2 <= n <= 9; omitted degrees are zero
DEGREE_TABLE = {
    2: {2: 4, 4: 2},
    3: {2: 4, 3: 4, 4: 8, 6: 2},
    4: {2: 4, 3: 8, 4: 20, 5: 8, 6: 12, 8: 2},
    5: {2: 4, 3: 12, 4: 36, 5: 36, 6: 44, 7: 12, 8: 16, 10: 2},
    6: {2: 4, 3: 16, 4: 56, 5: 88, 6: 128, 7: 80, 8: 76, 9: 16, 10: 20, 12: 2},
    7: {2: 4, 3: 20, 4: 80, 5: 168, 6: 296, 7: 296, 8: 292, 9: 140, 10: 116,
        11: 20, 12: 24, 14: 2},
    8: {2: 4, 3: 24, 4: 108, 5: 280, 6: 584, 7: 792, 8: 924, 9: 680, 10: 544,
        11: 216, 12: 164, 13: 24, 14: 28, 16: 2},
    9: {2: 4, 3: 28, 4: 140, 5: 428, 6: 1032, 7: 1744, 8: 2428, 9: 2396,
        10: 2144, 11: 1288, 12: 900, 13: 308, 14: 220, 15: 28, 16: 32, 18: 2},
}

# a -> (v_n^{2n-a})_n for n up to 9, then the constant value of each
# successive difference column that is constant
REVERSE_TABLE = {
    0: ((2, 2, 2, 2, 2, 2, 2, 2), (0,)),
    1: ((0, 0, 0, 0, 0, 0, 0, 0), (0,)),
    2: ((8, 12, 16, 20, 24, 28, 32), (4, 0)),
    3: ((4, 8, 12, 16, 20, 24, 28), (4, 0)),
    4: ((20, 44, 76, 116, 164, 220), (None, 8, 0)),
    5: ((8, 36, 80, 140, 216, 308), (None, 16, 0)),
}
REVERSE_FIRST_DIFFS = {
    4: (24, 32, 40, 48, 56),
    5: (28, 44, 60, 76, 92),
}
