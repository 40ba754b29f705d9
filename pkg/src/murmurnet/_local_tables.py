"""Additive local root-number tables at p = 2 and p = 3.

Auto-generated by tools/fit_w23_tables.py from functional-equation
sign observations; do not edit by hand.  Keys: valuation triple
(v(c4) capped at 12, v(c6) capped at 12, v(Delta)) -> (residue
moduli for (c4', c6', Delta'), {reduced residues: w_p}).
"""

W2_GROUPS = {
    (4, 5, 4): ((8, 8, 1), {
        (1, 1, 0): 1,
        (1, 3, 0): 1,
        (1, 5, 0): 1,
        (1, 7, 0): -1,
        (3, 1, 0): -1,
        (3, 3, 0): -1,
        (3, 5, 0): -1,
        (3, 7, 0): -1,
        (5, 1, 0): 1,
        (5, 3, 0): -1,
        (5, 5, 0): 1,
        (5, 7, 0): 1,
        (7, 1, 0): -1,
        (7, 3, 0): -1,
        (7, 5, 0): -1,
        (7, 7, 0): -1,
    }),
    (4, 6, 7): ((1, 8, 4), {
        (0, 1, 1): -1,
        (0, 1, 3): -1,
        (0, 3, 1): 1,
        (0, 3, 3): -1,
        (0, 5, 1): 1,
        (0, 5, 3): 1,
        (0, 7, 1): -1,
        (0, 7, 3): 1,
    }),
    (4, 6, 8): ((1, 8, 8), {
        (0, 1, 1): 1,
        (0, 1, 3): -1,
        (0, 1, 5): -1,
        (0, 1, 7): -1,
        (0, 3, 1): 1,
        (0, 3, 3): -1,
        (0, 3, 5): 1,
        (0, 3, 7): -1,
        (0, 5, 1): -1,
        (0, 5, 3): -1,
        (0, 5, 5): 1,
        (0, 5, 7): -1,
        (0, 7, 1): 1,
        (0, 7, 3): -1,
        (0, 7, 5): 1,
        (0, 7, 7): -1,
    }),
    (4, 6, 9): ((1, 8, 4), {
        (0, 1, 1): 1,
        (0, 1, 3): -1,
        (0, 3, 1): -1,
        (0, 3, 3): -1,
        (0, 5, 1): -1,
        (0, 5, 3): 1,
        (0, 7, 1): 1,
        (0, 7, 3): 1,
    }),
    (4, 6, 10): ((1, 8, 4), {
        (0, 1, 1): 1,
        (0, 1, 3): 1,
        (0, 3, 1): -1,
        (0, 3, 3): 1,
        (0, 5, 1): 1,
        (0, 5, 3): 1,
        (0, 7, 1): 1,
        (0, 7, 3): -1,
    }),
    (4, 6, 11): ((1, 8, 1), {
        (0, 1, 0): 1,
        (0, 3, 0): 1,
        (0, 5, 0): 1,
        (0, 7, 0): -1,
    }),
    (4, 6, 12): ((1, 1, 1), {
        (0, 0, 0): -1,
    }),
    (4, 6, 13): ((1, 1, 1), {
        (0, 0, 0): -1,
    }),
    (4, 6, 14): ((1, 1, 1), {
        (0, 0, 0): -1,
    }),
    (4, 7, 6): ((1, 4, 16), {
        (0, 1, 1): 1,
        (0, 1, 3): 1,
        (0, 1, 5): -1,
        (0, 1, 7): 1,
        (0, 1, 9): -1,
        (0, 1, 11): 1,
        (0, 1, 13): 1,
        (0, 1, 15): 1,
        (0, 3, 1): -1,
        (0, 3, 3): 1,
        (0, 3, 5): 1,
        (0, 3, 7): 1,
        (0, 3, 9): 1,
        (0, 3, 11): 1,
        (0, 3, 13): -1,
        (0, 3, 15): 1,
    }),
    (4, 8, 6): ((1, 1, 16), {
        (0, 0, 1): 1,
        (0, 0, 3): -1,
        (0, 0, 5): -1,
        (0, 0, 7): -1,
        (0, 0, 9): -1,
        (0, 0, 11): -1,
        (0, 0, 13): 1,
        (0, 0, 15): -1,
    }),
    (4, 9, 6): ((1, 1, 16), {
        (0, 0, 1): -1,
        (0, 0, 3): -1,
        (0, 0, 5): 1,
        (0, 0, 9): 1,
        (0, 0, 11): -1,
        (0, 0, 13): -1,
        (0, 0, 15): -1,
    }),
    (4, 10, 6): ((1, 1, 1), {
        (0, 0, 0): -1,
    }),
    (4, 11, 6): ((1, 1, 16), {
        (0, 0, 1): -1,
        (0, 0, 9): 1,
        (0, 0, 13): -1,
    }),
    (4, 12, 6): ((1, 1, 16), {
        (0, 0, 1): -1,
        (0, 0, 3): -1,
        (0, 0, 5): 1,
        (0, 0, 7): -1,
        (0, 0, 9): 1,
        (0, 0, 11): -1,
        (0, 0, 13): -1,
        (0, 0, 15): -1,
    }),
    (5, 5, 4): ((1, 8, 1), {
        (0, 1, 0): -1,
        (0, 3, 0): 1,
        (0, 5, 0): 1,
        (0, 7, 0): 1,
    }),
    (5, 6, 6): ((4, 1, 1), {
        (1, 0, 0): -1,
        (3, 0, 0): 1,
    }),
    (5, 7, 8): ((4, 8, 1), {
        (1, 1, 0): -1,
        (1, 3, 0): 1,
        (1, 5, 0): 1,
        (1, 7, 0): -1,
        (3, 1, 0): 1,
        (3, 3, 0): 1,
        (3, 5, 0): -1,
        (3, 7, 0): -1,
    }),
    (5, 8, 9): ((1, 4, 8), {
        (0, 1, 1): 1,
        (0, 1, 3): -1,
        (0, 1, 5): -1,
        (0, 1, 7): 1,
        (0, 3, 1): -1,
        (0, 3, 3): 1,
        (0, 3, 5): 1,
        (0, 3, 7): -1,
    }),
    (5, 9, 9): ((1, 1, 8), {
        (0, 0, 1): 1,
        (0, 0, 3): 1,
        (0, 0, 5): -1,
        (0, 0, 7): -1,
    }),
    (5, 10, 9): ((1, 1, 4), {
        (0, 0, 1): 1,
        (0, 0, 3): -1,
    }),
    (5, 11, 9): ((1, 1, 1), {
        (0, 0, 0): -1,
    }),
    (5, 12, 9): ((1, 1, 8), {
        (0, 0, 1): 1,
        (0, 0, 3): 1,
        (0, 0, 5): -1,
        (0, 0, 7): -1,
    }),
    (6, 5, 4): ((1, 1, 1), {
        (0, 0, 0): -1,
    }),
    (6, 6, 6): ((1, 4, 1), {
        (0, 1, 0): 1,
        (0, 3, 0): -1,
    }),
    (6, 7, 8): ((4, 8, 1), {
        (1, 1, 0): 1,
        (1, 3, 0): 1,
        (1, 5, 0): -1,
        (1, 7, 0): 1,
        (3, 1, 0): -1,
        (3, 3, 0): 1,
        (3, 5, 0): 1,
        (3, 7, 0): 1,
    }),
    (6, 8, 10): ((4, 4, 1), {
        (1, 1, 0): -1,
        (1, 3, 0): 1,
        (3, 1, 0): 1,
        (3, 3, 0): -1,
    }),
    (6, 9, 13): ((1, 4, 8), {
        (0, 1, 1): -1,
        (0, 1, 3): -1,
        (0, 1, 5): -1,
        (0, 1, 7): 1,
        (0, 3, 1): 1,
        (0, 3, 3): -1,
        (0, 3, 5): 1,
        (0, 3, 7): 1,
    }),
    (6, 9, 14): ((1, 4, 1), {
        (0, 1, 0): 1,
        (0, 3, 0): -1,
    }),
    (6, 10, 12): ((1, 4, 8), {
        (0, 1, 1): 1,
        (0, 1, 3): 1,
        (0, 1, 7): -1,
        (0, 3, 1): 1,
        (0, 3, 3): -1,
        (0, 3, 7): 1,
    }),
    (6, 11, 12): ((1, 1, 4), {
        (0, 0, 1): -1,
        (0, 0, 3): 1,
    }),
    (6, 12, 12): ((1, 1, 1), {
        (0, 0, 0): -1,
    }),
    (7, 5, 4): ((1, 1, 1), {
        (0, 0, 0): -1,
    }),
    (7, 6, 6): ((1, 4, 1), {
        (0, 1, 0): 1,
        (0, 3, 0): -1,
    }),
    (7, 7, 8): ((1, 1, 1), {
        (0, 0, 0): -1,
    }),
    (7, 8, 10): ((1, 4, 1), {
        (0, 1, 0): 1,
        (0, 3, 0): -1,
    }),
    (7, 9, 12): ((4, 8, 1), {
        (1, 1, 0): 1,
        (1, 3, 0): -1,
        (1, 5, 0): -1,
        (1, 7, 0): 1,
        (3, 1, 0): 1,
        (3, 3, 0): 1,
        (3, 5, 0): -1,
        (3, 7, 0): -1,
    }),
    (7, 10, 14): ((1, 16, 1), {
        (0, 3, 0): 1,
        (0, 5, 0): -1,
        (0, 11, 0): -1,
        (0, 13, 0): -1,
    }),
    (7, 11, 15): ((1, 8, 1), {
        (0, 1, 0): -1,
        (0, 3, 0): -1,
        (0, 5, 0): 1,
        (0, 7, 0): 1,
    }),
    (7, 12, 15): ((1, 1, 4), {
        (0, 0, 1): -1,
        (0, 0, 3): 1,
    }),
    (8, 5, 4): ((1, 1, 1), {
        (0, 0, 0): -1,
    }),
    (8, 6, 6): ((1, 4, 1), {
        (0, 1, 0): 1,
        (0, 3, 0): -1,
    }),
    (8, 7, 8): ((1, 1, 1), {
        (0, 0, 0): -1,
    }),
    (8, 8, 10): ((1, 4, 1), {
        (0, 1, 0): 1,
        (0, 3, 0): -1,
    }),
    (8, 9, 12): ((1, 1, 1), {
        (0, 0, 0): -1,
    }),
    (8, 10, 14): ((1, 4, 1), {
        (0, 1, 0): 1,
        (0, 3, 0): -1,
    }),
    (9, 5, 4): ((1, 1, 1), {
        (0, 0, 0): -1,
    }),
    (9, 6, 6): ((1, 4, 1), {
        (0, 1, 0): 1,
        (0, 3, 0): -1,
    }),
    (9, 7, 8): ((1, 1, 1), {
        (0, 0, 0): -1,
    }),
    (9, 8, 10): ((1, 4, 1), {
        (0, 1, 0): 1,
        (0, 3, 0): -1,
    }),
    (9, 9, 12): ((1, 1, 1), {
        (0, 0, 0): -1,
    }),
    (9, 10, 14): ((1, 4, 1), {
        (0, 1, 0): 1,
        (0, 3, 0): -1,
    }),
}

W3_GROUPS = {
    (2, 3, 3): ((1, 9, 1), {
        (0, 1, 0): -1,
        (0, 2, 0): 1,
        (0, 4, 0): 1,
        (0, 5, 0): -1,
        (0, 7, 0): 1,
        (0, 8, 0): 1,
    }),
    (2, 3, 4): ((1, 1, 1), {
        (0, 0, 0): 1,
    }),
    (2, 3, 5): ((1, 3, 3), {
        (0, 1, 1): 1,
        (0, 1, 2): -1,
        (0, 2, 1): -1,
        (0, 2, 2): 1,
    }),
    (2, 3, 6): ((1, 1, 1), {
        (0, 0, 0): -1,
    }),
    (2, 3, 7): ((1, 1, 1), {
        (0, 0, 0): -1,
    }),
    (2, 3, 8): ((1, 1, 1), {
        (0, 0, 0): -1,
    }),
    (2, 4, 3): ((1, 3, 3), {
        (0, 1, 1): -1,
        (0, 1, 2): 1,
        (0, 2, 1): 1,
        (0, 2, 2): -1,
    }),
    (2, 5, 3): ((1, 1, 1), {
        (0, 0, 0): 1,
    }),
    (2, 6, 3): ((1, 1, 1), {
        (0, 0, 0): 1,
    }),
    (2, 7, 3): ((1, 1, 1), {
        (0, 0, 0): 1,
    }),
    (2, 8, 3): ((1, 1, 1), {
        (0, 0, 0): 1,
    }),
    (3, 3, 3): ((1, 9, 1), {
        (0, 1, 0): -1,
        (0, 2, 0): -1,
        (0, 4, 0): 1,
        (0, 5, 0): 1,
        (0, 7, 0): 1,
        (0, 8, 0): 1,
    }),
    (3, 4, 5): ((1, 3, 1), {
        (0, 1, 0): -1,
        (0, 2, 0): 1,
    }),
    (3, 5, 6): ((1, 1, 3), {
        (0, 0, 1): -1,
        (0, 0, 2): 1,
    }),
    (3, 6, 6): ((1, 1, 1), {
        (0, 0, 0): -1,
    }),
    (3, 7, 6): ((1, 1, 1), {
        (0, 0, 0): -1,
    }),
    (3, 8, 6): ((1, 1, 1), {
        (0, 0, 0): -1,
    }),
    (4, 3, 3): ((1, 9, 1), {
        (0, 1, 0): -1,
        (0, 2, 0): -1,
        (0, 4, 0): 1,
        (0, 5, 0): 1,
        (0, 7, 0): 1,
        (0, 8, 0): 1,
    }),
    (4, 4, 5): ((1, 3, 1), {
        (0, 1, 0): -1,
        (0, 2, 0): 1,
    }),
    (4, 5, 7): ((1, 3, 1), {
        (0, 1, 0): -1,
        (0, 2, 0): 1,
    }),
    (4, 6, 9): ((1, 1, 1), {
        (0, 0, 0): -1,
    }),
    (4, 6, 10): ((1, 1, 1), {
        (0, 0, 0): -1,
    }),
    (6, 3, 3): ((1, 9, 1), {
        (0, 1, 0): -1,
        (0, 2, 0): -1,
        (0, 4, 0): 1,
        (0, 5, 0): 1,
        (0, 7, 0): 1,
        (0, 8, 0): 1,
    }),
    (6, 4, 5): ((1, 1, 1), {
        (0, 0, 0): -1,
    }),
    (6, 5, 7): ((1, 3, 1), {
        (0, 1, 0): -1,
        (0, 2, 0): 1,
    }),
    (6, 6, 9): ((1, 3, 1), {
        (0, 1, 0): 1,
        (0, 2, 0): -1,
    }),
    (12, 3, 3): ((1, 9, 1), {
        (0, 1, 0): -1,
        (0, 2, 0): -1,
        (0, 4, 0): 1,
        (0, 5, 0): 1,
        (0, 7, 0): 1,
        (0, 8, 0): 1,
    }),
    (12, 4, 5): ((1, 3, 1), {
        (0, 1, 0): -1,
        (0, 2, 0): 1,
    }),
    (12, 5, 7): ((1, 3, 1), {
        (0, 1, 0): -1,
        (0, 2, 0): 1,
    }),
    (12, 6, 9): ((1, 1, 1), {
        (0, 0, 0): -1,
    }),
    (12, 7, 11): ((1, 1, 1), {
        (0, 0, 0): 1,
    }),
}

