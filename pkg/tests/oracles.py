"""Independent brute-force oracles shared by the test modules."""

import itertools


def enumeration_oracle(limit=50):
    """Sorted 4-tuples with sum 1/a_i > 1 and 1/a1 + 1/a2 + 1/a3 < 1, in integer arithmetic."""
    out = []
    for a1, a2, a3 in itertools.combinations_with_replacement(range(2, limit + 1), 3):
        if a2 * a3 + a1 * a3 + a1 * a2 >= a1 * a2 * a3:
            continue
        for a4 in range(a3, limit + 1):
            p = a1 * a2 * a3 * a4
            if a2 * a3 * a4 + a1 * a3 * a4 + a1 * a2 * a4 + a1 * a2 * a3 > p:
                out.append((a1, a2, a3, a4))
    return sorted(out)


# Frozen from the classifier run; the machine-closed set may grow but never shrink.
BUMP_CLOSED = (
    (2, 3, 7, 8), (2, 3, 7, 9), (2, 3, 7, 10), (2, 3, 7, 11), (2, 3, 7, 12), (2, 3, 7, 13),
    (2, 3, 7, 15), (2, 3, 7, 16), (2, 3, 7, 17), (2, 3, 7, 18), (2, 3, 7, 19), (2, 3, 7, 20),
    (2, 3, 7, 22), (2, 3, 7, 23), (2, 3, 7, 24), (2, 3, 7, 25), (2, 3, 7, 26), (2, 3, 7, 27),
    (2, 3, 7, 29), (2, 3, 7, 30), (2, 3, 7, 31), (2, 3, 7, 32), (2, 3, 7, 33), (2, 3, 7, 34),
    (2, 3, 7, 36), (2, 3, 7, 37), (2, 3, 7, 38), (2, 3, 7, 39), (2, 3, 7, 40), (2, 3, 7, 41),
    (2, 3, 8, 11), (2, 3, 8, 13), (2, 3, 8, 14), (2, 3, 8, 15), (2, 3, 8, 17), (2, 3, 8, 19),
    (2, 3, 8, 21), (2, 3, 8, 22), (2, 3, 8, 23), (2, 3, 9, 11), (2, 3, 9, 13), (2, 3, 9, 14),
    (2, 3, 9, 16), (2, 3, 9, 17), (2, 3, 10, 11), (2, 3, 10, 13), (2, 3, 10, 14), (2, 3, 11, 12),
    (2, 3, 11, 13), (2, 4, 5, 7), (2, 4, 5, 9), (2, 4, 5, 11), (2, 4, 5, 13), (2, 4, 5, 14),
    (2, 4, 5, 16), (2, 4, 5, 17), (2, 4, 5, 18), (2, 4, 5, 19), (2, 4, 6, 7), (2, 4, 6, 11),
    (2, 4, 7, 8), (2, 4, 7, 9), (2, 5, 5, 7), (2, 5, 5, 9), (2, 5, 6, 7), (3, 3, 4, 7),
    (3, 3, 4, 11), (3, 3, 5, 7),
)

SCREEN_CLOSED = (
    (2, 3, 7, 35), (2, 3, 8, 9), (2, 3, 8, 10), (2, 3, 8, 18), (2, 3, 8, 20), (2, 3, 9, 10),
    (2, 3, 9, 15), (2, 3, 10, 12), (2, 4, 5, 12), (2, 4, 5, 15), (2, 4, 6, 10), (2, 5, 5, 8),
    (2, 5, 6, 6), (3, 3, 4, 5), (3, 3, 4, 9), (3, 3, 4, 10), (3, 3, 5, 6), (3, 4, 4, 5),
)
