"""Reference values for the classification of optimal binary LCD codes.

``KNOWN_TABLE[(n, k)] = (d, count)`` records the largest minimum weight d
among binary LCD [n, k] codes and the number of inequivalent LCD [n, k, d]
codes, for 2 <= k <= n-1 <= 15.  The table is the golden reference that
``verify_table`` reproduces cell by cell; it is never consulted by the
search itself.
"""

from __future__ import annotations

TABLE_N_MAX = 16

_ROWS: dict[int, list[tuple[int, int]]] = {
    # n: [(d, count) for k = 2 .. n-1]
    3: [(2, 1)],
    4: [(2, 2), (1, 2)],
    5: [(2, 3), (2, 1), (2, 1)],
    6: [(3, 2), (2, 3), (2, 4), (1, 3)],
    7: [(4, 1), (3, 1), (2, 9), (2, 2), (2, 1)],
    8: [(5, 1), (3, 3), (3, 1), (2, 9), (2, 6), (1, 4)],
    9: [(6, 1), (4, 1), (4, 1), (3, 2), (2, 23), (2, 3), (2, 1)],
    10: [(6, 2), (5, 1), (4, 5), (3, 11), (3, 2), (2, 23), (2, 9), (1, 5)],
    11: [(6, 4), (5, 6), (4, 20), (4, 4), (4, 1), (3, 1), (2, 51), (2, 4), (2, 1)],
    12: [(7, 2), (6, 1), (5, 6), (4, 37), (4, 11), (3, 22), (2, 396), (2, 51), (2, 12), (1, 6)],
    13: [(8, 1), (6, 6), (6, 2), (5, 5), (4, 146), (4, 4), (3, 27), (2, 619), (2, 103), (2, 5), (2, 1)],
    14: [(9, 1), (7, 1), (6, 16), (5, 101), (5, 4), (4, 301), (4, 8), (3, 31), (2, 1370), (2, 103), (2, 16), (1, 7)],
    15: [(10, 1), (7, 8), (6, 89), (6, 10), (6, 2), (5, 1), (4, 985), (4, 2), (3, 34), (2, 2143), (2, 196), (2, 7), (2, 1)],
    16: [(10, 2), (8, 1), (7, 7), (6, 283), (6, 60), (5, 1596), (5, 1), (4, 1772), (4, 7), (3, 34), (2, 4389), (2, 196), (2, 20), (1, 8)],
}

KNOWN_TABLE: dict[tuple[int, int], tuple[int, int]] = {
    (n, k): cell
    for n, cells in _ROWS.items()
    for k, cell in zip(range(2, n), cells)
}
