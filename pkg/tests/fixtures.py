"""Hand-transcribed reference data."""

from __future__ import annotations

# labeled Hasse diagram of P_3: (lower, upper) -> label
P3_LABELED_EDGES = {
    ((1, 2, 3), (1, 2, 0)): (3, 3),
    ((1, 2, 3), (1, 3, 2)): (2, 3),
    ((1, 2, 3), (2, 1, 3)): (1, 2),
    ((1, 2, 0), (1, 0, 3)): (2, 2),
    ((1, 2, 0), (2, 1, 0)): (1, 2),
    ((1, 3, 2), (1, 0, 3)): (2, 3),
    ((1, 3, 2), (3, 2, 1)): (1, 2),
    ((2, 1, 3), (2, 1, 0)): (3, 3),
    ((2, 1, 3), (3, 2, 1)): (1, 3),
    ((1, 0, 3), (1, 0, 0)): (3, 3),
    ((1, 0, 3), (0, 2, 3)): (1, 1),
    ((1, 0, 3), (3, 0, 1)): (1, 3),
    ((2, 1, 0), (0, 2, 3)): (1, 2),
    ((2, 1, 0), (3, 0, 1)): (2, 3),
    ((3, 2, 1), (0, 2, 3)): (1, 3),
    ((3, 2, 1), (3, 0, 1)): (2, 2),
    ((1, 0, 0), (0, 2, 0)): (1, 1),
    ((0, 2, 3), (0, 2, 0)): (3, 3),
    ((0, 2, 3), (0, 3, 2)): (2, 3),
    ((3, 0, 1), (0, 3, 2)): (1, 2),
    ((0, 2, 0), (0, 0, 3)): (2, 2),
    ((0, 3, 2), (0, 0, 3)): (2, 3),
    ((0, 0, 3), (0, 0, 0)): (3, 3),
}

# the eight intervals of P_4 with no weakly increasing maximal chain
P4_EL_VIOLATIONS = [
    ((1, 2, 3, 0), (4, 0, 0, 1)),
    ((1, 2, 3, 0), (4, 0, 3, 1)),
    ((1, 3, 2, 0), (4, 0, 0, 1)),
    ((1, 3, 2, 0), (4, 0, 3, 1)),
    ((2, 1, 3, 0), (4, 0, 0, 1)),
    ((2, 1, 3, 0), (4, 0, 3, 1)),
    ((3, 2, 1, 0), (4, 0, 0, 1)),
    ((3, 2, 1, 0), (4, 0, 3, 1)),
]
