"""Pure-Python census kernel: classify the unit ball of every center.

Works on values listed in canonical (length, lex) order, where tree structure
is pure index arithmetic: the root's children are 1..4 and vertex i >= 1 owns
the three children 5+3(i-1) .. 7+3(i-1).  The compiled kernel in
_censuscore.pyx implements the same contract.
"""

from __future__ import annotations

from typing import Sequence

# class index by (center matches, equal leaf pairs); 0 marks infeasible pairs
CLASS_TABLE = [[0] * 7 for _ in range(5)]
for _cls, (_nc, _np) in {
    1: (4, 6), 2: (3, 3), 3: (2, 2), 4: (1, 3), 5: (0, 6), 6: (1, 0),
    7: (0, 3), 8: (0, 1), 9: (2, 1), 10: (1, 1), 11: (0, 2), 12: (0, 0),
}.items():
    CLASS_TABLE[_nc][_np] = _cls


def classify_ball(center, leaves) -> int:
    nc = 0
    np_ = 0
    for i in range(4):
        if leaves[i] == center:
            nc += 1
        for k in range(i + 1, 4):
            if leaves[i] == leaves[k]:
                np_ += 1
    return CLASS_TABLE[nc][np_]


def census_classes(values: Sequence[int], n_centers: int,
                   start: int = 0, stop: int | None = None) -> list:
    """Class index of the ball at each center index in [start, stop)."""
    if stop is None:
        stop = n_centers
    out = []
    for c in range(start, stop):
        if c == 0:
            leaves = (values[1], values[2], values[3], values[4])
        else:
            base = 5 + 3 * (c - 1)
            parent = 0 if c <= 4 else (c - 5) // 3 + 1
            leaves = (values[parent], values[base], values[base + 1],
                      values[base + 2])
        out.append(classify_ball(values[c], leaves))
    return out
