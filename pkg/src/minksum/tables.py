"""Reference data for the master polytopes, ``P(3)`` in the ``paper3`` labeling.

Each block is a 7-row matrix of vertex columns followed by a row of vertex
degrees.
"""

from __future__ import annotations

_BLOCKS = (
    """
    3 1 1 0 0 1 0 0 0 0
    0 0 2 2 1 0 1 2 0 0
    0 2 0 1 2 0 0 0 2 1
    0 0 0 0 0 2 2 1 1 2
    0 0 0 0 0 0 0 0 0 0
    0 0 0 0 0 0 0 0 0 0
    0 0 0 0 0 0 0 0 0 0
    6 6 6 6 6 6 6 6 6 6
    """,
    """
    2 1 1 0 0 0 0 2 1 1 0 0 0 0 2 1 1 0 0 0 0
    0 0 1 1 1 0 0 0 0 1 1 1 0 0 0 0 0 1 1 0 2
    0 0 0 1 0 1 2 0 1 0 1 0 1 0 0 0 1 1 0 1 0
    0 1 0 0 1 1 0 0 0 0 0 1 1 2 0 1 0 0 1 1 0
    1 1 1 1 1 1 1 0 0 0 0 0 0 0 0 0 0 0 0 0 0
    0 0 0 0 0 0 0 1 1 1 1 1 1 1 0 0 0 0 0 0 0
    0 0 0 0 0 0 0 0 0 0 0 0 0 0 1 1 1 1 1 1 1
    6 6 6 6 8 6 8 6 6 6 8 6 6 8 6 6 6 6 6 8 8
    """,
    """
    1 0 0 1 0 0 1 0 0 0
    0 0 0 0 1 0 0 1 0 0
    0 1 0 0 0 0 0 0 1 0
    0 0 1 0 0 1 0 0 0 0
    1 1 1 0 0 0 1 1 1 1
    1 1 1 1 1 1 0 0 0 1
    0 0 0 1 1 1 1 1 1 1
    7 8 8 7 8 8 7 8 8 9
    """,
)


def _columns(block: str) -> list[tuple[tuple[int, ...], int]]:
    rows = [[int(x) for x in line.split()] for line in block.strip().splitlines()]
    return [(tuple(row[c] for row in rows[:7]), rows[7][c]) for c in range(len(rows[0]))]


P3_TABLE_BLOCKS: tuple[tuple[tuple[tuple[int, ...], int], ...], ...] = tuple(
    tuple(_columns(b)) for b in _BLOCKS
)

P3_VERTEX_DEGREES: dict[tuple[int, ...], int] = {v: d for block in P3_TABLE_BLOCKS for v, d in block}

P3_DEGREE_HISTOGRAM = {6: 25, 7: 3, 8: 12, 9: 1}

MASTER_VERTEX_COUNTS = {3: 41, 4: 1015, 5: 59072}

P4_DEGREE_SET = frozenset(range(14, 29)) - {16, 23, 26, 27}
