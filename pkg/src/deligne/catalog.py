"""Small arrangements used in tests, demos and ``verify``."""

from __future__ import annotations

from .arrangement import Arrangement, parse_arrangement

# Reflection arrangements are written with normals = positive roots in
# simple-root coordinates (coordinates dual to the fundamental coweights).
ROWS = {
    "EX8": (2, [[1, 0], [0, 1], [1, 1], [1, 2]]),
    "A1": (1, [[1]]),
    "A2": (2, [[1, 0], [0, 1], [1, 1]]),
    "B2": (2, [[1, 0], [0, 1], [1, 1], [1, -1]]),
    "G2": (2, [[1, 0], [0, 1], [1, 1], [2, 1], [3, 1], [3, 2]]),
    "A3": (3, [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 0], [0, 1, 1], [1, 1, 1]]),
    "BOOLEAN3+": (3, [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1]]),
}


def get(name: str) -> Arrangement:
    dim, rows = ROWS[name]
    return parse_arrangement(dim, rows)
