"""Embedded reference threshold tables.

These are read-only reference values shipped with the package so the table
command never needs the network.  ``None`` marks a cell published with no
finite value.  Keys: (k, m) for the Laguerre/determinant tables, (row, k)
for the third-order-Turan / invariant table.
"""

from __future__ import annotations

__all__ = ["TABLES", "TABLE_NAMES", "TI_ROWS"]

_LP_ROWS = {
    1: [70, 301, 738, 1413, 2346, 3557, 5062, 6873, 9006, 11467, 14270],
    2: [138, 451, 986, 1767, 2816, 4151, 5786, 7733, 10006, 12613, 15566],
    3: [234, 637, 1272, 1767, 3334, 4795, 6562, 8649, 11064, 13819, 16922],
    4: [362, 859, 1602, 2609, 2346, 5491, 7394, 9619, 12180, 15083, 18340],
    5: [522, 1121, 1974, 3101, 4518, 6241, 8280, 10649, 13356, 16411, 19822],
}

_LPBAR_ROWS = {
    1: [7, 50, 142, 294, 509, 799, 1167, 1616, 2146, 2778, 3497],
    2: [21, 89, 208, 390, 641, 967, 1371, 1859, 2440, 3111, 3785],
    3: [45, 131, 277, 489, 773, 1126, 1575, 2105, 2722, 3435, 4241],
    4: [69, 179, 352, 588, 908, 1300, 1779, 2345, 3001, 3753, 4601],
    5: [98, 232, 429, 698, 1045, 1473, 1985, 2587, 3282, 4073, 4963],
}

_X = None

_DP_ROWS = {
    1: [1, 69, 345, 879, 1709, 2857, 4347, 6197, 8419, 11029, 14039],
    2: [7, 137, 503, 1145, 2091, 3369, 4995, 6987, 9359, 12123, 15293],
    3: [_X, 233, _X, 1451, _X, 3929, _X, 7831, _X, 13275, _X],
    4: [67, 361, 929, 1797, 2997, 4537, 6443, 8729, 11405, 14485, 17979],
    5: [_X, 521, _X, 2189, _X, 5197, _X, 9683, _X, 15755, _X],
}

_DPBAR_ROWS = {
    1: [1, 6, 62, 185, 389, 674, 1055, 1535, 2120, 2813, 3620],
    2: [1, 20, 104, 257, 494, 821, 1241, 1766, 2396, 3134, 3992],
    3: [_X, 44, _X, 335, _X, 965, _X, 1991, _X, 3449, _X],
    4: [10, 68, 200, 416, 716, 1115, 1613, 2216, 2930, 3758, 4706],
    5: [_X, 97, _X, 496, _X, 1264, _X, 2440, _X, 4066, _X],
}


def _grid(rows: dict) -> dict:
    return {
        (k, m): rows[k][m - 1]
        for k in rows
        for m in range(1, len(rows[k]) + 1)
    }


TI_ROWS = ("Tp", "Tpbar", "Ip", "Ipbar")

_TI = {
    ("Tp", 1): 174, ("Tp", 2): 284, ("Tp", 3): 424,
    ("Tp", 4): 600, ("Tp", 5): 810,
    ("Tpbar", 1): 33, ("Tpbar", 2): 57, ("Tpbar", 3): 87,
    ("Tpbar", 4): 118, ("Tpbar", 5): 173,
    ("Ip", 1): 329, ("Ip", 2): 483, ("Ip", 3): 675,
    ("Ip", 4): 903, ("Ip", 5): 1171,
    ("Ipbar", 1): 64, ("Ipbar", 2): 98, ("Ipbar", 3): 143,
    ("Ipbar", 4): 194, ("Ipbar", 5): 255,
}

TABLES = {
    "Lp": _grid(_LP_ROWS),
    "Lpbar": _grid(_LPBAR_ROWS),
    "Dp": _grid(_DP_ROWS),
    "Dpbar": _grid(_DPBAR_ROWS),
    "TI": _TI,
}

TABLE_NAMES = ("Lp", "Lpbar", "Dp", "Dpbar", "TI")
