"""Relative winding of the intersection loops in a k-point grid model.

One part of size k is modelled by k horizontal arcs y = i (the multifork
tines) and k vertical segments x = j (the barcode lines), i, j = 1..k.  An
intersection point of the symmetric products is a bijection sigma: arc i
meets barcode sigma(i) at (sigma(i), i).  The base configuration sits on the
diagonal below the grid with tethers running straight to the left ends of
the arcs and to the lower ends of the barcode lines.

The loop goes out along the barcode tethers, up the barcode lines to the
intersection point, back along the arcs and home along the multifork
tethers.  Every phase moves all points linearly, so each pairwise
difference vector turns by less than pi in a phase and the total turn is
an exact multiple of pi: the number of half twists.
"""

from __future__ import annotations

import math
from itertools import combinations, permutations

EPS = 0.125


def _base(i: int) -> tuple[float, float]:
    return (-1.0 + EPS * i, -1.0 + EPS * i)


def loop_phases(sigma: tuple[int, ...]) -> list[list[tuple[float, float]]]:
    """Positions at the phase boundaries, labelled by barcode line (1-based)."""
    k = len(sigma)
    inv = {sigma[i] - 1: i for i in range(k)}  # barcode j lies on arc inv[j] at the meeting point
    start = [_base(j + 1) for j in range(k)]
    bottom = [(float(j + 1), 0.0) for j in range(k)]
    meet = [(float(j + 1), float(inv[j] + 1)) for j in range(k)]
    left = [(0.0, float(inv[j] + 1)) for j in range(k)]
    home = [_base(inv[j] + 1) for j in range(k)]
    return [start, bottom, meet, left, home]


def _turn(u: tuple[float, float], v: tuple[float, float]) -> float:
    cross = u[0] * v[1] - u[1] * v[0]
    dot = u[0] * v[0] + u[1] * v[1]
    if cross == 0 and dot < 0:
        raise ValueError("difference vector reversed inside one phase")
    return math.atan2(cross, dot)


def half_twists(sigma: tuple[int, ...]) -> int:
    """Counterclockwise half twists of the loop for the bijection ``sigma`` (1-based)."""
    phases = loop_phases(sigma)
    total = 0.0
    for a, b in combinations(range(len(sigma)), 2):
        diffs = [(P[b][0] - P[a][0], P[b][1] - P[a][1]) for P in phases]
        for u, v in zip(diffs, diffs[1:]):
            if u == (0.0, 0.0) or v == (0.0, 0.0):
                raise ValueError("points collide")
            total += _turn(u, v)
    n = total / math.pi
    r = round(n)
    assert abs(n - r) < 1e-9, n
    return r


def winding_polynomial(k: int, clockwise: bool = True) -> dict[int, int]:
    """sum over S_k of d^(half twists), as {exponent: coefficient}.

    ``clockwise`` counts clockwise half twists as positive powers of d.
    """
    out: dict[int, int] = {}
    sign = -1 if clockwise else 1
    for p in permutations(range(1, k + 1)):
        e = sign * half_twists(p)
        out[e] = out.get(e, 0) + 1
    return out
