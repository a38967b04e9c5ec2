"""Marching squares on a regular grid, with NaN cells skipped."""

from __future__ import annotations

import numpy as np

# For each 4-bit case, pairs of crossed cell edges.
# Corners: 0=(i,j) 1=(i,j+1) 2=(i+1,j+1) 3=(i+1,j); bit k set if corner k >= level.
# Edges: 0 bottom (0-1), 1 right (1-2), 2 top (3-2), 3 left (0-3).
_SEGMENTS = {
    0: (),
    1: ((3, 0),),
    2: ((0, 1),),
    3: ((3, 1),),
    4: ((1, 2),),
    6: ((0, 2),),
    7: ((3, 2),),
    8: ((2, 3),),
    9: ((2, 0),),
    11: ((2, 1),),
    12: ((1, 3),),
    13: ((1, 0),),
    14: ((0, 3),),
    15: (),
}


def _edge_key(i, j, edge):
    """Identify a cell edge by its two grid nodes so neighbours share keys."""
    if edge == 0:
        return ((i, j), (i, j + 1))
    if edge == 1:
        return ((i, j + 1), (i + 1, j + 1))
    if edge == 2:
        return ((i + 1, j), (i + 1, j + 1))
    return ((i, j), (i + 1, j))


def _crossing(key, values, xs, ys, level):
    (i0, j0), (i1, j1) = key
    a, b = values[i0, j0], values[i1, j1]
    t = 0.5 if a == b else (level - a) / (b - a)
    x = xs[j0] + t * (xs[j1] - xs[j0])
    y = ys[i0] + t * (ys[i1] - ys[i0])
    return (float(x), float(y))


def marching_squares(values, xs, ys, level) -> list[np.ndarray]:
    """Polylines where ``values`` (shape ``(len(ys), len(xs))``) crosses ``level``.

    Cells touching a NaN node produce nothing. Edge crossings are linearly
    interpolated; saddle cells are resolved by the mean of the four corners.
    Each polyline is an ``(n, 2)`` array of ``(x, y)`` points; closed loops
    repeat their first point at the end.
    """
    values = np.asarray(values, dtype=float)
    ny, nx = values.shape
    above = values >= level
    segments = []
    for i in range(ny - 1):
        for j in range(nx - 1):
            corners = (values[i, j], values[i, j + 1], values[i + 1, j + 1], values[i + 1, j])
            if not all(np.isfinite(c) for c in corners):
                continue
            case = (
                int(above[i, j])
                | int(above[i, j + 1]) << 1
                | int(above[i + 1, j + 1]) << 2
                | int(above[i + 1, j]) << 3
            )
            if case in (5, 10):
                centre_above = sum(corners) / 4.0 >= level
                if case == 5:
                    pairs = ((3, 2), (1, 0)) if centre_above else ((3, 0), (1, 2))
                else:
                    pairs = ((0, 3), (2, 1)) if centre_above else ((0, 1), (2, 3))
            else:
                pairs = _SEGMENTS[case]
            for e0, e1 in pairs:
                segments.append((_edge_key(i, j, e0), _edge_key(i, j, e1)))
    return _chain(segments, values, xs, ys, level)


def _chain(segments, values, xs, ys, level):
    adjacency: dict = {}
    for idx, (a, b) in enumerate(segments):
        adjacency.setdefault(a, []).append(idx)
        adjacency.setdefault(b, []).append(idx)
    used = [False] * len(segments)

    def walk(start_key, seg_idx):
        keys = [start_key]
        key = start_key
        while seg_idx is not None:
            used[seg_idx] = True
            a, b = segments[seg_idx]
            key = b if a == key else a
            keys.append(key)
            seg_idx = next((s for s in adjacency[key] if not used[s]), None)
        return keys

    lines = []
    # open curves start at edges touched by a single segment
    for idx in range(len(segments)):
        if used[idx]:
            continue
        for end in segments[idx]:
            if len(adjacency[end]) == 1:
                lines.append(walk(end, idx))
                break
    for idx, (a, _) in enumerate(segments):
        if not used[idx]:
            lines.append(walk(a, idx))
    return [
        np.array([_crossing(k, values, xs, ys, level) for k in keys]) for keys in lines
    ]
