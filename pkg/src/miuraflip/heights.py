"""Flip distances from relative heights, without building the graph.

For colorings gamma, beta of the grid and a shift H (the net change of the
base cell's color, counted in steps of +-2), every recoloring from gamma to
beta has length at least half of sum_v |H + h(v)|, and the bound is tight
for the H the recoloring realizes.  Distances between MV assignments
minimize over every even H, since each assignment stands for all three
rotations of its coloring.
"""

from __future__ import annotations

from typing import Optional, Sequence

import numpy as np

from .coloring import (
    GridColoring,
    HeightProfile,
    boustrophedon_path,
    edge_weight,
    height_profile,
    mv_to_coloring,
)
from .miura import MVAssignment, diagonal_assignment, flippable_faces, opposite, Face


def path_length_bound(profile: HeightProfile, H: int) -> int:
    """Half of sum |H + h(v)|; H must be even."""
    if H % 2:
        raise ValueError(f"absolute height must be even, got {H}")
    total = sum(abs(H + x) for x in profile.flat())
    if total % 2:
        raise ArithmeticError(f"odd height sum {total}: profile is inconsistent")
    return total // 2


def _candidates(profile: HeightProfile, residue: Optional[int]) -> range:
    span = max(abs(x) for x in profile.flat()) + 6
    lo = -span - (span % 2)
    if residue is not None:
        if residue % 2:
            raise ValueError("residue class of H must be even mod 6")
        lo += (residue - lo) % 6
        return range(lo, span + 1, 6)
    return range(lo, span + 1, 2)


def minimize_bound(profile: HeightProfile, residue: Optional[int] = None) -> tuple[int, int]:
    """(H*, L*) minimizing the bound over even H, optionally with H = residue mod 6.

    Scans every candidate in the convex window; ties go to the smallest H.
    """
    best = None
    for H in _candidates(profile, residue):
        L = path_length_bound(profile, H)
        if best is None or L < best[1]:
            best = (H, L)
    return best


def median_height(profile: HeightProfile) -> int:
    """The H that puts a zero on the (lower) median of {H + h(v)}."""
    values = sorted(profile.flat())
    return -values[(len(values) - 1) // 2]


def has_zero_median(profile: HeightProfile, H: int) -> bool:
    y = sorted(H + x for x in profile.flat())
    k = len(y)
    if k % 2:
        return y[k // 2] == 0
    return 0 in (y[k // 2 - 1], y[k // 2])


def minimize_by_median(profile: HeightProfile) -> tuple[int, int]:
    H = median_height(profile)
    return H, path_length_bound(profile, H)


def ofg_distance(a: MVAssignment, b: MVAssignment) -> int:
    if a.n != b.n:
        raise ValueError(f"assignments belong to different patterns (n={a.n} vs n={b.n})")
    profile = height_profile(mv_to_coloring(a), mv_to_coloring(b))
    H, L = minimize_bound(profile)
    H_med, L_med = minimize_by_median(profile)
    if L_med != L:
        raise ArithmeticError(f"scan minimum {L} at H={H} disagrees with median minimum {L_med}")
    return L


def height_residue(gamma: GridColoring, beta: GridColoring) -> int:
    """H mod 6 forced by the base-cell colors: each color decrease adds 2."""
    return (2 * (gamma[0, 0] - beta[0, 0])) % 6


def r3_distance(gamma: GridColoring, beta: GridColoring) -> int:
    """Distance between raw colorings in the recoloring graph."""
    profile = height_profile(gamma, beta)
    return minimize_bound(profile, height_residue(gamma, beta))[1]


def degree2_assignments(n: int) -> list[MVAssignment]:
    """The four degree-2 assignments as two opposite pairs.

    The first pair flips only at a1,1 and a2,n; the second only at a2,1 and a1,n.
    """
    bottom = diagonal_assignment(n, 2)
    top = diagonal_assignment(n, 1)
    return [bottom, opposite(bottom), top, opposite(top)]


def opposite_degree2_heights(n: int) -> HeightProfile:
    """Closed form of h for the top-diagonal assignment against its opposite."""
    return HeightProfile((
        tuple(-2 * (j - 1) for j in range(1, n + 1)),
        tuple(-2 * (n - 1) + 2 * (n - (j - 1)) for j in range(1, n + 1)),
    ))


def diameter_value(n: int) -> int:
    return (n * n + 1) // 2


def diameter_formula(n: int) -> int:
    """ceil(n^2 / 2), confirmed on the constructed opposite degree-2 pairs."""
    if n < 2:
        raise ValueError("diameter formula needs n >= 2")
    value = diameter_value(n)
    nu1, nu2, nu3, nu4 = degree2_assignments(n)
    expected_faces = (
        [Face(1, 1), Face(2, n)],
        [Face(1, 1), Face(2, n)],
        [Face(1, n), Face(2, 1)],
        [Face(1, n), Face(2, 1)],
    )
    for mv, want in zip((nu1, nu2, nu3, nu4), expected_faces):
        got = sorted(flippable_faces(mv))
        if got != sorted(want):
            raise RuntimeError(f"{mv} flips at {got}, expected {sorted(want)}")
    for a, b in ((nu1, nu2), (nu3, nu4)):
        d = ofg_distance(a, b)
        if d != value:
            raise RuntimeError(f"distance {a} -> {b} is {d}, expected {value}")
    return value


def snake_prefix_weights(colorings: Sequence[GridColoring]) -> np.ndarray:
    """Row k: path weight from the base cell to every cell under coloring k (row-major)."""
    if not colorings:
        return np.zeros((0, 0), dtype=np.int64)
    m, n = colorings[0].rows, colorings[0].cols
    path = boustrophedon_path(m, n)
    flat = [r * n + c for r, c in path]
    out = np.zeros((len(colorings), m * n), dtype=np.int64)
    for k, gamma in enumerate(colorings):
        acc = 0
        for a, b, pos in zip(path, path[1:], flat[1:]):
            acc += edge_weight(gamma, a, b)
            out[k, pos] = acc
    return out


def distance_row(weights: np.ndarray, source: int) -> np.ndarray:
    """Class-to-class flip distances from one state to all, via median heights."""
    h = weights - weights[source]
    h.sort(axis=1)
    med = h[:, (h.shape[1] - 1) // 2][:, None]
    total = np.abs(h - med).sum(axis=1)
    if (total % 2).any():
        raise ArithmeticError("odd height sum encountered")
    return total // 2


def max_distance_scan(g, method: str = "formula") -> tuple[int, list[tuple[int, int]]]:
    """Largest pairwise distance in a 2-row flip graph and every pair attaining it.

    Raises if no attaining pair is an opposite degree-2 pair.
    """
    from .flipgraph import max_distance_pairs

    if g.spec.rows != 2:
        raise ValueError("distance scan is defined for 2-row patterns")
    if method == "bfs":
        best, pairs = max_distance_pairs(g)
    elif method == "formula":
        weights = snake_prefix_weights([mv_to_coloring(s) for s in g.states])
        best, pairs = 0, []
        for i in range(g.vertex_count):
            row = distance_row(weights, i)
            top = int(row.max())
            if top > best:
                best, pairs = top, []
            if top == best:
                pairs.extend((i, int(j)) for j in np.flatnonzero(row == best) if i < j)
    else:
        raise ValueError(f"unknown method {method!r}")
    deg2 = set(degree2_assignments(g.spec.cols))
    if not any(
        g.states[i] in deg2 and opposite(g.states[i]) == g.states[j] for i, j in pairs
    ):
        raise RuntimeError("maximum distance is not attained by an opposite degree-2 pair")
    return best, pairs
