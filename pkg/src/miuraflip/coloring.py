"""Proper 3-colorings of the m x n grid graph dual to the Miura-ori.

Grid cells are 0-based ``(r, c)`` pairs; cell ``(i-1, j-1)`` sits inside
face alpha_{i,j}.  Colors live in Z_3.  Two colorings that differ by adding
a constant mod 3 describe the same MV assignment; the canonical member has
color 0 in the top-left cell.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterable, Sequence

from .miura import MVAssignment, crease_slot, is_locally_valid

Cell = tuple[int, int]


@dataclass(frozen=True)
class GridColoring:
    colors: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if not self.colors or not self.colors[0]:
            raise ValueError("empty coloring")
        width = len(self.colors[0])
        for row in self.colors:
            if len(row) != width:
                raise ValueError("ragged coloring rows")
            if any(c not in (0, 1, 2) for c in row):
                raise ValueError("colors must be in {0, 1, 2}")

    @property
    def rows(self) -> int:
        return len(self.colors)

    @property
    def cols(self) -> int:
        return len(self.colors[0])

    def __getitem__(self, cell: Cell) -> int:
        return self.colors[cell[0]][cell[1]]

    def is_proper(self) -> bool:
        g = self.colors
        for r in range(self.rows):
            for c in range(self.cols):
                if c + 1 < self.cols and g[r][c] == g[r][c + 1]:
                    return False
                if r + 1 < self.rows and g[r][c] == g[r + 1][c]:
                    return False
        return True

    def rotate(self, k: int) -> "GridColoring":
        return GridColoring(tuple(tuple((x + k) % 3 for x in row) for row in self.colors))

    def canonical(self) -> "GridColoring":
        return self.rotate(-self.colors[0][0])

    def is_canonical(self) -> bool:
        return self.colors[0][0] == 0

    def recolor(self, cell: Cell, color: int) -> "GridColoring":
        rows = [list(row) for row in self.colors]
        rows[cell[0]][cell[1]] = color
        return GridColoring(tuple(tuple(row) for row in rows))

    def __str__(self):
        return "\n".join("".join(str(x) for x in row) for row in self.colors)


def canonicalize(gamma: GridColoring) -> GridColoring:
    return gamma.canonical()


def parse_coloring(text: str, canonicalize: bool = False) -> GridColoring:
    """Read m lines of n digits ('/' also separates rows)."""
    lines = [ln.strip() for ln in text.replace("/", "\n").splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty coloring text")
    for ln in lines:
        if set(ln) - set("012"):
            raise ValueError(f"coloring rows may only contain digits 0-2, got {ln!r}")
    gamma = GridColoring(tuple(tuple(int(ch) for ch in ln) for ln in lines))
    if not gamma.is_proper():
        raise ValueError("coloring is not proper")
    if not gamma.is_canonical():
        if not canonicalize:
            raise ValueError("coloring is not canonical (top-left color must be 0)")
        gamma = gamma.canonical()
    return gamma


def grid_neighbors(m: int, n: int, cell: Cell) -> list[Cell]:
    r, c = cell
    out = []
    for dr, dc in ((-1, 0), (0, -1), (0, 1), (1, 0)):
        rr, cc = r + dr, c + dc
        if 0 <= rr < m and 0 <= cc < n:
            out.append((rr, cc))
    return out


def recolor_options(gamma: GridColoring, cell: Cell) -> list[int]:
    """Colors the cell may switch to while the coloring stays proper."""
    used = {gamma[nb] for nb in grid_neighbors(gamma.rows, gamma.cols, cell)}
    used.add(gamma[cell])
    return [x for x in (0, 1, 2) if x not in used]


def boustrophedon_path(m: int, n: int) -> list[Cell]:
    path = []
    for r in range(m):
        cols = range(n) if r % 2 == 0 else range(n - 1, -1, -1)
        path.extend((r, c) for c in cols)
    return path


def mv_to_coloring(mv: MVAssignment) -> GridColoring:
    """Canonical 2 x n coloring of a valid assignment, built along the snake path."""
    if not is_locally_valid(mv):
        raise ValueError(f"assignment {mv} is not locally valid")
    n = mv.n
    top = [0] * n
    bottom = [0] * n
    for j in range(1, n):
        top[j] = (top[j - 1] + mv.crease(3 * j - 1)) % 3
    bottom[n - 1] = (top[n - 1] + mv.crease(3 * n - 3)) % 3
    for j in range(n, 1, -1):
        bottom[j - 2] = (bottom[j - 1] + mv.crease(3 * j - 2)) % 3
    return GridColoring((tuple(top), tuple(bottom)))


def coloring_to_mv(gamma: GridColoring) -> MVAssignment:
    """Read each crease parity off the grid edge that crosses it."""
    if gamma.rows != 2:
        raise ValueError("coloring_to_mv needs a 2-row coloring")
    if not gamma.is_proper():
        raise ValueError("coloring is not proper")
    n = gamma.cols
    p = [0] * (3 * n - 2)
    p[0] = edge_weight(gamma, (0, 0), (1, 0))
    for j in range(1, n):
        # creases around x_j: top e_{3j-1}, right e_{3j}, bottom e_{3j+1}
        p[crease_slot(3 * j - 1, n)] = edge_weight(gamma, (0, j - 1), (0, j))
        p[crease_slot(3 * j, n)] = edge_weight(gamma, (0, j), (1, j))
        p[crease_slot(3 * j + 1, n)] = edge_weight(gamma, (1, j), (1, j - 1))
    return MVAssignment(tuple(p))


@lru_cache(maxsize=None)
def _column_states(m: int) -> tuple[tuple[int, ...], ...]:
    return tuple(
        s for s in product(range(3), repeat=m) if all(s[i] != s[i + 1] for i in range(m - 1))
    )


@lru_cache(maxsize=None)
def _column_moves(m: int) -> tuple[tuple[int, ...], ...]:
    states = _column_states(m)
    return tuple(
        tuple(k for k, t in enumerate(states) if all(a != b for a, b in zip(s, t)))
        for s in states
    )


def _completions(m: int, n: int) -> list[list[int]]:
    """ways[j][s]: proper fillings of columns j..n-1 with column j in state s."""
    states = _column_states(m)
    moves = _column_moves(m)
    ways = [[0] * len(states) for _ in range(n)]
    ways[n - 1] = [1] * len(states)
    for j in range(n - 2, -1, -1):
        nxt = ways[j + 1]
        ways[j] = [sum(nxt[k] for k in moves[s]) for s in range(len(states))]
    return ways


def count_colorings(m: int, n: int, fix_first: bool = True) -> int:
    """Number of proper 3-colorings of the m x n grid, by column transfer matrix."""
    ways = _completions(m, n)
    total = sum(ways[0])
    return total // 3 if fix_first else total


def random_coloring(m: int, n: int, rng: random.Random) -> GridColoring:
    """Uniformly random proper 3-coloring (any top-left color)."""
    states = _column_states(m)
    moves = _column_moves(m)
    ways = _completions(m, n)
    cols = []
    s = rng.choices(range(len(states)), weights=ways[0])[0]
    cols.append(states[s])
    for j in range(1, n):
        options = moves[s]
        s = rng.choices(options, weights=[ways[j][k] for k in options])[0]
        cols.append(states[s])
    return GridColoring(tuple(tuple(col[r] for col in cols) for r in range(m)))


def enumerate_colorings(m: int, n: int) -> list[GridColoring]:
    """All proper colorings with color 0 at the top-left, row-major lexicographic."""
    if m < 1 or n < 1:
        raise ValueError("grid dimensions must be positive")
    grid = [[0] * n for _ in range(m)]
    out: list[GridColoring] = []
    cells = [(r, c) for r in range(m) for c in range(n)]

    def fill(k: int) -> None:
        if k == len(cells):
            out.append(GridColoring(tuple(tuple(row) for row in grid)))
            return
        r, c = cells[k]
        for x in ((0,) if k == 0 else (0, 1, 2)):
            if c > 0 and grid[r][c - 1] == x:
                continue
            if r > 0 and grid[r - 1][c] == x:
                continue
            grid[r][c] = x
            fill(k + 1)

    fill(0)
    return out


def edge_weight(gamma: GridColoring, u: Cell, v: Cell) -> int:
    """+1 or -1, congruent to gamma(v) - gamma(u) mod 3."""
    if abs(u[0] - v[0]) + abs(u[1] - v[1]) != 1:
        raise ValueError(f"cells {u} and {v} are not adjacent")
    d = (gamma[v] - gamma[u]) % 3
    if d == 0:
        raise ValueError(f"cells {u} and {v} share a color")
    return 1 if d == 1 else -1


def path_weight(gamma: GridColoring, path: Sequence[Cell]) -> int:
    return sum(edge_weight(gamma, a, b) for a, b in zip(path, path[1:]))


@dataclass(frozen=True)
class HeightProfile:
    """Relative heights h(v) of one coloring against another, based at (0, 0)."""

    values: tuple[tuple[int, ...], ...]

    @property
    def rows(self) -> int:
        return len(self.values)

    @property
    def cols(self) -> int:
        return len(self.values[0])

    def __getitem__(self, cell: Cell) -> int:
        return self.values[cell[0]][cell[1]]

    def flat(self) -> list[int]:
        return [x for row in self.values for x in row]


def height_profile(gamma: GridColoring, beta: GridColoring) -> HeightProfile:
    if (gamma.rows, gamma.cols) != (beta.rows, beta.cols):
        raise ValueError("colorings have different dimensions")
    m, n = gamma.rows, gamma.cols
    h = [[0] * n for _ in range(m)]
    path = boustrophedon_path(m, n)
    acc = 0
    for a, b in zip(path, path[1:]):
        acc += edge_weight(beta, a, b) - edge_weight(gamma, a, b)
        h[b[0]][b[1]] = acc
    return HeightProfile(tuple(tuple(row) for row in h))


def grid_cycles(m: int, n: int) -> Iterable[list[Cell]]:
    """Every unit 4-cycle plus the outer boundary cycle, each closed."""
    for r in range(m - 1):
        for c in range(n - 1):
            yield [(r, c), (r, c + 1), (r + 1, c + 1), (r + 1, c), (r, c)]
    if m >= 2 and n >= 2:
        ring = [(0, c) for c in range(n)]
        ring += [(r, n - 1) for r in range(1, m)]
        ring += [(m - 1, c) for c in range(n - 2, -1, -1)]
        ring += [(r, 0) for r in range(m - 2, -1, -1)]
        yield ring
