"""Origami flip graphs OFG(M_{m,n}).

For m = 2 the vertices are valid MV assignments and edges are single face
flips.  For any m the graph can also be built in coloring space: vertices are
canonical 3-colorings and edges are single-cell recolorings, re-canonicalized
so that a rotation class is one vertex.
"""

from __future__ import annotations

import json
from collections import Counter, deque
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Sequence, Union

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import shortest_path

from .coloring import GridColoring, enumerate_colorings, parse_coloring, recolor_options
from .miura import (
    MiuraSpec,
    MVAssignment,
    enumerate_valid,
    faces,
    flip_face,
    is_flippable,
    opposite,
)
from .report import Check

DEFAULT_STATE_CAP = 2_000_000
UNREACHABLE = -1

State = Union[MVAssignment, GridColoring]


class StateCapExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class FlipGraph:
    spec: MiuraSpec
    states: tuple
    adjacency: tuple[tuple[int, ...], ...]

    @property
    def vertex_count(self) -> int:
        return len(self.states)

    @property
    def edge_count(self) -> int:
        return sum(len(nbrs) for nbrs in self.adjacency) // 2

    def degree(self, i: int) -> int:
        return len(self.adjacency[i])

    def index(self) -> dict:
        return {s: i for i, s in enumerate(self.states)}


def _check_cap(count: int, cap: int) -> None:
    if count > cap:
        raise StateCapExceeded(f"{count} states exceed the cap of {cap}")


def _expected_states(spec: MiuraSpec) -> int:
    if spec.rows == 2:
        return 2 * 3 ** (spec.cols - 1)
    from .coloring import count_colorings

    return count_colorings(spec.rows, spec.cols)


def _assemble(spec, states, neighbor_sets) -> FlipGraph:
    adjacency = tuple(tuple(sorted(nb)) for nb in neighbor_sets)
    return FlipGraph(spec, tuple(states), adjacency)


def _map(fn, items, workers: int):
    if workers and workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(fn, items))
    return [fn(x) for x in items]


def build_ofg(spec: MiuraSpec, cap: int = DEFAULT_STATE_CAP, workers: int = 1) -> FlipGraph:
    """Build the flip graph; crease-level for 2 rows, coloring-level otherwise."""
    if spec.rows != 2:
        return build_ofg_from_colorings(spec, cap, workers)
    _check_cap(_expected_states(spec), cap)
    states = enumerate_valid(spec)
    index = {s: i for i, s in enumerate(states)}
    face_list = faces(spec)

    def neighbors(i: int) -> set[int]:
        mv = states[i]
        out = set()
        for f in face_list:
            if is_flippable(mv, f):
                out.add(index[flip_face(mv, f)])
        out.discard(i)
        return out

    return _assemble(spec, states, _map(neighbors, range(len(states)), workers))


def build_ofg_from_colorings(spec: MiuraSpec, cap: int = DEFAULT_STATE_CAP, workers: int = 1) -> FlipGraph:
    m, n = spec.rows, spec.cols
    _check_cap(_expected_states(spec), cap)
    states = enumerate_colorings(m, n)
    index = {s: i for i, s in enumerate(states)}
    cells = [(r, c) for r in range(m) for c in range(n)]

    def neighbors(i: int) -> set[int]:
        gamma = states[i]
        out = set()
        for cell in cells:
            for color in recolor_options(gamma, cell):
                out.add(index[gamma.recolor(cell, color).canonical()])
        out.discard(i)
        return out

    return _assemble(spec, states, _map(neighbors, range(len(states)), workers))


def build_recoloring_graph(m: int, n: int, cap: int = DEFAULT_STATE_CAP) -> FlipGraph:
    """R_3 of the m x n grid over raw (not canonicalized) colorings."""
    spec = MiuraSpec(n, m)
    _check_cap(3 * _expected_states(spec) if m != 2 else 3 * 2 * 3 ** (n - 1), cap)
    base = enumerate_colorings(m, n)
    states = [gamma.rotate(k) for k in range(3) for gamma in base]
    index = {s: i for i, s in enumerate(states)}
    cells = [(r, c) for r in range(m) for c in range(n)]
    adjacency = []
    for gamma in states:
        nb = {index[gamma.recolor(cell, x)] for cell in cells for x in recolor_options(gamma, cell)}
        adjacency.append(nb)
    return _assemble(spec, states, adjacency)


def degree_distribution(g: FlipGraph) -> dict[int, int]:
    counts = Counter(len(nb) for nb in g.adjacency)
    return dict(sorted(counts.items()))


def vertex_count_formula(n: int) -> int:
    return 2 * 3 ** (n - 1)


def edge_count_formula(n: int) -> int:
    """8(n+1)3^(n-3), exact for n >= 2."""
    if n < 2:
        raise ValueError("edge formula holds for n >= 2")
    return 8 * (n + 1) * 3 ** (n - 1) // 9


def count_checks(g: FlipGraph) -> list[Check]:
    n = g.spec.cols
    params = {"n": n}
    degree_sum = sum(len(nb) for nb in g.adjacency)
    checks = [
        Check("thm-vertex-count", params, vertex_count_formula(n), g.vertex_count),
        Check("handshake", params, 2 * g.edge_count, degree_sum),
    ]
    if n >= 2:
        checks.append(Check("thm-edge-count", params, edge_count_formula(n), g.edge_count))
    return checks


def bfs_distances(g: FlipGraph, source: int) -> list[int]:
    if not 0 <= source < g.vertex_count:
        raise IndexError(f"source {source} out of range")
    dist = [UNREACHABLE] * g.vertex_count
    dist[source] = 0
    queue = deque([source])
    adj = g.adjacency
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for v in adj[u]:
            if dist[v] == UNREACHABLE:
                dist[v] = du
                queue.append(v)
    return dist


def bfs_path(g: FlipGraph, source: int, target: int) -> list[int]:
    """One shortest path, recovered from BFS parent pointers."""
    parent = {source: None}
    queue = deque([source])
    while queue and target not in parent:
        u = queue.popleft()
        for v in g.adjacency[u]:
            if v not in parent:
                parent[v] = u
                queue.append(v)
    if target not in parent:
        raise ValueError(f"{target} is unreachable from {source}")
    path = [target]
    while parent[path[-1]] is not None:
        path.append(parent[path[-1]])
    return path[::-1]


def is_connected(g: FlipGraph) -> bool:
    return g.vertex_count == 0 or UNREACHABLE not in bfs_distances(g, 0)


def _csr(g: FlipGraph) -> csr_matrix:
    indptr = np.zeros(g.vertex_count + 1, dtype=np.int64)
    indptr[1:] = np.cumsum([len(nb) for nb in g.adjacency])
    indices = np.fromiter((v for nb in g.adjacency for v in nb), dtype=np.int32, count=int(indptr[-1]))
    data = np.ones(len(indices), dtype=np.int8)
    return csr_matrix((data, indices, indptr), shape=(g.vertex_count, g.vertex_count))


def distance_rows(g: FlipGraph, sources: Sequence[int]) -> np.ndarray:
    """Hop distances from each source to every state (int32, -1 if unreachable)."""
    d = shortest_path(_csr(g), method="D", directed=False, unweighted=True, indices=list(sources))
    d = np.atleast_2d(d)
    out = np.where(np.isinf(d), UNREACHABLE, d).astype(np.int32)
    return out


def all_pairs_distances(g: FlipGraph) -> np.ndarray:
    return distance_rows(g, range(g.vertex_count))


def _scan_block(g: FlipGraph, block: range) -> tuple[int, list[tuple[int, int]]]:
    rows = distance_rows(g, block)
    if (rows == UNREACHABLE).any():
        raise ValueError("flip graph is disconnected")
    best = int(rows.max())
    pairs = []
    for r, i in enumerate(block):
        for j in np.flatnonzero(rows[r] == best):
            if i < j:
                pairs.append((i, int(j)))
    return best, pairs


def max_distance_pairs(g: FlipGraph, workers: int = 1, block_size: int = 512) -> tuple[int, list[tuple[int, int]]]:
    """Diameter and every pair (i < j) attaining it, by all-pairs BFS."""
    blocks = [range(s, min(s + block_size, g.vertex_count)) for s in range(0, g.vertex_count, block_size)]
    results = _map(lambda b: _scan_block(g, b), blocks, workers)
    best = max(r[0] for r in results)
    pairs = sorted(p for r in results if r[0] == best for p in r[1])
    return best, pairs


def diameter_bfs(g: FlipGraph, workers: int = 1) -> tuple[int, tuple[int, int]]:
    """Exact diameter and a witness pair.

    The witness is the first attaining pair whose states are mutually
    opposite if there is one, otherwise the first attaining pair.
    """
    best, pairs = max_distance_pairs(g, workers)
    if g.spec.rows == 2:
        for i, j in pairs:
            if opposite(g.states[i]) == g.states[j]:
                return best, (i, j)
    return best, pairs[0] if pairs else (0, 0)


def degree2_vertices(g: FlipGraph) -> list:
    return [s for s, nb in zip(g.states, g.adjacency) if len(nb) == 2]


def state_label(s: State) -> str:
    return str(s) if isinstance(s, MVAssignment) else "/".join(str(s).splitlines())


def export(g: FlipGraph, fmt: str) -> str:
    fmt = fmt.lower()
    if fmt == "dot":
        lines = ["graph OFG {"]
        lines += [f'  {i} [label="{state_label(s)}"];' for i, s in enumerate(g.states)]
        lines += [f"  {i} -- {j};" for i, nb in enumerate(g.adjacency) for j in nb if i < j]
        lines.append("}")
        return "\n".join(lines) + "\n"
    if fmt == "json":
        doc = {
            "spec": {"rows": g.spec.rows, "cols": g.spec.cols},
            "states": [state_label(s) for s in g.states],
            "adjacency": [list(nb) for nb in g.adjacency],
            "degrees": {str(d): c for d, c in degree_distribution(g).items()},
            "vertex_count": g.vertex_count,
            "edge_count": g.edge_count,
        }
        return json.dumps(doc, indent=1) + "\n"
    if fmt in ("edges", "edge-list", "edgelist"):
        return "".join(f"{i} {j}\n" for i, nb in enumerate(g.adjacency) for j in nb if i < j)
    raise ValueError(f"unknown export format {fmt!r}")


def parse_json(text: str) -> FlipGraph:
    doc = json.loads(text)
    spec = MiuraSpec(doc["spec"]["cols"], doc["spec"]["rows"])
    if spec.rows == 2:
        states = [MVAssignment.from_string(s) for s in doc["states"]]
    else:
        states = [parse_coloring(s) for s in doc["states"]]
    g = FlipGraph(spec, tuple(states), tuple(tuple(nb) for nb in doc["adjacency"]))
    if g.edge_count != doc["edge_count"] or g.vertex_count != doc["vertex_count"]:
        raise ValueError("graph JSON counts disagree with its adjacency")
    return g


def diameter_formula_value(n: int) -> int:
    return (n * n + 1) // 2
