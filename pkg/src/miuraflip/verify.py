"""The full claim suite behind ``miuraflip verify``."""

from __future__ import annotations

import random
from fractions import Fraction

from . import forest as fr
from .coloring import (
    coloring_to_mv,
    grid_cycles,
    height_profile,
    mv_to_coloring,
    path_weight,
    random_coloring,
)
from .flipgraph import (
    build_ofg,
    build_ofg_from_colorings,
    count_checks,
    degree_distribution,
    diameter_bfs,
    bfs_distances,
    is_connected,
)
from .heights import degree2_assignments, diameter_formula, diameter_value, ofg_distance
from .miura import MiuraSpec, flippable_faces
from .reference import DEGREE_TABLE, REVERSE_FIRST_DIFFS, REVERSE_TABLE
from .report import Check

CLAIMS = {
    "thm-vertex-count": "OFG(M_2,n) has 2*3^(n-1) vertices",
    "thm-edge-count": "OFG(M_2,n) has 8(n+1)3^(n-3) edges (n >= 2)",
    "handshake": "degree sum equals twice the edge count",
    "table1-degrees": "degree distribution equals the reference table, n = 2..9",
    "lem-min-degree": "minimum label 2 appears four times, all magenta (n >= 2)",
    "lem-max-degree": "maximum label 2n appears twice, all blue",
    "lem-no-2n-1": "no vertex has degree 2n-1",
    "thm-set": "the set of degrees is {2, ..., 2n-2} u {2n} (n >= 2)",
    "thm-child-deltas": "children add (2,0,0) after MVM/VMV endings, else (2,1,0)",
    "forest-blue-endings": "blue count b_n^d equals assignments ending MVM/VMV with degree d",
    "forest-vs-graph": "degree forest generation n equals the degree distribution of OFG(M_2,n)",
    "prop-recurrences": "b, w and v recurrences hold",
    "thm-poly-d": "v_n^d is a polynomial of degree d-2 in n",
    "thm-poly-2n-a": "v_n^(2n-a) is a polynomial of degree floor(a/2) in n",
    "poly-v3": "v_n^3 = 4(n-2)",
    "table2-rows": "reverse-degree sequences and their differences match the reference table",
    "bijection-roundtrip": "MV assignment -> coloring -> MV assignment is the identity",
    "ofg-coloring-isomorphic": "crease-built and coloring-built flip graphs coincide",
    "lem-cycle-weight": "every simple grid cycle has weight zero",
    "thm-opposite-deg2-distance": "opposite degree-2 assignments are ceil(n^2/2) flips apart",
    "cor-diameter": "diameter of OFG(M_2,n) is ceil(n^2/2)",
    "fig-distance-5": "the opposite degree-2 pair of M_2,3 is 5 flips apart",
    "formula-vs-bfs": "height-formula distance equals BFS distance",
    "lem-connected": "the flip graph is connected",
}


def _graph_claims(n_max: int, bfs_max: int, rng: random.Random) -> list[Check]:
    checks: list[Check] = []
    graphs = {}
    for n in range(1, n_max + 1):
        g = build_ofg(MiuraSpec(n))
        graphs[n] = g
        checks += count_checks(g)
        checks.append(Check("lem-connected", {"m": 2, "n": n}, True, is_connected(g)))
        if n in DEGREE_TABLE:
            checks.append(Check("table1-degrees", {"n": n}, DEGREE_TABLE[n], degree_distribution(g)))
    for m in (3,):
        for n in range(1, min(n_max, 4) + 1):
            g = build_ofg(MiuraSpec(n, m))
            checks.append(Check("lem-connected", {"m": m, "n": n}, True, is_connected(g)))
    for n in range(1, min(n_max, 6) + 1):
        g = graphs[n]
        bad = [str(s) for s in g.states if coloring_to_mv(mv_to_coloring(s)) != s]
        checks.append(Check("bijection-roundtrip", {"n": n}, [], bad))
        gc = build_ofg_from_colorings(MiuraSpec(n))
        mapped = [mv_to_coloring(s) for s in g.states]
        same = mapped == list(gc.states) and g.adjacency == gc.adjacency
        if not same:
            pos = {c: i for i, c in enumerate(gc.states)}
            perm = [pos[c] for c in mapped]
            same = all(sorted(perm[j] for j in g.adjacency[i]) == list(gc.adjacency[perm[i]])
                       for i in range(g.vertex_count))
        checks.append(Check("ofg-coloring-isomorphic", {"n": n}, True, same))
    for n in range(2, bfs_max + 1):
        d, (i, j) = diameter_bfs(graphs[n])
        witness_ok = graphs[n].states[i] in set(degree2_assignments(n))
        checks.append(Check("cor-diameter", {"n": n, "method": "bfs"},
                            {"diameter": diameter_value(n), "deg2_witness": True},
                            {"diameter": d, "deg2_witness": witness_ok}))
    for n in range(2, min(n_max, 5) + 1):
        g = graphs[n]
        bad = 0
        for i in range(g.vertex_count):
            dist = bfs_distances(g, i)
            bad += sum(ofg_distance(g.states[i], g.states[j]) != dist[j] for j in range(i + 1, g.vertex_count))
        checks.append(Check("formula-vs-bfs", {"n": n, "pairs": "all"}, 0, bad))
    if 3 in graphs:
        g = graphs[3]
        a, b = degree2_assignments(3)[2:]
        idx = g.index()
        checks.append(Check("fig-distance-5", {"n": 3, "method": "bfs"}, 5, bfs_distances(g, idx[a])[idx[b]]))
        checks.append(Check("fig-distance-5", {"n": 3, "method": "formula"}, 5, ofg_distance(a, b)))
    return checks


def _forest_claims(n_max: int, generations: int) -> list[Check]:
    tables = fr.generate_chi_d(generations)
    checks = fr.structural_checks(tables) + fr.verify_recurrences(tables)
    checks += fr.polynomial_law_checks(tables, d_max=10, a_max=6)
    checks.append(Check("poly-v3", {}, [Fraction(-8), Fraction(4)], fr.fitted_polynomial(tables, 3)))
    for a, (seq, consts) in REVERSE_TABLE.items():
        start, got = fr.reverse_sequence(tables, a, 9)
        ok_consts = []
        for k, c in enumerate(consts, start=1):
            col = fr.finite_differences(got, k)
            ok_consts.append(c is None or set(col) == {c})
        first = REVERSE_FIRST_DIFFS.get(a)
        if first is not None:
            ok_consts.append(tuple(fr.finite_differences(got, 1)) == first)
        checks.append(Check("table2-rows", {"a": a}, {"sequence": list(seq), "differences": True},
                            {"sequence": got, "differences": all(ok_consts)}))
    # exhaustive MV-labeled forest for small n
    level = [mv for mv in build_ofg(MiuraSpec(1)).states]
    for n in range(1, min(n_max, 6)):
        bad = []
        blue_by_degree: dict[int, int] = {}
        for mv in level:
            f = len(flippable_faces(mv))
            kids = fr.extend_assignment(mv)
            deltas = tuple(sorted((len(flippable_faces(k)) - f for k in kids), reverse=True))
            want = (2, 0, 0) if fr.ends_in_blue(mv) else (2, 1, 0)
            if deltas != want:
                bad.append(str(mv))
            if n >= 2 and fr.ends_in_blue(mv):
                blue_by_degree[f] = blue_by_degree.get(f, 0) + 1
        checks.append(Check("thm-child-deltas", {"n": n}, [], bad))
        if n >= 2:
            t = tables[n - 1]
            expected = {d: t.b(d) for d in t.labels() if t.b(d)}
            checks.append(Check("forest-blue-endings", {"n": n}, expected, dict(sorted(blue_by_degree.items()))))
        level = [k for mv in level for k in fr.extend_assignment(mv)]
    graphs = [build_ofg(MiuraSpec(n)) for n in range(2, min(n_max, 7) + 1)]
    checks += fr.cross_validate(tables, graphs)
    return checks


def _distance_claims(formula_max: int, rng: random.Random) -> list[Check]:
    checks = []
    for n in range(2, formula_max + 1):
        try:
            value = diameter_formula(n)
            checks.append(Check("thm-opposite-deg2-distance", {"n": n}, diameter_value(n), value))
        except RuntimeError as exc:
            checks.append(Check("thm-opposite-deg2-distance", {"n": n}, diameter_value(n), str(exc)))
    for m, n in ((2, 5), (3, 4), (4, 4)):
        bad = 0
        for _ in range(100):
            gamma = random_coloring(m, n, rng)
            bad += sum(path_weight(gamma, cyc) != 0 for cyc in grid_cycles(m, n))
        checks.append(Check("lem-cycle-weight", {"m": m, "n": n, "samples": 100}, 0, bad))
    return checks


def run_verification(n_max: int = 7, bfs_max: int | None = None, seed: int = 0) -> list[Check]:
    """Run every claim up to size n_max (graph claims are capped at n = 9)."""
    rng = random.Random(seed)
    graph_max = min(n_max, 9)
    bfs_max = min(graph_max, 7) if bfs_max is None else bfs_max
    checks = _graph_claims(graph_max, bfs_max, rng)
    checks += _forest_claims(graph_max, max(n_max, 20))
    checks += _distance_claims(max(n_max, 12), rng)
    return checks
