import pytest

from miuraflip.coloring import mv_to_coloring
from miuraflip.flipgraph import (
    StateCapExceeded,
    all_pairs_distances,
    bfs_distances,
    bfs_path,
    build_ofg,
    build_ofg_from_colorings,
    build_recoloring_graph,
    count_checks,
    degree2_vertices,
    degree_distribution,
    diameter_bfs,
    edge_count_formula,
    export,
    is_connected,
    max_distance_pairs,
    parse_json,
)
from miuraflip.miura import MiuraSpec, MVAssignment, flip_face, flippable_faces, opposite
from miuraflip.reference import DEGREE_TABLE


@pytest.fixture(scope="module")
def graphs():
    return {n: build_ofg(MiuraSpec(n)) for n in range(1, 8)}


@pytest.mark.parametrize("n,vertices,edges", [(2, 6, 8), (3, 18, 32), (5, 162, 432), (7, 1458, 5184)])
def test_counts(graphs, n, vertices, edges):
    g = graphs[n]
    assert (g.vertex_count, g.edge_count) == (vertices, edges)
    assert all(c.passed for c in count_checks(g))


def test_n1_is_a_single_edge(graphs):
    g = graphs[1]
    assert g.vertex_count == 2 and g.edge_count == 1
    assert degree_distribution(g) == {1: 2}


def test_edge_formula_needs_n2():
    with pytest.raises(ValueError):
        edge_count_formula(1)


@pytest.mark.parametrize("n", [2, 4, 7])
def test_degree_distribution_matches_reference(graphs, n):
    assert degree_distribution(graphs[n]) == DEGREE_TABLE[n]


def test_degree_equals_flippable_face_count(graphs):
    g = graphs[4]
    for s, nb in zip(g.states, g.adjacency):
        assert len(nb) == len(flippable_faces(s))


def test_neighbors_are_single_flips(graphs):
    g = graphs[3]
    idx = g.index()
    for i, s in enumerate(g.states):
        assert set(g.adjacency[i]) == {idx[flip_face(s, f)] for f in flippable_faces(s)}


def test_threads_give_identical_graph():
    assert build_ofg(MiuraSpec(5), workers=4) == build_ofg(MiuraSpec(5))


def test_state_cap():
    with pytest.raises(StateCapExceeded):
        build_ofg(MiuraSpec(6), cap=100)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_coloring_graph_matches_crease_graph(graphs, n):
    g = graphs[n]
    gc = build_ofg_from_colorings(MiuraSpec(n))
    pos = gc.index()
    perm = [pos[mv_to_coloring(s)] for s in g.states]
    for i, nb in enumerate(g.adjacency):
        assert sorted(perm[j] for j in nb) == list(gc.adjacency[perm[i]])


def test_three_row_graph_is_connected():
    for n in (2, 3, 4):
        assert is_connected(build_ofg(MiuraSpec(n, 3)))


def test_recoloring_graph_has_all_rotations():
    r = build_recoloring_graph(2, 2)
    assert r.vertex_count == 18
    assert is_connected(r)


def test_bfs_basics(graphs):
    g = graphs[3]
    d = bfs_distances(g, 0)
    assert d[0] == 0 and min(d) == 0 and -1 not in d
    path = bfs_path(g, 0, 5)
    assert len(path) - 1 == d[5]
    for a, b in zip(path, path[1:]):
        assert b in g.adjacency[a]


def test_all_pairs_agrees_with_single_source(graphs):
    g = graphs[4]
    full = all_pairs_distances(g)
    for i in (0, 7, 53):
        assert list(full[i]) == bfs_distances(g, i)


def test_fig_pair_distance_five(graphs):
    g = graphs[3]
    idx = g.index()
    a = MVAssignment.from_string("VMVVMVV")
    assert bfs_distances(g, idx[a])[idx[opposite(a)]] == 5


@pytest.mark.parametrize("n,diam", [(2, 2), (3, 5), (4, 8), (5, 13), (6, 18)])
def test_diameter_bfs(graphs, n, diam):
    g = graphs[n]
    d, (i, j) = diameter_bfs(g, workers=2)
    assert d == diam
    assert opposite(g.states[i]) == g.states[j]
    assert len(g.adjacency[i]) == 2


def test_max_distance_pairs_is_block_independent(graphs):
    g = graphs[4]
    assert max_distance_pairs(g, block_size=7) == max_distance_pairs(g, block_size=512)


def test_degree2_vertices(graphs):
    found = degree2_vertices(graphs[2])
    assert len(found) == 4
    assert MVAssignment.from_string("VMVV") in found
    assert {opposite(s) for s in found} == set(found)


def test_exports(graphs):
    g1 = graphs[1]
    dot = export(g1, "dot")
    assert dot.count("label=") == 2 and dot.count("--") == 1
    g2 = graphs[2]
    assert parse_json(export(g2, "json")) == g2
    assert len(export(graphs[4], "edges").splitlines()) == graphs[4].edge_count
    with pytest.raises(ValueError):
        export(g2, "png")


def test_json_round_trip_for_colorings():
    g = build_ofg(MiuraSpec(3, 3))
    assert parse_json(export(g, "json")) == g
