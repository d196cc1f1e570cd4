from hypothesis import given, settings, strategies as st

from miuraflip.coloring import GridColoring, coloring_to_mv, grid_cycles, height_profile, mv_to_coloring, path_weight
from miuraflip.heights import has_zero_median, minimize_bound, minimize_by_median, ofg_distance
from miuraflip.miura import M, V, Face, MVAssignment, flip_face, flippable_faces, is_locally_valid, opposite, _TRIPLES


@st.composite
def valid_assignments(draw, min_n=1, max_n=9):
    n = draw(st.integers(min_n, max_n))
    p = [draw(st.sampled_from((M, V)))]
    for _ in range(n - 1):
        left = p[-2] if len(p) > 1 else p[0]
        p.extend(draw(st.sampled_from(_TRIPLES[left])))
    return MVAssignment(tuple(p))


def _coloring(draw, m, n):
    rows = []
    for r in range(m):
        row = []
        for c in range(n):
            banned = set()
            if c:
                banned.add(row[-1])
            if r:
                banned.add(rows[-1][c])
            row.append(draw(st.sampled_from([x for x in (0, 1, 2) if x not in banned])))
        rows.append(tuple(row))
    return GridColoring(tuple(rows))


@st.composite
def proper_colorings(draw, max_side=5):
    return _coloring(draw, draw(st.integers(1, max_side)), draw(st.integers(1, max_side)))


@st.composite
def coloring_pairs(draw, max_side=5):
    m, n = draw(st.integers(1, max_side)), draw(st.integers(1, max_side))
    return _coloring(draw, m, n), _coloring(draw, m, n)


@st.composite
def assignment_pairs(draw, max_n=8):
    n = draw(st.integers(1, max_n))
    return draw(valid_assignments(n, n)), draw(valid_assignments(n, n))


@given(valid_assignments())
def test_generated_assignments_are_valid(mv):
    assert is_locally_valid(mv)


@given(valid_assignments(), st.data())
def test_flip_involution(mv, data):
    f = Face(data.draw(st.integers(1, 2)), data.draw(st.integers(1, mv.n)))
    assert flip_face(flip_face(mv, f), f) == mv


@given(valid_assignments())
def test_flippable_flips_stay_valid(mv):
    for f in flippable_faces(mv):
        assert is_locally_valid(flip_face(mv, f))


@given(valid_assignments())
def test_opposite_symmetry(mv):
    assert is_locally_valid(opposite(mv))
    assert flippable_faces(opposite(mv)) == flippable_faces(mv)


@given(valid_assignments())
def test_bijection_round_trip(mv):
    gamma = mv_to_coloring(mv)
    assert gamma.is_proper() and gamma.is_canonical()
    assert coloring_to_mv(gamma) == mv
    assert coloring_to_mv(gamma.rotate(1)) == mv


@given(proper_colorings(), st.integers(0, 2))
def test_cycle_weight_zero_and_rotation_invariance(gamma, k):
    for cyc in grid_cycles(gamma.rows, gamma.cols):
        assert path_weight(gamma, cyc) == 0
        assert path_weight(gamma.rotate(k), cyc) == path_weight(gamma, cyc)


@given(coloring_pairs())
def test_median_characterization(pair):
    p = height_profile(*pair)
    for x, y in zip(p.flat(), p.flat()[1:]):
        assert (x - y) % 2 == 0
    H, L = minimize_bound(p)
    assert has_zero_median(p, H) and minimize_by_median(p)[1] == L


@settings(max_examples=60)
@given(assignment_pairs())
def test_distance_is_a_metric(pair):
    a, b = pair
    assert ofg_distance(a, b) == ofg_distance(b, a)
    assert ofg_distance(a, a) == 0
    for f in flippable_faces(a):
        assert abs(ofg_distance(flip_face(a, f), b) - ofg_distance(a, b)) == 1
