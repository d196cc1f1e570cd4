from fractions import Fraction

import pytest

from miuraflip import forest as fr
from miuraflip.flipgraph import build_ofg
from miuraflip.miura import MiuraSpec, MVAssignment, enumerate_valid, flippable_faces
from miuraflip.reference import DEGREE_TABLE, REVERSE_TABLE


@pytest.fixture(scope="module")
def tables():
    return fr.generate_chi_d(30)


def strs(items):
    return [str(x) for x in items]


def test_extend_assignment_examples():
    assert sorted(strs(fr.extend_assignment(MVAssignment.from_string("M")))) == ["MMMV", "MMVM", "MVMM"]
    assert sorted(strs(fr.extend_assignment(MVAssignment.from_string("V")))) == ["VMVV", "VVMV", "VVVM"]


def test_extend_rejects_invalid():
    with pytest.raises(ValueError):
        fr.extend_assignment(MVAssignment.from_string("MVVV"))


@pytest.mark.parametrize("n", range(1, 6))
def test_extensions_partition_next_level(n):
    kids = [k for mv in enumerate_valid(MiuraSpec(n)) for k in fr.extend_assignment(mv)]
    assert sorted(kids, key=str) == enumerate_valid(MiuraSpec(n + 1))


@pytest.mark.parametrize("n", range(1, 6))
def test_child_label_deltas(n):
    for mv in enumerate_valid(MiuraSpec(n)):
        d = len(flippable_faces(mv))
        got = sorted(len(flippable_faces(k)) - d for k in fr.extend_assignment(mv))
        assert got == ([0, 0, 2] if fr.ends_in_blue(mv) else [0, 1, 2])


def test_generation_two(tables):
    t = tables[1]
    assert t.counts == {(2, fr.MAGENTA): 4, (4, fr.BLUE): 2}


def test_generation_three_per_tree():
    gen = [fr.ROOTS[0]]
    for _ in range(2):
        gen = [c for node in gen for c in node.children()]
    assert sorted(node.label for node in gen) == sorted([6, 4, 4, 4, 3, 2, 4, 3, 2])


def test_totals_triple(tables):
    assert [t.total for t in tables[:6]] == [2, 6, 18, 54, 162, 486]


@pytest.mark.parametrize("n", range(2, 10))
def test_matches_reference_table(tables, n):
    assert tables[n - 1].distribution() == DEGREE_TABLE[n]


@pytest.mark.parametrize("n", range(2, 7))
def test_matches_graph(tables, n):
    assert all(c.passed for c in fr.cross_validate(tables, [build_ofg(MiuraSpec(n))]))


def test_blue_counts_match_mv_endings(tables):
    for n in range(2, 7):
        counts = {}
        for mv in enumerate_valid(MiuraSpec(n)):
            if fr.ends_in_blue(mv):
                d = len(flippable_faces(mv))
                counts[d] = counts.get(d, 0) + 1
        t = tables[n - 1]
        assert counts == {d: t.b(d) for d in t.labels() if t.b(d)}


def test_recurrence_examples(tables):
    t3, t4, t5 = tables[2], tables[3], tables[4]
    assert t4.b(6) == t3.v(4) == 8
    assert t4.w(3) == 8
    assert t5.v(4) == t4.v(4) + t4.w(3) + t4.v(2) + t3.v(2) == 36


def test_recurrences_and_structure(tables):
    checks = fr.verify_recurrences(tables[:20]) + fr.structural_checks(tables[:20])
    assert checks and all(c.passed for c in checks)


def test_structure_at_n9(tables):
    t = tables[8]
    assert t.v(17) == 0 and t.v(18) == 2
    assert tables[1].labels() == [2, 4]


def test_finite_differences():
    assert fr.finite_differences([8, 12, 16, 20, 24, 28, 32]) == [4] * 6
    assert fr.finite_differences([20, 44, 76, 116, 164, 220], 2) == [8] * 4
    assert fr.finite_differences([5] * 4) == [0] * 3
    with pytest.raises(ValueError):
        fr.finite_differences([1], 1)


def test_newton_fit_recovers_polynomial():
    # (n^3 - n) / 6 + n - 2 is integer-valued
    coeffs = [Fraction(-2), Fraction(5, 6), Fraction(0), Fraction(1, 6)]
    values = [int(fr.eval_poly(coeffs, n)) for n in range(6, 12)]
    assert fr.newton_fit(6, values) == coeffs


def test_fitted_laws(tables):
    assert fr.fitted_polynomial(tables, 3) == [-8, 4]
    assert fr.fitted_polynomial(tables, 2) == [4]
    assert fr.format_poly(fr.fitted_polynomial(tables, 3)) == "4*n - 8"
    assert fr.fitted_reverse_polynomial(tables, 1) == [0]
    assert fr.fitted_reverse_polynomial(tables, 0) == [2]


def test_polynomial_laws(tables):
    checks = fr.polynomial_law_checks(tables, d_max=10, a_max=6)
    assert len(checks) == 9 + 7
    assert all(c.passed for c in checks)


@pytest.mark.parametrize("a", sorted(REVERSE_TABLE))
def test_reverse_rows(tables, a):
    seq, _ = REVERSE_TABLE[a]
    assert fr.reverse_sequence(tables, a, 9)[1] == list(seq)


def test_edge_case_value_is_excluded(tables):
    # for a = 6 the n = 4 term counts the four degree-2 vertices and breaks the law
    assert fr.reverse_start(6) == 5
    start, seq = fr.reverse_sequence(tables, 6)
    coeffs = fr.newton_fit(start, seq)
    assert fr.eval_poly(coeffs, 4) != tables[3].v(2)


def test_csv_shape(tables):
    text = fr.to_csv(tables[:5])
    lines = text.splitlines()
    assert lines[0] == "d,v_2,v_3,v_4,v_5"
    assert lines[1] == "2,4,4,4,4"
    assert len(lines) == 1 + 9
