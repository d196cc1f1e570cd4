"""Extension forest of MV assignments and its degree-labeled shadow.

Extending M_{2,n} to M_{2,n+1} adds one vertex with three new creases; every
valid assignment has exactly three valid extensions.  Labeling each node by
its number of flippable faces gives a forest whose growth depends only on a
node's label and color:

* blue node labeled d   -> children d+2 (blue), d (magenta), d (magenta)
* other node labeled d  -> children d+2 (blue), d+1 (orange), d (magenta)

Generations are kept as counts per (label, color), never as explicit trees.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from math import ceil
from typing import Iterable, Sequence

from .miura import M, V, MVAssignment, is_locally_valid, _TRIPLES
from .report import Check

BLUE = "blue"
ORANGE = "orange"
MAGENTA = "magenta"
COLORS = (BLUE, ORANGE, MAGENTA)


@dataclass(frozen=True)
class ChiDNode:
    label: int
    color: str
    generation: int

    def children(self) -> tuple["ChiDNode", "ChiDNode", "ChiDNode"]:
        g = self.generation + 1
        d = self.label
        if self.color == BLUE:
            return (ChiDNode(d + 2, BLUE, g), ChiDNode(d, MAGENTA, g), ChiDNode(d, MAGENTA, g))
        return (ChiDNode(d + 2, BLUE, g), ChiDNode(d + 1, ORANGE, g), ChiDNode(d, MAGENTA, g))


ROOTS = (ChiDNode(2, BLUE, 1), ChiDNode(2, BLUE, 1))


@dataclass(frozen=True)
class GenerationTable:
    n: int
    counts: dict  # (label, color) -> number of nodes

    def v(self, d: int) -> int:
        return sum(self.counts.get((d, c), 0) for c in COLORS)

    def b(self, d: int) -> int:
        return self.counts.get((d, BLUE), 0)

    def w(self, d: int) -> int:
        return self.v(d) - self.b(d)

    def labels(self) -> list[int]:
        return sorted({d for (d, _), k in self.counts.items() if k})

    def distribution(self) -> dict[int, int]:
        return {d: self.v(d) for d in self.labels()}

    @property
    def total(self) -> int:
        return sum(self.counts.values())


def extend_assignment(mv: MVAssignment) -> list[MVAssignment]:
    """The three valid extensions of mv to one more column, sorted (M before V)."""
    if not is_locally_valid(mv):
        raise ValueError(f"assignment {mv} is not locally valid")
    right = mv.parities[-2] if mv.n > 1 else mv.parities[0]
    kids = [MVAssignment(mv.parities + t) for t in _TRIPLES[right]]
    return sorted(kids, key=str)


def ends_in_blue(mv: MVAssignment) -> bool:
    """True when the last vertex reads MVM or VMV (or n == 1)."""
    if mv.n == 1:
        return True
    top, right, bottom = mv.parities[-3:]
    return (top, right, bottom) in ((M, V, M), (V, M, V))


def next_generation(table: GenerationTable) -> GenerationTable:
    counts: dict = defaultdict(int)
    for (d, color), k in table.counts.items():
        for child in ChiDNode(d, color, table.n).children():
            counts[child.label, child.color] += k
    return GenerationTable(table.n + 1, dict(sorted(counts.items())))


def generate_chi_d(n_max: int) -> list[GenerationTable]:
    """Count tables for generations 1..n_max."""
    if n_max < 1:
        raise ValueError("need at least one generation")
    first = defaultdict(int)
    for root in ROOTS:
        first[root.label, root.color] += 1
    tables = [GenerationTable(1, dict(first))]
    while len(tables) < n_max:
        tables.append(next_generation(tables[-1]))
    return tables


def _table(tables: Sequence[GenerationTable], n: int) -> GenerationTable:
    t = tables[n - 1]
    assert t.n == n
    return t


def verify_recurrences(tables: Sequence[GenerationTable]) -> list[Check]:
    """Blue, warm and total recurrences for every n >= 3 and every label."""
    checks = []
    for n in range(3, len(tables) + 1):
        cur, prev, prev2 = _table(tables, n), _table(tables, n - 1), _table(tables, n - 2)
        bad = []
        for d in range(0, 2 * n + 3):
            if cur.b(d) != prev.v(d - 2):
                bad.append(("b", d))
            if cur.w(d) != prev.v(d) + prev.w(d - 1) + prev2.v(d - 2):
                bad.append(("w", d))
            if cur.v(d) != prev.v(d) + prev.w(d - 1) + prev.v(d - 2) + prev2.v(d - 2):
                bad.append(("v", d))
        checks.append(Check("prop-recurrences", {"n": n}, [], bad))
    return checks


def structural_checks(tables: Sequence[GenerationTable]) -> list[Check]:
    checks = []
    for t in tables:
        n = t.n
        if n < 2:
            continue
        p = {"n": n}
        checks.append(Check("lem-min-degree", p, {"count": 4, "magenta": 4},
                            {"count": t.v(2), "magenta": t.counts.get((2, MAGENTA), 0)}))
        checks.append(Check("lem-max-degree", p, {"label": 2 * n, "count": 2, "blue": 2},
                            {"label": max(t.labels()), "count": t.v(2 * n), "blue": t.b(2 * n)}))
        checks.append(Check("lem-no-2n-1", p, 0, t.v(2 * n - 1)))
        checks.append(Check("thm-set", p, list(range(2, 2 * n - 1)) + [2 * n], t.labels()))
    return checks


def finite_differences(seq: Sequence[int], order: int = 1) -> list:
    if order < 0:
        raise ValueError("order must be non-negative")
    out = list(seq)
    for _ in range(order):
        if len(out) < 2:
            raise ValueError("sequence too short for this order")
        out = [b - a for a, b in zip(out, out[1:])]
    return out


def newton_fit(n0: int, values: Sequence[int]) -> list[Fraction]:
    """Monomial coefficients (constant first) of the interpolant through
    (n0, values[0]), (n0+1, values[1]), ... built from forward differences."""
    diffs = [finite_differences(values, k)[0] for k in range(len(values))]
    while len(diffs) > 1 and diffs[-1] == 0:
        diffs.pop()
    coeffs = [Fraction(0)]
    basis = [Fraction(1)]  # falling product (n - n0)(n - n0 - 1)... / k!
    for k, dk in enumerate(diffs):
        if k > 0:
            shifted = [Fraction(0)] + basis
            for i, c in enumerate(basis):
                shifted[i] -= c * (n0 + k - 1)
            basis = [c / k for c in shifted]
        if len(coeffs) < len(basis):
            coeffs += [Fraction(0)] * (len(basis) - len(coeffs))
        for i, c in enumerate(basis):
            coeffs[i] += dk * c
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def eval_poly(coeffs: Sequence[Fraction], n: int) -> Fraction:
    return sum(c * n**i for i, c in enumerate(coeffs))


def format_poly(coeffs: Sequence[Fraction], var: str = "n") -> str:
    terms = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if c == 0:
            continue
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        mag = abs(c)
        coef = str(mag) if (mag != 1 or not mono) else ""
        body = f"{coef}{'*' if coef and mono else ''}{mono}"
        terms.append(("-" if c < 0 else "+", body))
    if not terms:
        return "0"
    head = ("-" if terms[0][0] == "-" else "") + terms[0][1]
    return head + "".join(f" {s} {b}" for s, b in terms[1:])


def degree_sequence(tables: Sequence[GenerationTable], d: int) -> tuple[int, list[int]]:
    """(first n, [v_n^d ...]) over n >= ceil(d/2) + 1."""
    start = ceil(d / 2) + 1
    return start, [_table(tables, n).v(d) for n in range(start, len(tables) + 1)]


def reverse_start(a: int) -> int:
    """First n of the (v_n^{2n-a}) sequence; skips the four-2s edge case and n = 1."""
    start = max(2, ceil(a / 2) + 1)
    while 2 * start - a <= 2 and a > 0:
        start += 1
    return start


def reverse_sequence(tables: Sequence[GenerationTable], a: int, n_last: int | None = None) -> tuple[int, list[int]]:
    start = reverse_start(a)
    last = len(tables) if n_last is None else n_last
    return start, [_table(tables, n).v(2 * n - a) for n in range(start, last + 1)]


def polynomial_law_checks(tables: Sequence[GenerationTable], d_max: int, a_max: int) -> list[Check]:
    checks = []
    for d in range(2, d_max + 1):
        start, seq = degree_sequence(tables, d)
        if len(seq) < d:
            raise ValueError(f"not enough generations to test degree-{d} law")
        zero = finite_differences(seq, d - 1)
        coeffs = newton_fit(start, seq)
        checks.append(Check("thm-poly-d", {"d": d, "from_n": start},
                            {"vanishing_diff": [0] * len(zero), "poly_degree": d - 2},
                            {"vanishing_diff": zero, "poly_degree": len(coeffs) - 1}))
    for a in range(0, a_max + 1):
        start, seq = reverse_sequence(tables, a)
        k = a // 2 + 1
        if len(seq) < k + 2:
            raise ValueError(f"not enough generations to test 2n-{a} law")
        zero = finite_differences(seq, k)
        coeffs = newton_fit(start, seq)
        checks.append(Check("thm-poly-2n-a", {"a": a, "from_n": start},
                            {"vanishing_diff": [0] * len(zero), "poly_degree": a // 2},
                            {"vanishing_diff": zero, "poly_degree": len(coeffs) - 1}))
    return checks


def fitted_polynomial(tables: Sequence[GenerationTable], d: int) -> list[Fraction]:
    start, seq = degree_sequence(tables, d)
    return newton_fit(start, seq)


def fitted_reverse_polynomial(tables: Sequence[GenerationTable], a: int) -> list[Fraction]:
    start, seq = reverse_sequence(tables, a)
    return newton_fit(start, seq)


def cross_validate(tables: Sequence[GenerationTable], graphs: Iterable) -> list[Check]:
    """Compare each graph's degree distribution with the forest generation of the same n."""
    from .flipgraph import degree_distribution

    checks = []
    for g in graphs:
        n = g.spec.cols
        checks.append(Check("forest-vs-graph", {"n": n}, _table(tables, n).distribution(), degree_distribution(g)))
    return checks


def table_rows(tables: Sequence[GenerationTable], n_from: int = 2) -> list[list[int]]:
    """Rows d = 2..2n_max, columns n = n_from..n_max, zero-filled."""
    n_max = len(tables)
    return [[_table(tables, n).v(d) for n in range(n_from, n_max + 1)] for d in range(2, 2 * n_max + 1)]


def to_csv(tables: Sequence[GenerationTable], n_from: int = 2) -> str:
    n_max = len(tables)
    lines = ["d," + ",".join(f"v_{n}" for n in range(n_from, n_max + 1))]
    for d, row in zip(range(2, 2 * n_max + 1), table_rows(tables, n_from)):
        lines.append(f"{d}," + ",".join(str(x) for x in row))
    return "\n".join(lines) + "\n"
