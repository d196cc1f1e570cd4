"""Crease-level model of the 2 x n Miura-ori.

Creases are addressed by their label: 0 is the leftmost horizontal crease
(label 1 is an alias for it), and vertex x_k (1 <= k <= n-1) has left crease
3k-3, top crease 3k-1, right crease 3k and bottom crease 3k+1.  An
assignment stores one parity per physical crease, so label L lives in slot
``0`` if L <= 1 and slot ``L - 1`` otherwise.

Geometry is fixed combinatorially: at every vertex the left crease sits
between the two obtuse sectors, so the minority crease may never be the left
one.  Faces alpha_{i,j} are 1-based ``Face(row, col)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterator

M = 1
V = -1

_CHAR = {M: "M", V: "V"}
_PARITY = {"M": M, "V": V}

# (top, right, bottom) triples allowed after a left crease of parity p,
# in lexicographic order with M before V.
_TRIPLES = {
    p: tuple(
        t for t in product((M, V), repeat=3) if t.count(-p) == 1
    )
    for p in (M, V)
}


@dataclass(frozen=True)
class MiuraSpec:
    cols: int
    rows: int = 2

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1:
            raise ValueError(f"Miura-ori needs rows, cols >= 1, got {self.rows}x{self.cols}")

    def require_crease_level(self) -> None:
        if self.rows != 2:
            raise ValueError(f"crease-level operations need rows == 2, got rows={self.rows}")


@dataclass(frozen=True, order=True)
class Face:
    row: int
    col: int

    def __str__(self):
        return f"a{self.row},{self.col}"


def crease_count(spec: MiuraSpec) -> int:
    spec.require_crease_level()
    return 3 * spec.cols - 2


def crease_labels(n: int) -> list[int]:
    return [0] + list(range(2, 3 * n - 1))


def crease_slot(label: int, n: int) -> int:
    if label < 0 or label > 3 * n - 2:
        raise IndexError(f"crease e_{label} does not exist for n={n}")
    return 0 if label <= 1 else label - 1


def vertex_creases(spec: MiuraSpec, k: int) -> tuple[int, int, int, int]:
    """Labels (left, top, right, bottom) of the creases at vertex x_k."""
    spec.require_crease_level()
    if not 1 <= k <= spec.cols - 1:
        raise IndexError(f"vertex x_{k} out of range for n={spec.cols}")
    return (3 * k - 3, 3 * k - 1, 3 * k, 3 * k + 1)


@dataclass(frozen=True)
class MVAssignment:
    """Parities (+1 mountain, -1 valley) over the 3n-2 creases, slot order."""

    parities: tuple[int, ...]

    def __post_init__(self):
        if len(self.parities) % 3 != 1:
            raise ValueError(f"an assignment has 3n-2 parities, got {len(self.parities)}")
        if any(p not in (M, V) for p in self.parities):
            raise ValueError("parities must be +1 or -1")

    @property
    def n(self) -> int:
        return (len(self.parities) + 2) // 3

    @property
    def spec(self) -> MiuraSpec:
        return MiuraSpec(self.n)

    def crease(self, label: int) -> int:
        return self.parities[crease_slot(label, self.n)]

    def vertex(self, k: int) -> tuple[int, int, int, int]:
        """Parities (left, top, right, bottom) at x_k."""
        return _vertex_parities(self.parities, k)

    @classmethod
    def from_string(cls, text: str) -> "MVAssignment":
        text = text.strip().upper()
        bad = set(text) - set("MV")
        if bad:
            raise ValueError(f"MV string may only contain 'M' and 'V', found {sorted(bad)}")
        if len(text) % 3 != 1:
            raise ValueError(f"MV string length must be 3n-2, got {len(text)}")
        return cls(tuple(_PARITY[c] for c in text))

    def __str__(self):
        return "".join(_CHAR[p] for p in self.parities)


def _vertex_parities(parities, k: int) -> tuple[int, int, int, int]:
    # slots: left is x_{k-1}'s right crease (slot 0 for x_1), then 3k-2..3k
    left = parities[0] if k == 1 else parities[3 * k - 4]
    return (left, parities[3 * k - 2], parities[3 * k - 1], parities[3 * k])


def _vertex_ok(parities, k: int) -> bool:
    left, top, right, bottom = _vertex_parities(parities, k)
    total = left + top + right + bottom
    # |sum| == 2 and the left crease carries the majority parity
    return total == 2 * left


def is_locally_valid(mv: MVAssignment) -> bool:
    p = mv.parities
    return all(_vertex_ok(p, k) for k in range(1, mv.n))


def _grow(prefix: tuple[int, ...], remaining: int) -> Iterator[tuple[int, ...]]:
    if remaining == 0:
        yield prefix
        return
    for triple in _TRIPLES[prefix[-2] if len(prefix) > 1 else prefix[0]]:
        yield from _grow(prefix + triple, remaining - 1)


def iter_valid(n: int) -> Iterator[MVAssignment]:
    # the left crease of x_{k+1} is the right crease of x_k, i.e. prefix[-2]
    for first in (M, V):
        for parities in _grow((first,), n - 1):
            yield MVAssignment(parities)


def enumerate_valid(spec: MiuraSpec) -> list[MVAssignment]:
    """All locally valid assignments in lexicographic order (M before V)."""
    spec.require_crease_level()
    return list(iter_valid(spec.cols))


def faces(spec: MiuraSpec) -> list[Face]:
    return [Face(i, j) for i in range(1, spec.rows + 1) for j in range(1, spec.cols + 1)]


def face_border_creases(spec: MiuraSpec, face: Face) -> frozenset[int]:
    spec.require_crease_level()
    n = spec.cols
    i, j = face.row, face.col
    if i not in (1, 2) or not 1 <= j <= n:
        raise IndexError(f"face {face} out of range for n={n}")
    labels = {3 * j - 3}
    if i == 1:
        if j > 1:
            labels.add(3 * j - 4)
        if j < n:
            labels.add(3 * j - 1)
    else:
        if j > 1:
            labels.add(3 * j - 2)
        if j < n:
            labels.add(3 * j + 1)
    return frozenset(labels)


@lru_cache(maxsize=None)
def _border_slots(n: int, face: Face) -> tuple[int, ...]:
    return tuple(sorted(crease_slot(c, n) for c in face_border_creases(MiuraSpec(n), face)))


@lru_cache(maxsize=None)
def _touched_vertices(n: int, face: Face) -> tuple[int, ...]:
    return tuple(k for k in (face.col - 1, face.col) if 1 <= k <= n - 1)


def flip_face(mv: MVAssignment, face: Face) -> MVAssignment:
    p = list(mv.parities)
    for s in _border_slots(mv.n, face):
        p[s] = -p[s]
    return MVAssignment(tuple(p))


def is_flippable(mv: MVAssignment, face: Face) -> bool:
    flipped = flip_face(mv, face).parities
    return all(_vertex_ok(flipped, k) for k in _touched_vertices(mv.n, face))


def flippable_faces(mv: MVAssignment) -> list[Face]:
    return [f for f in faces(mv.spec) if is_flippable(mv, f)]


def opposite(mv: MVAssignment) -> MVAssignment:
    return MVAssignment(tuple(-p for p in mv.parities))


def diagonal_assignment(n: int, row: int) -> MVAssignment:
    """All diagonal creases of the given row (1 top, 2 bottom) mountain, the rest valley."""
    if row not in (1, 2):
        raise ValueError("row must be 1 or 2")
    p = [V] * (3 * n - 2)
    for k in range(1, n):
        label = 3 * k - 1 if row == 1 else 3 * k + 1
        p[crease_slot(label, n)] = M
    return MVAssignment(tuple(p))
