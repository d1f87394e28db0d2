"""The (n+3)-gon model of the type A_n cluster theory and its embedding.

Vertices are labeled 1..n+3 counterclockwise; a triangulation is a maximal
set of n pairwise noncrossing diagonals.  Diagonal i-j embeds as the open
interval between the i-th and j-th ladder points.
"""

from __future__ import annotations

from typing import NamedTuple

from .clusters import ClusterDescription, build_t_n
from .families import FiniteFamily
from .line import IntervalObject, Ladder


class Diagonal(NamedTuple):
    i: int
    j: int

    def __repr__(self):
        return f"{self.i}-{self.j}"


def parse_diagonal(text: str) -> Diagonal:
    parts = text.replace("—", "-").split("-")
    if len(parts) != 2:
        raise ValueError(f"cannot parse diagonal {text!r}")
    i, j = int(parts[0]), int(parts[1])
    return Diagonal(min(i, j), max(i, j))


def is_diagonal(d: Diagonal, n: int) -> bool:
    m = n + 3
    return 1 <= d.i < d.j <= m and d.j - d.i >= 2 and (d.i, d.j) != (1, m)


def all_diagonals(n: int) -> list[Diagonal]:
    m = n + 3
    return [
        Diagonal(i, j)
        for i in range(1, m + 1)
        for j in range(i + 2, m + 1)
        if (i, j) != (1, m)
    ]


def diagonals_cross(d1: Diagonal, d2: Diagonal) -> bool:
    i, j = d1
    a, b = d2
    return i < a < j < b or a < i < b < j


class Triangulation:
    def __init__(self, n: int, diagonals):
        self.n = n
        self.diagonals = frozenset(diagonals)
        if len(self.diagonals) != n:
            raise ValueError(f"a triangulation of the {n + 3}-gon has {n} diagonals")
        diags = sorted(self.diagonals)
        for d in diags:
            if not is_diagonal(d, n):
                raise ValueError(f"{d} is not a diagonal of the {n + 3}-gon")
        for k, d in enumerate(diags):
            for e in diags[k + 1 :]:
                if diagonals_cross(d, e):
                    raise ValueError(f"{d} and {e} cross")

    def __eq__(self, other):
        return isinstance(other, Triangulation) and (self.n, self.diagonals) == (
            other.n,
            other.diagonals,
        )

    def __hash__(self):
        return hash((self.n, self.diagonals))

    def __repr__(self):
        return "{" + ",".join(repr(d) for d in sorted(self.diagonals)) + "}"

    @staticmethod
    def fan(n: int) -> "Triangulation":
        """The fan at vertex 1: diagonals 1-3, 1-4, ..., 1-(n+2)."""
        return Triangulation(n, [Diagonal(1, k) for k in range(3, n + 3)])


def flip(tri: Triangulation, d: Diagonal) -> tuple[Triangulation, Diagonal]:
    """Exchange d for the unique other diagonal completing a triangulation.
    Brute force over all diagonals; every diagonal of a triangulation is
    flippable."""
    if d not in tri.diagonals:
        raise ValueError(f"{d} is not in the triangulation")
    rest = tri.diagonals - {d}
    replacement = None
    for cand in all_diagonals(tri.n):
        if cand == d or cand in rest:
            continue
        if any(diagonals_cross(cand, e) for e in rest):
            continue
        if replacement is not None:
            raise AssertionError(f"flip of {d} is not unique: {replacement}, {cand}")
        replacement = cand
    assert replacement is not None
    return Triangulation(tri.n, rest | {replacement}), replacement


def enumerate_triangulations(n: int) -> list[Triangulation]:
    """All triangulations of the (n+3)-gon (Catalan(n+1) of them)."""
    if n > 10:
        raise ValueError("enumeration is capped at n = 10")

    def rec(vertices: tuple[int, ...]) -> list[frozenset]:
        if len(vertices) < 3:
            return [frozenset()]
        v0, vlast = vertices[0], vertices[-1]
        out = []
        for k in range(1, len(vertices) - 1):
            vk = vertices[k]
            for left in rec(vertices[: k + 1]):
                for right in rec(vertices[k:]):
                    diags = set(left | right)
                    for a, b in ((v0, vk), (vk, vlast)):
                        if b - a >= 2 and not (a == 1 and b == n + 3):
                            diags.add(Diagonal(a, b))
                    out.append(frozenset(diags))
        return out

    seen = dict.fromkeys(rec(tuple(range(1, n + 4))))
    return [Triangulation(n, ds) for ds in seen]


def flip_graph(n: int) -> dict[Triangulation, dict[Diagonal, Triangulation]]:
    """Nodes: all triangulations; edges: flips, keyed by the flipped
    diagonal."""
    graph = {}
    for tri in enumerate_triangulations(n):
        graph[tri] = {d: flip(tri, d)[0] for d in tri.diagonals}
    return graph


def embed_diagonal(ladder: Ladder, d: Diagonal) -> IntervalObject:
    return IntervalObject.open(ladder.value(d.i), ladder.value(d.j))


def embed_triangulation(ladder: Ladder, tri: Triangulation) -> ClusterDescription:
    base = build_t_n(ladder, tri.n)
    images = FiniteFamily([embed_diagonal(ladder, d) for d in sorted(tri.diagonals)])
    return ClusterDescription(base.families + (images,), ladder)
