"""The infinity-gon arc model (type A-infinity) and its embedding.

Arc sets are described as a finite part plus left/right tails (the
genuinely infinite fountain families); locally finite clusters with
infinitely many arcs are approximated by windowed finite parts.
"""

from __future__ import annotations

import re

from dataclasses import dataclass
from typing import NamedTuple

from .clusters import ClusterDescription, build_t_infinity
from .families import LEFT, RIGHT, FanFamily, FiniteFamily, IntegerRay
from .line import MINUS, PLUS, DoubledPoint, IntervalObject, Ladder


class MalformedDescription(Exception):
    pass


class NotMutableArc(Exception):
    pass


class Arc(NamedTuple):
    i: int
    j: int

    def __repr__(self):
        return f"{self.i}-{self.j}"


def make_arc(i: int, j: int) -> Arc:
    # the source writes the spread condition as i - j >= 2, which is
    # unsatisfiable with i < j; every example forces j - i >= 2
    if not (i < j and j - i >= 2):
        raise ValueError(f"({i},{j}) is not an arc")
    return Arc(i, j)


def parse_arc(text: str) -> Arc:
    m = re.fullmatch(r"\s*(-?\d+)\s*-\s*(-?\d+)\s*", text)
    if not m:
        raise ValueError(f"cannot parse arc {text!r} (want i-j)")
    return make_arc(int(m.group(1)), int(m.group(2)))


def arcs_cross(a1: Arc, a2: Arc) -> bool:
    i, j = a1
    a, b = a2
    return i < a < j < b or a < i < b < j


class LeftTail(NamedTuple):
    m: int   # all arcs end here
    i0: int  # ... and start at i <= i0


class RightTail(NamedTuple):
    n: int   # all arcs start here
    j0: int  # ... and end at j >= j0


def _tail_arc_cross_left(tail: LeftTail, arc: Arc) -> bool:
    """Does some i-(tail.m) with i <= tail.i0 cross arc?  Tails are
    infinite downward, so 'some i < a' is always realizable."""
    a, b = arc
    i0 = min(tail.i0, tail.m - 2)
    if a < tail.m < b:  # i < a < m < b
        return True
    # a < i < b < m needs an integer i in (a, b) with i <= i0
    return b < tail.m and a + 1 <= min(b - 1, i0)


def _tail_arc_cross_right(tail: RightTail, arc: Arc) -> bool:
    """Does some (tail.n)-j with j >= tail.j0 cross arc?"""
    a, b = arc
    j0 = max(tail.j0, tail.n + 2)
    if a < tail.n < b:  # a < n < b < j, realizable upward
        return True
    # n < a < j < b needs an integer j in (a, b) with j >= j0
    return tail.n < a and max(a + 1, j0) <= b - 1


def _tails_cross(lt: LeftTail, rt: RightTail) -> bool:
    # i-m vs n-j crossing needs i < n < m < j (realizable iff n < m);
    # for m <= n the other pattern n < i < j < m has no room either.
    return lt.m > rt.n


@dataclass(frozen=True)
class ArcSetDescription:
    finite: frozenset[Arc]
    left_tails: tuple[LeftTail, ...] = ()
    right_tails: tuple[RightTail, ...] = ()

    @staticmethod
    def of(finite=(), left_tails=(), right_tails=()) -> "ArcSetDescription":
        return ArcSetDescription(
            frozenset(make_arc(*a) for a in finite),
            tuple(LeftTail(*t) for t in left_tails),
            tuple(RightTail(*t) for t in right_tails),
        )

    def contains_arc(self, arc: Arc) -> bool:
        if arc in self.finite:
            return True
        for t in self.left_tails:
            if arc.j == t.m and arc.i <= min(t.i0, t.m - 2):
                return True
        for t in self.right_tails:
            if arc.i == t.n and arc.j >= max(t.j0, t.n + 2):
                return True
        return False

    def crosses(self, arc: Arc) -> bool:
        """Does some described arc cross `arc`?"""
        if any(arcs_cross(a, arc) for a in self.finite):
            return True
        if any(_tail_arc_cross_left(t, arc) for t in self.left_tails):
            return True
        return any(_tail_arc_cross_right(t, arc) for t in self.right_tails)

    def validate(self) -> None:
        """Raise MalformedDescription unless the description is pairwise
        noncrossing with well-formed (unique, paired) tails."""
        if len({t.m for t in self.left_tails}) != len(self.left_tails):
            raise MalformedDescription("duplicate left-tail vertex")
        if len({t.n for t in self.right_tails}) != len(self.right_tails):
            raise MalformedDescription("duplicate right-tail vertex")
        if len(self.left_tails) > 1:
            raise MalformedDescription("two distinct left-tail vertices")
        if len(self.right_tails) > 1:
            raise MalformedDescription("two distinct right-tail vertices")
        if bool(self.left_tails) != bool(self.right_tails):
            raise MalformedDescription("a left tail requires a right tail (and conversely)")
        if self.left_tails and self.right_tails:
            m, n = self.left_tails[0].m, self.right_tails[0].n
            if m > n:
                raise MalformedDescription("left-tail vertex must not exceed right-tail vertex")
            if _tails_cross(self.left_tails[0], self.right_tails[0]):
                raise MalformedDescription("tails cross")
        arcs = sorted(self.finite)
        for k, a in enumerate(arcs):
            for b in arcs[k + 1 :]:
                if arcs_cross(a, b):
                    raise MalformedDescription(f"{a} and {b} cross")
            for t in self.left_tails:
                if _tail_arc_cross_left(t, a):
                    raise MalformedDescription(f"{a} crosses the left tail at {t.m}")
            for t in self.right_tails:
                if _tail_arc_cross_right(t, a):
                    raise MalformedDescription(f"{a} crosses the right tail at {t.n}")

    def vertex_window(self, pad: int = 3) -> tuple[int, int]:
        vs = [v for a in self.finite for v in a]
        for t in self.left_tails:
            vs.extend((t.m, min(t.i0, t.m - 2)))
        for t in self.right_tails:
            vs.extend((t.n, max(t.j0, t.n + 2)))
        if not vs:
            vs = [0]
        return min(vs) - pad, max(vs) + pad


LOCALLY_FINITE = "LOCALLY_FINITE"
FOUNTAIN = "FOUNTAIN"


@dataclass(frozen=True)
class FountainReport:
    kind: str
    m: int | None = None
    n: int | None = None


def fountain_report(desc: ArcSetDescription) -> FountainReport:
    """FOUNTAIN(m, n) when tails are present (the left- and right-fountain
    vertices), LOCALLY_FINITE otherwise.  Malformed tail layouts raise."""
    desc.validate()
    if not desc.left_tails:
        return FountainReport(LOCALLY_FINITE)
    m = desc.left_tails[0].m
    n = desc.right_tails[0].n
    return FountainReport(FOUNTAIN, m=m, n=n)


def no_skip_check(desc: ArcSetDescription, level: int) -> bool:
    """Whether every described arc has i >= level or j <= level (no arc
    skips over `level`)."""
    for a in desc.finite:
        if not (a.i >= level or a.j <= level):
            return False
    for t in desc.left_tails:
        if t.m > level:
            return False
    for t in desc.right_tails:
        if t.n < level:
            return False
    return True


def embed_arc(ladder: Ladder, arc: Arc) -> IntervalObject:
    return IntervalObject.open(ladder.value(arc.i), ladder.value(arc.j))


def embed_arc_set(ladder: Ladder, desc: ArcSetDescription) -> ClusterDescription:
    """The induced compatible set: the convergent-ladder base, the arc
    images (tails as fans), and, when there is a fountain, the three limit
    modules that restore maximality."""
    report = fountain_report(desc)
    base = build_t_infinity(ladder)
    fams = list(base.families)
    if desc.finite:
        fams.append(FiniteFamily([embed_arc(ladder, a) for a in sorted(desc.finite)]))
    for t in desc.left_tails:
        apex = DoubledPoint.at(ladder.value(t.m), MINUS)
        fams.append(FanFamily(apex, ladder, IntegerRay("<=", min(t.i0, t.m - 2)), LEFT))
    for t in desc.right_tails:
        apex = DoubledPoint.at(ladder.value(t.n), PLUS)
        fams.append(FanFamily(apex, ladder, IntegerRay(">=", max(t.j0, t.n + 2)), RIGHT))
    if report.kind == FOUNTAIN:
        am = ladder.value(report.m)
        an = ladder.value(report.n)
        extras = {
            IntervalObject.open(ladder.lower, am),
            IntervalObject.open(ladder.lower, an),
            IntervalObject.open(an, ladder.upper),
        }
        fams.append(FiniteFamily(sorted(extras)))
    return ClusterDescription(fams, ladder)


def window_arc_candidates(desc: ArcSetDescription, bound: int = 12) -> list[Arc]:
    lo, hi = desc.vertex_window()
    lo, hi = max(lo, -bound), min(hi, bound)
    return [
        Arc(i, j)
        for i in range(lo, hi - 1)
        for j in range(i + 2, hi + 1)
    ]


def window_maximal(desc: ArcSetDescription, bound: int = 12) -> list[Arc]:
    """Arcs in the window that could be added without crossing: empty for
    (window-)maximal descriptions."""
    return [
        a
        for a in window_arc_candidates(desc, bound)
        if not desc.contains_arc(a) and not desc.crosses(a)
    ]


def mutate_arc(desc: ArcSetDescription, arc: Arc, bound: int = 12) -> tuple[ArcSetDescription, Arc]:
    """Exchange a finite-part arc for the unique replacement keeping the
    description (window-)maximal."""
    if arc not in desc.finite:
        raise NotMutableArc(f"{arc} is not in the finite part")
    rest = ArcSetDescription(
        desc.finite - {arc}, desc.left_tails, desc.right_tails
    )
    survivors = []
    for cand in window_arc_candidates(desc, bound):
        if cand == arc or rest.contains_arc(cand):
            continue
        if not arcs_cross(cand, arc):
            continue
        if rest.crosses(cand):
            continue
        new = ArcSetDescription(
            rest.finite | {cand}, desc.left_tails, desc.right_tails
        )
        if not window_maximal(new, bound):
            survivors.append((cand, new))
    if not survivors:
        raise NotMutableArc(f"no replacement for {arc} keeps maximality")
    if len(survivors) > 1:
        raise AssertionError(f"replacement for {arc} is not unique: {survivors}")
    cand, new = survivors[0]
    return new, cand
