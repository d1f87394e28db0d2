"""Symbolic families of interval objects with decidable queries.

A Family describes a (possibly uncountable) set of interval objects and
answers three questions exactly:

* member(m)                      -- is m one of the described objects?
* find_incompatible(m, exclude)  -- some described object (outside
                                    `exclude`) that is E-incompatible with
                                    m, or None if every described object is
                                    compatible with m;
* incident(p, near)              -- finitely many representative members
                                    touching the doubled point p, used for
                                    mutation candidate generation (`near`
                                    tunes widths to the interval being
                                    mutated).

Witness searches enumerate a finite candidate set and filter with the
geometric compatibility predicate; the candidate sets are chosen so that a
witness exists among them whenever one exists at all (straddles of an
endpoint refine toward it, adjacency witnesses come in all depths, and the
only singleton witness of an interval is the singleton at its endpoint).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .compat import e_compatible_geometric
from .line import (
    MINUS,
    NEG_INF_POINT,
    OUTSIDE,
    PLUS,
    POS_INF_POINT,
    DoubledPoint,
    IntervalObject,
    Ladder,
    dyadic_level,
    is_dyadic,
    is_power_of_two,
)


class Family:
    kind = "abstract"

    def member(self, m: IntervalObject) -> bool:
        raise NotImplementedError

    def find_incompatible(self, m, exclude=frozenset()):
        raise NotImplementedError

    def incident(self, p: DoubledPoint, near=None) -> list[IntervalObject]:
        return []

    def to_json(self) -> dict:
        raise NotImplementedError


def _first_witness(m, candidates, exclude):
    seen = set()
    for x in candidates:
        if x is None or x in seen:
            continue
        seen.add(x)
        if x not in exclude and not e_compatible_geometric(m, x):
            return x
    return None


class FiniteFamily(Family):
    kind = "finite"

    def __init__(self, elements):
        self.elements = tuple(dict.fromkeys(elements))
        self._set = frozenset(self.elements)

    def member(self, m):
        return m in self._set

    def find_incompatible(self, m, exclude=frozenset()):
        return _first_witness(m, self.elements, exclude)

    def incident(self, p, near=None):
        v = p.value
        return [
            e
            for e in self.elements
            if e.left.value == v or e.right.value == v
        ]

    def to_json(self):
        from .jsonio import interval_to_json

        return {"kind": self.kind, "elements": [interval_to_json(e) for e in self.elements]}


class AllProjectivesFamily(Family):
    """Every projective: all intervals supported on a downset (-inf, p|,
    including the full line P_+inf."""

    kind = "all_projectives"

    def member(self, m):
        return m.left == NEG_INF_POINT

    def find_incompatible(self, m, exclude=frozenset()):
        # P_p is incompatible with m exactly when m.left <= p < m.right
        # (adjacency at m.left, crossing strictly inside).
        if m.left == NEG_INF_POINT:
            return None
        return _first_witness(
            m,
            (IntervalObject.proj_at(p) for p in self._points_in(m, len(exclude) + 2)),
            exclude,
        )

    def _points_in(self, m, count):
        pts = [m.left]
        if m.left.side == MINUS:
            pts.append(m.left.flip())
        lv = m.left.value.q
        if m.right.value.is_finite:
            rv = m.right.value.q
            step = rv - lv
            k = 1
            while len(pts) < count + 2 and k < count + 8:
                x = lv + step / (1 << k)
                if lv < x < rv:
                    pts.append(DoubledPoint.at(x, MINUS))
                    pts.append(DoubledPoint.at(x, PLUS))
                k += 1
        else:
            for k in range(1, count + 3):
                pts.append(DoubledPoint.at(lv + k, MINUS))
                pts.append(DoubledPoint.at(lv + k, PLUS))
        return [p for p in pts if m.left <= p < m.right]

    def incident(self, p, near=None):
        if p.value.is_finite:
            return [
                IntervalObject.proj_open(p.value.q),
                IntervalObject.proj_closed(p.value.q),
            ]
        return [IntervalObject.full_line()]

    def to_json(self):
        return {"kind": self.kind}


class DyadicRungFamily(Family):
    """All open dyadic subintervals of (lo, hi) at every level, all
    singletons at non-dyadic points of (lo, hi), and optionally the open
    projective P_hi) (the integer-rung shape).

    The rung projective is the open one: the closed P_hi is adjacent to the
    next rung's elements starting at hi, so it could never sit in the same
    compatible set.
    """

    kind = "dyadic_rung"

    def __init__(self, lo, hi, include_right_projective=False):
        self.lo = Fraction(lo)
        self.hi = Fraction(hi)
        if not self.lo < self.hi:
            raise ValueError("need lo < hi")
        self.width = self.hi - self.lo
        self.include_right_projective = include_right_projective

    def _t(self, q: Fraction) -> Fraction:
        return (q - self.lo) / self.width

    def _iv(self, t1: Fraction, t2: Fraction):
        if not (0 <= t1 < t2 <= 1):
            return None
        return IntervalObject.open(self.lo + t1 * self.width, self.lo + t2 * self.width)

    def _projective(self):
        return IntervalObject.proj_open(self.hi)

    def member(self, m):
        if self.include_right_projective and m == self._projective():
            return True
        if not (m.left.value.is_finite and m.right.value.is_finite):
            return False
        if m.is_singleton:
            x = m.left.value.q
            return self.lo < x < self.hi and not is_dyadic(self._t(x))
        if m.left.side != PLUS or m.right.side != MINUS:
            return False
        c, d = m.left.value.q, m.right.value.q
        if not (self.lo <= c < d <= self.hi):
            return False
        t1, t2 = self._t(c), self._t(d)
        if not (is_dyadic(t1) and is_dyadic(t2)):
            return False
        delta = t2 - t1
        if delta.numerator != 1 or not is_power_of_two(delta.denominator):
            return False
        return (t1 * delta.denominator).denominator == 1

    def _straddle(self, t: Fraction, level: int):
        """The level-`level` grid interval strictly containing t, if any."""
        scale = 1 << level
        j = (t * scale).__floor__()
        t1 = Fraction(j, scale)
        t2 = Fraction(j + 1, scale)
        if t1 < t < t2:
            return self._iv(t1, t2)
        return None

    def _local_candidates(self, m, depth):
        """Witness candidates, cheapest first; lazily generated so the
        usual first-hit kill stays inexpensive."""
        tvals = []
        for e in (m.left, m.right):
            if e.value.is_finite:
                t = self._t(e.value.q)
                if 0 <= t <= 1:
                    tvals.append(t)
        # adjacency-grade candidates first
        for t in tvals:
            if 0 < t < 1:
                if is_dyadic(t):
                    d0 = Fraction(1, 1 << dyadic_level(t))
                    yield self._iv(t - d0, t)
                    yield self._iv(t, t + d0)
                    yield self._iv(t - d0, t + d0)  # parent straddle
                else:
                    yield IntervalObject.singleton(self.lo + t * self.width)
        yield self._iv(Fraction(0), Fraction(1))
        if self.include_right_projective:
            yield self._projective()
        for t in tvals:
            if t == 0:
                for k in range(depth + 1):
                    yield self._iv(Fraction(0), Fraction(1, 1 << k))
                continue
            if t == 1:
                for k in range(depth + 1):
                    yield self._iv(1 - Fraction(1, 1 << k), Fraction(1))
                continue
            if is_dyadic(t):
                d0 = Fraction(1, 1 << dyadic_level(t))
                for k in range(1, depth + 1):
                    dk = d0 / (1 << k)
                    yield self._iv(t - dk, t)
                    yield self._iv(t, t + dk)
            else:
                gaps = [g for g in (t, 1 - t) if g > 0]
                gaps.extend(abs(other - t) for other in tvals if other != t)
                min_gap = min(gaps)
                l_tight = 0
                while Fraction(1, 1 << l_tight) >= min_gap:
                    l_tight += 1
                for level in {0, 1, *range(l_tight, l_tight + depth + 1)}:
                    yield self._straddle(t, level)

    def find_incompatible(self, m, exclude=frozenset()):
        depth = 3 + len(exclude)
        return _first_witness(m, self._local_candidates(m, depth), exclude)

    def incident(self, p, near=None):
        if not p.value.is_finite:
            if p.value == POS_INF_POINT.value and self.include_right_projective:
                return [self._projective()]
            return []
        c = p.value.q
        if not self.lo <= c <= self.hi:
            return []
        t = self._t(c)
        out = [self._iv(Fraction(0), Fraction(1))]
        if self.include_right_projective and c == self.hi:
            out.append(self._projective())
        widths = set()
        if is_dyadic(t) and t not in (0, 1):
            widths.add(Fraction(1, 1 << dyadic_level(t)))
        if near is not None and near.left.value.is_finite and near.right.value.is_finite:
            wr = (near.right.value.q - near.left.value.q) / self.width
            for cand in (wr, wr / 2, wr * 2):
                if 0 < cand <= 1 and cand.numerator == 1 and is_power_of_two(cand.denominator):
                    widths.add(cand)
        if t == 0 or t == 1:
            widths.update({Fraction(1, 2), Fraction(1, 4)})
        for d in widths:
            half = d / 2
            for width in (d, half):
                if width > 0 and (t / width).denominator == 1:
                    out.append(self._iv(t - width, t))
                    out.append(self._iv(t, t + width))
        if is_dyadic(t) and 0 < t < 1:
            d0 = Fraction(1, 1 << dyadic_level(t))
            out.append(self._iv(t - d0, t + d0))
        elif 0 < t < 1:
            out.append(IntervalObject.singleton(c))
            for level in (0, 1, 2):
                out.append(self._straddle(t, level))
        return [x for x in out if x is not None]

    def to_json(self):
        return {
            "kind": self.kind,
            "lo": str(self.lo),
            "hi": str(self.hi),
            "includeRightProjective": self.include_right_projective,
        }


class SingletonCofamily(Family):
    """Singletons at the non-dyadic points of (lo, hi)."""

    kind = "singleton_cofamily"

    def __init__(self, lo, hi):
        self.lo = Fraction(lo)
        self.hi = Fraction(hi)
        self.width = self.hi - self.lo

    def _valid(self, x: Fraction) -> bool:
        return self.lo < x < self.hi and not is_dyadic((x - self.lo) / self.width)

    def member(self, m):
        return m.is_singleton and m.left.value.is_finite and self._valid(m.left.value.q)

    def find_incompatible(self, m, exclude=frozenset()):
        cands = []
        if m.left.side == PLUS and m.left.value.is_finite and self._valid(m.left.value.q):
            cands.append(IntervalObject.singleton(m.left.value.q))
        if m.right.side == MINUS and m.right.value.is_finite and self._valid(m.right.value.q):
            cands.append(IntervalObject.singleton(m.right.value.q))
        return _first_witness(m, cands, exclude)

    def incident(self, p, near=None):
        if p.value.is_finite and self._valid(p.value.q):
            return [IntervalObject.singleton(p.value.q)]
        return []

    def to_json(self):
        return {"kind": self.kind, "lo": str(self.lo), "hi": str(self.hi)}


class CofiniteSingletonsFamily(Family):
    """Singletons at every finite value except a finite excluded list."""

    kind = "cofinite_singletons"

    def __init__(self, excluded):
        self.excluded = frozenset(Fraction(x) for x in excluded)

    def member(self, m):
        return m.is_singleton and m.left.value.is_finite and m.left.value.q not in self.excluded

    def find_incompatible(self, m, exclude=frozenset()):
        cands = []
        if m.left.side == PLUS and m.left.value.is_finite and m.left.value.q not in self.excluded:
            cands.append(IntervalObject.singleton(m.left.value.q))
        if m.right.side == MINUS and m.right.value.is_finite and m.right.value.q not in self.excluded:
            cands.append(IntervalObject.singleton(m.right.value.q))
        return _first_witness(m, cands, exclude)

    def incident(self, p, near=None):
        if p.value.is_finite and p.value.q not in self.excluded:
            return [IntervalObject.singleton(p.value.q)]
        return []

    def to_json(self):
        return {"kind": self.kind, "excluded": [str(x) for x in sorted(self.excluded)]}


@dataclass(frozen=True)
class IntegerRay:
    """A half-line of integers (op in {'<', '<=', '>', '>='} against bound)
    or all of Z (op 'all')."""

    op: str
    bound: int = 0

    def __contains__(self, i: int) -> bool:
        if self.op == "all":
            return True
        if self.op == "<":
            return i < self.bound
        if self.op == "<=":
            return i <= self.bound
        if self.op == ">":
            return i > self.bound
        return i >= self.bound

    @property
    def edge(self) -> int:
        """The extreme member adjacent to the bound."""
        if self.op == "<":
            return self.bound - 1
        if self.op == ">":
            return self.bound + 1
        return self.bound

    @property
    def direction(self) -> int:
        """-1 if the ray extends downward, +1 upward."""
        return -1 if self.op in ("<", "<=") else 1

    def edge_reps(self, k: int) -> list[int]:
        if self.op == "all":
            return [j // 2 if j % 2 == 0 else -(j // 2) - 1 for j in range(k)]
        return [self.edge + self.direction * j for j in range(k)]

    def near(self, i: int, k: int) -> list[int]:
        return [j for j in range(i - k, i + k + 1) if j in self]

    def to_json(self):
        return {"op": self.op, "bound": self.bound}


LEFT = "LEFT"
RIGHT = "RIGHT"


class FanFamily(Family):
    """Intervals sharing one fixed doubled endpoint (the apex), the other
    endpoint running over ladder points with index in an integer ray.

    side LEFT:  { M_(a_i, apex) : i in ray }   (apex is the right end)
    side RIGHT: { M_(apex, a_i) : i in ray }   (apex is the left end)
    """

    kind = "fan"

    def __init__(self, apex: DoubledPoint, ladder: Ladder, ray: IntegerRay, side: str):
        self.apex = apex
        self.ladder = ladder
        self.ray = ray
        self.side = side

    def element(self, i: int):
        v = DoubledPoint.at(self.ladder.value(i), PLUS if self.side == LEFT else MINUS)
        try:
            if self.side == LEFT:
                return IntervalObject(v, self.apex)
            return IntervalObject(self.apex, v)
        except ValueError:
            return None

    def member(self, m):
        if self.side == LEFT:
            fixed, run = m.right, m.left
            want_side = PLUS
        else:
            fixed, run = m.left, m.right
            want_side = MINUS
        if fixed != self.apex or run.side != want_side or not run.value.is_finite:
            return False
        i = self.ladder.index_of(run.value.q)
        return i is not None and i in self.ray

    def _candidate_indices(self, m, k):
        idxs = list(self.ray.edge_reps(k))
        for e in (m.left, m.right):
            if not e.value.is_finite:
                continue
            c = e.value.q
            exact = self.ladder.index_of(c)
            if exact is not None:
                idxs.extend(self.ray.near(exact, k))
            loc = self.ladder.locate(c)
            if loc is not OUTSIDE:
                idxs.extend(self.ray.near(loc, k))
                idxs.extend(self.ray.near(loc + 1, k))
        return idxs

    def find_incompatible(self, m, exclude=frozenset()):
        k = 3 + len(exclude)
        cands = (self.element(i) for i in dict.fromkeys(self._candidate_indices(m, k)))
        return _first_witness(m, cands, exclude)

    def incident(self, p, near=None):
        out = []
        if p.value == self.apex.value:
            out.extend(self.element(i) for i in self.ray.edge_reps(3))
        if p.value.is_finite:
            exact = self.ladder.index_of(p.value.q)
            if exact is not None:
                out.extend(self.element(i) for i in self.ray.near(exact, 2))
        return [x for x in out if x is not None]

    def to_json(self):
        from .jsonio import point_to_json

        return {
            "kind": self.kind,
            "apex": point_to_json(self.apex),
            "ray": self.ray.to_json(),
            "side": self.side,
        }


def _int_interval_reps(lo_pt, hi_pt, anchors, k):
    """Representatives of an integer interval [lo_pt, hi_pt] near its ends
    and near the given anchor values."""
    if lo_pt is not None and hi_pt is not None and lo_pt > hi_pt:
        return []
    out = []
    ends = list(anchors)
    if lo_pt is not None:
        ends.append(lo_pt)
    if hi_pt is not None:
        ends.append(hi_pt)
    for e in ends:
        for j in range(e - k, e + k + 1):
            if (lo_pt is None or j >= lo_pt) and (hi_pt is None or j <= hi_pt):
                out.append(j)
    return out


class LadderRungsFamily(Family):
    """The union of the dyadic rung families over every ladder rung
    (a_i, a_{i+1}), generated lazily by index."""

    kind = "ladder_rungs"

    def __init__(self, ladder: Ladder):
        self.ladder = ladder
        self._cache: dict[int, DyadicRungFamily] = {}

    def rung(self, i: int) -> DyadicRungFamily:
        fam = self._cache.get(i)
        if fam is None:
            fam = DyadicRungFamily(self.ladder.value(i), self.ladder.value(i + 1))
            if len(self._cache) > 512:
                self._cache.clear()
            self._cache[i] = fam
        return fam

    def _rungs_near(self, m):
        idxs = set()
        for e in (m.left, m.right):
            if not e.value.is_finite:
                continue
            loc = self.ladder.locate(e.value.q)
            if loc is not OUTSIDE:
                idxs.update((loc - 1, loc, loc + 1))
        return sorted(idxs)

    def member(self, m):
        if not m.left.value.is_finite:
            return False
        loc = self.ladder.locate(m.left.value.q)
        if loc is OUTSIDE:
            return False
        return any(self.rung(i).member(m) for i in (loc - 1, loc))

    def find_incompatible(self, m, exclude=frozenset()):
        for i in self._rungs_near(m):
            w = self.rung(i).find_incompatible(m, exclude)
            if w is not None:
                return w
        return None

    def incident(self, p, near=None):
        out = []
        if p.value.is_finite:
            loc = self.ladder.locate(p.value.q)
            if loc is not OUTSIDE:
                for i in (loc - 1, loc, loc + 1):
                    out.extend(self.rung(i).incident(p, near))
        return out

    def to_json(self):
        return {"kind": self.kind}


class IntegerRungsFamily(Family):
    """The integer rung families T_i = (dyadics of (i, i+1), their
    singletons, and P_{i+1}) for i < lo or i >= hi."""

    kind = "integer_rungs"

    def __init__(self, lo: int, hi: int):
        self.lo = lo
        self.hi = hi
        self._cache: dict[int, DyadicRungFamily] = {}

    def _valid(self, i: int) -> bool:
        return i < self.lo or i >= self.hi

    def rung(self, i: int) -> DyadicRungFamily:
        fam = self._cache.get(i)
        if fam is None:
            fam = DyadicRungFamily(i, i + 1, include_right_projective=True)
            if len(self._cache) > 512:
                self._cache.clear()
            self._cache[i] = fam
        return fam

    def _proj_valid(self, j: int) -> bool:
        return self._valid(j - 1)

    def member(self, m):
        if m.left == NEG_INF_POINT:
            r = m.right
            return (
                r.side == MINUS
                and r.value.is_finite
                and r.value.q.denominator == 1
                and self._proj_valid(int(r.value.q))
            )
        if not m.left.value.is_finite:
            return False
        i = (m.left.value.q).__floor__()
        return self._valid(i) and self.rung(i).member(m)

    def _rungs_near(self, m):
        idxs = set()
        for e in (m.left, m.right):
            if not e.value.is_finite:
                continue
            f = e.value.q.__floor__()
            idxs.update(i for i in (f - 1, f, f + 1) if self._valid(i))
        return sorted(idxs)

    def _proj_candidates(self, m, k):
        if m.left == NEG_INF_POINT or not m.left.value.is_finite:
            return []
        anchors = [m.left.value.q.__floor__(), self.lo, self.hi + 1]
        j_hi = None
        if m.right.value.is_finite:
            anchors.append(m.right.value.q.__floor__() + 1)
            j_hi = anchors[-1]
        reps = _int_interval_reps(m.left.value.q.__floor__() - 1, j_hi, anchors, k)
        return [IntervalObject.proj_open(j) for j in reps if self._proj_valid(j)]

    def find_incompatible(self, m, exclude=frozenset()):
        k = 2 + len(exclude)
        w = _first_witness(m, self._proj_candidates(m, k), exclude)
        if w is not None:
            return w
        for i in self._rungs_near(m):
            w = self.rung(i).find_incompatible(m, exclude)
            if w is not None:
                return w
        return None

    def incident(self, p, near=None):
        out = []
        if p.value.is_finite:
            f = p.value.q.__floor__()
            for i in (f - 1, f, f + 1):
                if self._valid(i):
                    out.extend(self.rung(i).incident(p, near))
            if p.value.q.denominator == 1 and self._proj_valid(int(p.value.q)):
                out.append(IntervalObject.proj_open(int(p.value.q)))
        return out

    def to_json(self):
        return {"kind": self.kind, "lo": self.lo, "hi": self.hi}


class IntegerProjectivesFamily(Family):
    """{ P_j) : j integer, j <= lo or j >= hi } (the open projectives; see
    DyadicRungFamily for why the closed ones are excluded)."""

    kind = "integer_projectives"

    def __init__(self, lo: int, hi: int):
        self.lo = lo
        self.hi = hi

    def _valid(self, j: int) -> bool:
        return j <= self.lo or j >= self.hi

    def member(self, m):
        if m.left != NEG_INF_POINT or m.right.side != MINUS or not m.right.value.is_finite:
            return False
        q = m.right.value.q
        return q.denominator == 1 and self._valid(int(q))

    def find_incompatible(self, m, exclude=frozenset()):
        if m.left == NEG_INF_POINT or not m.left.value.is_finite:
            return None
        k = 2 + len(exclude)
        anchors = [m.left.value.q.__floor__(), self.lo, self.hi]
        j_hi = None
        if m.right.value.is_finite:
            anchors.append(m.right.value.q.__floor__() + 1)
            j_hi = anchors[-1]
        reps = _int_interval_reps(m.left.value.q.__floor__() - 1, j_hi, anchors, k)
        cands = [IntervalObject.proj_open(j) for j in reps if self._valid(j)]
        return _first_witness(m, cands, exclude)

    def incident(self, p, near=None):
        if p.value.is_finite and p.value.q.denominator == 1 and self._valid(int(p.value.q)):
            return [IntervalObject.proj_open(int(p.value.q))]
        return []

    def to_json(self):
        return {"kind": self.kind, "lo": self.lo, "hi": self.hi}


FAMILY_KINDS = {
    cls.kind: cls
    for cls in (
        FiniteFamily,
        AllProjectivesFamily,
        DyadicRungFamily,
        SingletonCofamily,
        CofiniteSingletonsFamily,
        FanFamily,
        LadderRungsFamily,
        IntegerRungsFamily,
        IntegerProjectivesFamily,
    )
}
