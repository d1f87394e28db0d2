"""Symbolic cluster descriptions: membership, witness search, the named
builders (projectives, the convergent-ladder set and its A_n completion),
and the randomized window verifier.

A description is a list of families plus a finite add/remove diff, so
repeated mutation never materializes an infinite set.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .compat import e_compatible_geometric
from .families import (
    LEFT,
    RIGHT,
    AllProjectivesFamily,
    Family,
    FanFamily,
    FiniteFamily,
    IntegerProjectivesFamily,
    IntegerRay,
    IntegerRungsFamily,
    LadderRungsFamily,
)
from .line import (
    MINUS,
    NEG_INF_POINT,
    OUTSIDE,
    PLUS,
    POS_INF_POINT,
    DefaultLadder,
    DoubledPoint,
    IntervalObject,
    Ladder,
)


class ClusterDescription:
    """A finite list of symbolic families describing a (possibly
    uncountable) pairwise E-compatible set, plus a finite mutation diff."""

    def __init__(self, families, ladder: Ladder, added=(), removed=frozenset()):
        self.families: tuple[Family, ...] = tuple(families)
        self.ladder = ladder
        self.added: tuple[IntervalObject, ...] = tuple(added)
        self.removed: frozenset[IntervalObject] = frozenset(removed)
        self._added_set = frozenset(self.added)
        self._witness_cache: dict = {}

    def member(self, m: IntervalObject) -> bool:
        if m in self._added_set:
            return True
        if m in self.removed:
            return False
        return any(f.member(m) for f in self.families)

    def find_incompatible(self, m: IntervalObject, exclude=frozenset()):
        """Some described element incompatible with m (None if all are
        compatible).  `exclude` removes finitely many elements from the
        search, which is how mutation probes T minus the leaving object."""
        exclude = frozenset(exclude)
        key = (m, exclude)
        if key in self._witness_cache:
            return self._witness_cache[key]
        result = None
        for w in self.added:
            if w not in exclude and not e_compatible_geometric(m, w):
                result = w
                break
        if result is None:
            ex = self.removed | exclude if exclude else self.removed
            for f in self.families:
                w = f.find_incompatible(m, ex)
                if w is not None:
                    result = w
                    break
        if len(self._witness_cache) > 200_000:
            self._witness_cache.clear()
        self._witness_cache[key] = result
        return result

    def incident(self, p: DoubledPoint, near=None) -> list[IntervalObject]:
        out = []
        for f in self.families:
            out.extend(x for x in f.incident(p, near) if x not in self.removed)
        for a in self.added:
            if a.left.value == p.value or a.right.value == p.value:
                out.append(a)
        return out

    def with_exchange(self, removed_elt: IntervalObject, added_elt: IntervalObject):
        """The description after one mutation, with the diff normalized."""
        added = tuple(a for a in self.added if a != removed_elt)
        removed = set(self.removed)
        if len(added) == len(self.added):
            removed.add(removed_elt)
        if added_elt in removed:
            removed.discard(added_elt)
        elif not any(f.member(added_elt) for f in self.families):
            added = added + (added_elt,)
        return ClusterDescription(self.families, self.ladder, added, frozenset(removed))

    def to_json(self) -> dict:
        from .jsonio import interval_to_json

        return {
            "schemaVersion": 1,
            "ladder": self.ladder.to_json(),
            "families": [f.to_json() for f in self.families],
            "added": [interval_to_json(a) for a in self.added],
            "removed": [interval_to_json(r) for r in sorted(self.removed)],
        }


# ---------------------------------------------------------------------------
# Named builders
# ---------------------------------------------------------------------------

def build_projective_cluster(ladder: Ladder | None = None) -> ClusterDescription:
    """The cluster of all projectives (every downset, plus the full line)."""
    return ClusterDescription([AllProjectivesFamily()], ladder or DefaultLadder())


def _integer_limits(ladder: Ladder) -> tuple[int, int]:
    lo, hi = ladder.lower, ladder.upper
    if lo.denominator != 1 or hi.denominator != 1:
        raise ValueError("ladder limits must be integers for this construction")
    return int(lo), int(hi)


def build_t_infinity(ladder: Ladder | None = None) -> ClusterDescription:
    """The convergent-ladder compatible set: dyadic rungs over every ladder
    step, integer rungs outside the limit interval, the open projectives at
    the outside integers, the limit interval itself, and the full line."""
    ladder = ladder or DefaultLadder()
    lo, hi = _integer_limits(ladder)
    fams = [
        LadderRungsFamily(ladder),
        IntegerRungsFamily(lo, hi),
        IntegerProjectivesFamily(lo, hi),
        FiniteFamily(
            [IntervalObject.open(ladder.lower, ladder.upper), IntervalObject.full_line()]
        ),
    ]
    return ClusterDescription(fams, ladder)


def build_t_n(ladder: Ladder | None = None, n: int = 1) -> ClusterDescription:
    """The A_n completion: the convergent-ladder set plus the two fans at
    a_1 and the limit-to-a_1 intervals.  Together with the n embedded
    diagonals of a triangulation this is a cluster."""
    if n < 1:
        raise ValueError("need n >= 1")
    ladder = ladder or DefaultLadder()
    base = build_t_infinity(ladder)
    a1 = ladder.value(1)
    fams = base.families + (
        FanFamily(DoubledPoint.at(a1, MINUS), ladder, IntegerRay("<", 0), LEFT),
        FanFamily(DoubledPoint.at(a1, PLUS), ladder, IntegerRay(">=", n + 3), RIGHT),
        FiniteFamily(
            [
                IntervalObject.open(ladder.lower, a1),
                IntervalObject.open(a1, ladder.upper),
            ]
        ),
    )
    return ClusterDescription(fams, ladder)


# ---------------------------------------------------------------------------
# Window verification
# ---------------------------------------------------------------------------

@dataclass
class VerifyReport:
    checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def record(self, candidate, reason):
        self.failures.append((candidate, reason))

    def summary(self) -> str:
        status = "ok" if self.ok else "FAIL"
        return f"{status}: {self.checked} candidates, {len(self.failures)} failures"


def critical_values(
    ladder: Ladder,
    window: tuple[Fraction, Fraction],
    depth: int = 6,
    index_band: int = 18,
) -> list[Fraction]:
    """The endpoint pool for window verification: ladder points, dyadic
    refinements (to `depth`), integers, integer-rung dyadics, midpoints and
    thirds of consecutive ladder points."""
    lo, hi = Fraction(window[0]), Fraction(window[1])
    pool: set[Fraction] = set()

    def keep(x: Fraction):
        if lo <= x <= hi:
            pool.add(x)

    ladder_idx = [i for i in range(-index_band, index_band + 1)]
    lvals = {}
    for i in ladder_idx:
        v = ladder.value(i)
        lvals[i] = v
        keep(v)
    keep(ladder.lower)
    keep(ladder.upper)
    for i in ladder_idx[:-1]:
        a, b = lvals[i], lvals[i + 1]
        keep((a + b) / 2)
        keep((2 * a + b) / 3)
        for lvl in range(1, min(depth, 4) + 1):
            for j in range(1, 1 << lvl, 2):
                keep(a + Fraction(j, 1 << lvl) * (b - a))
    n_lo = lo.__floor__() - 1
    n_hi = hi.__ceil__() + 1
    span = n_hi - n_lo
    step = max(1, span // 64)
    for n in range(n_lo, n_hi + 1, step):
        keep(Fraction(n))
        if span <= 40:
            for lvl in range(1, min(depth, 4) + 1):
                for j in range(1, 1 << lvl, 2):
                    keep(n + Fraction(j, 1 << lvl))
            keep(n + Fraction(1, 3))
    return sorted(pool)


def _targeted_candidates(pool, ladder, index_band=8, span=4):
    """Deterministic probes: singletons at pool points, all four closures
    between consecutive pool points, and every ladder-point pair within
    `span` rungs (open), plus projective shapes at pool points."""
    out = []
    for x in pool:
        out.append(IntervalObject.singleton(x))
    for c, d in zip(pool, pool[1:]):
        out.append(IntervalObject.open(c, d))
        out.append(IntervalObject.closed(c, d))
        out.append(IntervalObject.half_open_left(c, d))
        out.append(IntervalObject.half_open_right(c, d))
    lvals = [ladder.value(i) for i in range(-index_band, index_band + 1)]
    lset = [v for v in lvals if pool and pool[0] <= v <= pool[-1]]
    extremes = [x for x in (ladder.lower, ladder.upper) if pool and pool[0] <= x <= pool[-1]]
    lad_pts = sorted(set(lset + extremes))
    for i, c in enumerate(lad_pts):
        for d in lad_pts[i + 1 : i + 1 + span]:
            out.append(IntervalObject.open(c, d))
            out.append(IntervalObject.half_open_left(c, d))
    for x in lad_pts:
        if ladder.lower < x:
            out.append(IntervalObject.open(ladder.lower, x))
        if x < ladder.upper:
            out.append(IntervalObject.open(x, ladder.upper))
    for x in pool[:: max(1, len(pool) // 40)]:
        out.append(IntervalObject.proj_closed(x))
        out.append(IntervalObject.proj_open(x))
        out.append(IntervalObject.inj_open(x))
    return out


def _random_candidate(rng: random.Random, pool):
    kind = rng.randrange(8)
    if kind == 0:
        return IntervalObject.singleton(rng.choice(pool))
    if kind == 1:
        c = rng.choice(pool)
        return IntervalObject.proj_open(c) if rng.randrange(2) else IntervalObject.proj_closed(c)
    if kind == 2:
        c = rng.choice(pool)
        side = PLUS if rng.randrange(2) else MINUS
        return IntervalObject(DoubledPoint.at(c, side), POS_INF_POINT)
    if kind == 3:
        return IntervalObject.full_line()
    i = rng.randrange(len(pool) - 1)
    j = rng.randrange(i + 1, len(pool))
    c, d = pool[i], pool[j]
    ls = MINUS if rng.randrange(2) else PLUS
    rs = MINUS if rng.randrange(2) else PLUS
    return IntervalObject(DoubledPoint.at(c, ls), DoubledPoint.at(d, rs))


def verify_window(
    desc: ClusterDescription,
    window: tuple[Fraction, Fraction],
    budget: int = 1000,
    seed: int = 0,
    targeted: bool = True,
    check_witness_soundness: bool = True,
) -> VerifyReport:
    """Maximality spot-check: every candidate interval with endpoints in
    the critical set must be a member or have an incompatible witness.

    This is a randomized, critical-point check, not a proof; the critical
    set mirrors the endpoint case analysis of the construction proofs.
    """
    pool = critical_values(desc.ladder, window)
    report = VerifyReport()
    if len(pool) < 2:
        return report
    rng = random.Random(seed)
    candidates = []
    if targeted:
        candidates.extend(_targeted_candidates(pool, desc.ladder))
    while len(candidates) < budget:
        candidates.append(_random_candidate(rng, pool))
    for m in candidates[: max(budget, len(candidates))]:
        report.checked += 1
        if desc.member(m):
            continue
        w = desc.find_incompatible(m)
        if w is None:
            report.record(m, "compatible non-member")
        elif check_witness_soundness:
            if not desc.member(w):
                report.record(m, f"witness {w} is not a member")
            elif e_compatible_geometric(m, w):
                report.record(m, f"witness {w} is compatible")
    return report


def descriptions_equal(
    t1: ClusterDescription,
    t2: ClusterDescription,
    probes,
) -> bool:
    """Intensional descriptions compare by membership agreement on a probe
    set (they have no canonical normal form)."""
    return all(t1.member(m) == t2.member(m) for m in probes)


def probe_set(descs, window, per_pair=2, extra=()):
    """Membership probes for description equality: the diff elements of
    each description, targeted candidates over the window, and extras."""
    probes = list(extra)
    for d in descs:
        probes.extend(d.added)
        probes.extend(d.removed)
    ladder = descs[0].ladder
    pool = critical_values(ladder, window, depth=2, index_band=10)
    probes.extend(_targeted_candidates(pool, ladder, index_band=10, span=per_pair))
    return probes
