"""Mutation on symbolically described clusters.

Candidate replacements are generated locally: the exchange rectangle's
side corners lie in the cluster and share endpoints with the leaving and
entering objects, so the entering object's endpoints occur among the
endpoints of elements incident to the leaving object (or its side-flips,
or the infinities).  The unique-replacement theorem then shows up as an
executable assertion: two survivors is an engine bug, not a result.
"""

from __future__ import annotations

from dataclasses import dataclass

from .compat import V_SUB, e_compatible_geometric, exchange_middle, ext_direction
from .clusters import ClusterDescription
from .line import IntervalObject, NEG_INF_POINT, POS_INF_POINT


class NotMutable(Exception):
    """No replacement keeps the set compatible (a legal state: the cluster
    theory is not tilting)."""


class AmbiguousExchange(Exception):
    """More than one replacement survived filtering; forbidden by the
    uniqueness theorem, so it signals a predicate bug."""


class NotAMember(Exception):
    pass


@dataclass
class MutationResult:
    removed: IntervalObject
    added: IntervalObject
    middle: tuple[IntervalObject, ...]
    new_cluster: ClusterDescription

    def to_json(self) -> dict:
        from .jsonio import interval_to_json

        return {
            "schemaVersion": 1,
            "removed": interval_to_json(self.removed),
            "added": interval_to_json(self.added),
            "middle": [interval_to_json(m) for m in self.middle],
            "newCluster": self.new_cluster.to_json(),
        }


def candidate_replacements(desc: ClusterDescription, v: IntervalObject) -> list[IntervalObject]:
    """All intervals over the local doubled-point pool that are
    E-incompatible with v.  The pool: endpoints of elements incident to
    v's endpoints, v's own endpoints, their side-flips, and the two
    infinities."""
    if not desc.member(v):
        raise NotAMember(f"{v} is not in the cluster")
    points = {v.left, v.right, NEG_INF_POINT, POS_INF_POINT}
    for p in (v.left, v.right):
        f = p.flip()
        if f is not None:
            points.add(f)
        for e in desc.incident(p, near=v):
            if e != v:
                points.add(e.left)
                points.add(e.right)
    pts = sorted(points)
    out = []
    for i, p in enumerate(pts):
        for q in pts[i + 1 :]:
            try:
                w = IntervalObject(p, q)
            except ValueError:
                continue
            if w != v and not e_compatible_geometric(v, w):
                out.append(w)
    return out


def _middles(v: IntervalObject, w: IntervalObject) -> tuple[IntervalObject, ...]:
    sub, quot = (v, w) if ext_direction(v, w) == V_SUB else (w, v)
    if sub.right == quot.left:
        return (IntervalObject(sub.left, quot.right),)
    return (IntervalObject(sub.left, quot.right), IntervalObject(quot.left, sub.right))


def mutate(desc: ClusterDescription, v: IntervalObject) -> MutationResult:
    """Replace v by the unique W with {v, W} incompatible and T minus v
    plus W compatible; the exchange middle comes with it.

    Candidates are pre-filtered by the rectangle-inclusion property: the
    exchange middles of the true replacement already sit in the cluster,
    so candidates whose middles are non-members cannot survive.
    """
    exclude = frozenset((v,))
    survivors = []
    for w in candidate_replacements(desc, v):
        if not all(u == v or desc.member(u) for u in _middles(v, w)):
            continue
        if desc.find_incompatible(w, exclude=exclude) is None:
            survivors.append(w)
    if not survivors:
        raise NotMutable(f"{v} has no E-replacement in this cluster")
    if len(survivors) > 1:
        raise AmbiguousExchange(f"multiple replacements for {v}: {survivors}")
    w = survivors[0]
    if ext_direction(v, w) == V_SUB:
        witness = exchange_middle(v, w)
    else:
        witness = exchange_middle(w, v)
    return MutationResult(
        removed=v,
        added=w,
        middle=witness.middle,
        new_cluster=desc.with_exchange(v, w),
    )


def is_mutable(desc: ClusterDescription, v: IntervalObject) -> bool:
    try:
        mutate(desc, v)
        return True
    except NotMutable:
        return False
