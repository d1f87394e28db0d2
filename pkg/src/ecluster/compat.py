"""Ext detection and E-compatibility for the straight-descending orientation.

Two independent routes to the same predicate:

* Euler pairing on g-vectors.  For straight-descending, the minimal
  projective presentation of an interval object is indexed by its two
  doubled endpoints, and Hom between projectives reduces to a single
  doubled-point comparison.
* Crossing/adjacency geometry of the doubled endpoints.

Both are pure order computations, so they apply verbatim to any line model
whose coordinates are totally ordered (the C_pi bridge reuses them on
tangent-scale coordinates).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .line import DoubledPoint, IntervalObject

NONE = "NONE"
V_SUB = "V_SUB"
W_SUB = "W_SUB"


class NotAnExtension(Exception):
    """Raised when an exchange middle is requested for a compatible pair."""


@dataclass(frozen=True)
class GVector:
    """The index [P_V] - [Q_V] of an interval object.

    top is the class of the projective cover P_V (cut at the right
    endpoint), bottom the class of the syzygy Q_V (cut at the left
    endpoint); bottom < top for every nonzero object.
    """

    top: DoubledPoint
    bottom: DoubledPoint


def g_vector(v: IntervalObject) -> GVector:
    return GVector(top=v.right, bottom=v.left)


def hom_proj_nonzero(p: DoubledPoint, q: DoubledPoint) -> bool:
    """Hom(P_p, P_q) != 0, i.e. the downset cut at q includes into the one
    cut at p."""
    return q <= p


def euler_pairing(g: GVector, h: GVector) -> int:
    """<g, h> for g-vectors, expanded over the four projective Hom spaces."""
    return (
        int(h.top <= g.top)
        - int(h.bottom <= g.top)
        - int(h.top <= g.bottom)
        + int(h.bottom <= g.bottom)
    )


def e_compatible_euler(v: IntervalObject, w: IntervalObject) -> bool:
    """E-compatibility: the Euler pairing is >= 0 in both orders."""
    g, h = g_vector(v), g_vector(w)
    return euler_pairing(g, h) >= 0 and euler_pairing(h, g) >= 0


def _crosses(v: IntervalObject, w: IntervalObject) -> bool:
    return v.left < w.left and w.left < v.right and v.right < w.right


def e_compatible_geometric(v: IntervalObject, w: IntervalObject) -> bool:
    """E-compatibility read off the doubled endpoints: incompatible exactly
    when the intervals cross (strict interleaving in doubled order) or are
    adjacent (one's closed end meets the other's open end at the same
    doubled point)."""
    if v.right == w.left or w.right == v.left:
        return False
    return not (_crosses(v, w) or _crosses(w, v))


def ext_direction(v: IntervalObject, w: IntervalObject) -> str:
    """Which of v, w is the subobject of the unique nontrivial extension
    between them; NONE when they are compatible.

    Equal left endpoints never extend each other, so the subobject is
    always the interval with the strictly smaller left endpoint.
    """
    if e_compatible_geometric(v, w):
        return NONE
    if v.left < w.left:
        return V_SUB
    return W_SUB


@dataclass(frozen=True)
class ExtWitness:
    """A short exact sequence sub >-> middle ->> quotient, with the middle
    recorded as its 1 or 2 indecomposable summands."""

    sub: IntervalObject
    quotient: IntervalObject
    middle: tuple[IntervalObject, ...]

    def dimension_sound(self, samples: list[Fraction]) -> bool:
        """Pointwise dimension count: dim(sub) + dim(quotient) must equal
        the summed middle dimension at every sample."""
        for q in samples:
            lhs = int(self.sub.contains(q)) + int(self.quotient.contains(q))
            rhs = sum(int(m.contains(q)) for m in self.middle)
            if lhs != rhs:
                return False
        return True


def exchange_middle(sub: IntervalObject, quot: IntervalObject) -> ExtWitness:
    """The middle of the extension sub >-> E ->> quot.

    Crossing pairs give a complete rectangle (two summands); adjacent pairs
    give an almost complete rectangle (indecomposable middle).
    """
    direction = ext_direction(sub, quot)
    if direction == NONE:
        raise NotAnExtension(f"{sub} and {quot} are E-compatible")
    if direction != V_SUB:
        raise ValueError(f"{sub} is the quotient here, not the subobject")
    if sub.right == quot.left:
        middle = (IntervalObject(sub.left, quot.right),)
    else:
        middle = (
            IntervalObject(sub.left, quot.right),
            IntervalObject(quot.left, sub.right),
        )
    return ExtWitness(sub=sub, quotient=quot, middle=middle)


def is_degenerate(v: IntervalObject) -> bool:
    """Whether v sits on the AR-strip boundary: a singleton or the full
    line (second strip coordinate exactly +-pi/2 for the straight
    orientation).  These generate the null system killed by the
    localization onto the older continuous model."""
    if v.is_singleton:
        return True
    return not v.left.value.is_finite and not v.right.value.is_finite


def dimension_samples(*objs: IntervalObject, count: int = 100) -> list[Fraction]:
    """Sample points for pointwise dimension checks: every finite endpoint
    value, midpoints between consecutive ones, outward points, then a
    uniform fill until `count` points are present."""
    vals = sorted(
        {p.value.q for o in objs for p in (o.left, o.right) if p.value.is_finite}
    )
    if not vals:
        vals = [Fraction(0)]
    pts = set(vals)
    pts.add(vals[0] - 1)
    pts.add(vals[-1] + 1)
    for a, b in zip(vals, vals[1:]):
        pts.add((a + b) / 2)
    lo, hi = vals[0] - 1, vals[-1] + 1
    k = 1
    while len(pts) < count:
        pts.add(lo + Fraction(k, count + 1) * (hi - lo))
        k += 1
    return sorted(pts)
