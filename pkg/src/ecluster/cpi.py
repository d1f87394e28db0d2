"""The older continuous model: objects M(x,y) in a plane strip, their
compatibility, and the coordinate bijection onto interval objects.

All coordinates are stored in pi-units so the strip comparisons (e.g.
"x' < y + pi") are exact rational arithmetic.  The coordinate bijection is
kept symbolic on a "tangent line": the key t in [-1, 1] stands for
tan(t*pi/2), with t = -1 and t = 1 the infinities.  Since the key map is
an order isomorphism, the whole compatibility/mutation engine applies
verbatim to tangent-line interval objects.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .clusters import ClusterDescription
from .families import (
    RIGHT,
    AllProjectivesFamily,
    CofiniteSingletonsFamily,
    FanFamily,
    FiniteFamily,
    IntegerRay,
    LadderRungsFamily,
)
from .line import (
    MINUS,
    NEG_INF_POINT,
    PLUS,
    POS_INF_POINT,
    DoubledPoint,
    IntervalObject,
    Ladder,
    ScaledLadder,
)


class DomainError(Exception):
    pass


@dataclass(frozen=True)
class CPiObject:
    """A point M(x, y) of the strip |y - x| < pi, in pi-units."""

    x: Fraction
    y: Fraction

    def __post_init__(self):
        if not abs(self.y - self.x) < 1:
            raise DomainError(f"({self.x},{self.y}) is outside the strip")

    @staticmethod
    def of(x, y) -> "CPiObject":
        return CPiObject(Fraction(x), Fraction(y))

    @property
    def in_fundamental_domain(self) -> bool:
        return self.x >= 0 and self.y < 1

    def shift(self, n: int = 1) -> "CPiObject":
        """The suspension: (x, y) -> (y + 1, x + 1) in pi-units."""
        x, y = self.x, self.y
        step = 1 if n >= 0 else -1
        for _ in range(abs(n)):
            if step == 1:
                x, y = y + 1, x + 1
            else:
                x, y = y - 1, x - 1
        return CPiObject(x, y)

    def reduce(self) -> "CPiObject":
        """The representative in the fundamental domain x >= 0, y < 1."""
        cur = self
        for _ in range(10_000):
            if cur.in_fundamental_domain:
                return cur
            cur = cur.shift(1) if cur.x < 0 else cur.shift(-1)
        raise AssertionError(f"reduction of {self} did not terminate")

    def __repr__(self):
        return f"M({self.x},{self.y})"


def dpi_hom_nonzero(a: CPiObject, b: CPiObject, r: Fraction = Fraction(1)) -> bool:
    """Hom support in the strip model: nonzero iff x1 <= x2 < y1 + r and
    y1 <= y2 < x1 + r (half-open rectangle), r in pi-units."""
    r = Fraction(r)
    return a.x <= b.x < a.y + r and a.y <= b.y < a.x + r


def nr_incompatible(u: CPiObject, v: CPiObject) -> bool:
    """The older model's incompatibility (total Ext dimension 2), for
    fundamental-domain representatives: strict interleaving u.x < v.x <
    u.y + 1 with u.y < v.y, in either order."""
    return (u.x < v.x < u.y + 1 and u.y < v.y) or (v.x < u.x < v.y + 1 and v.y < u.y)


def _rect_strictly_inside(a: CPiObject, b: CPiObject) -> bool:
    """A full rectangle with lower-left a and upper-right b whose two side
    corners are strictly inside the strip."""
    if not (a.x < b.x and a.y < b.y):
        return False
    return abs(a.y - b.x) < 1 and abs(b.y - a.x) < 1


def nr_incompatible_direct(u: CPiObject, v: CPiObject) -> bool:
    """Incompatibility by rectangle search over shift offsets -2..2: a
    full rectangle gives extensions in both orders (dimension 2); a
    rectangle with a side corner on the boundary contributes only one
    extension, which compatibility tolerates."""
    for n in range(-2, 3):
        w = v.shift(n)
        if _rect_strictly_inside(u, w) or _rect_strictly_inside(w, u):
            return True
    return False


# ---------------------------------------------------------------------------
# The coordinate bijection (tangent-line keys)
# ---------------------------------------------------------------------------

def tan_point(key: Fraction, side: int) -> DoubledPoint:
    """The doubled tangent-line point for key t in [-1, 1]."""
    key = Fraction(key)
    if key <= -1:
        if key < -1:
            raise DomainError(f"key {key} below -1")
        return NEG_INF_POINT
    if key >= 1:
        if key > 1:
            raise DomainError(f"key {key} above 1")
        return POS_INF_POINT
    return DoubledPoint.at(key, side)


def point_key(p: DoubledPoint) -> Fraction:
    if p == NEG_INF_POINT:
        return Fraction(-1)
    if p == POS_INF_POINT:
        return Fraction(1)
    return p.value.q


def f_map_symbolic(u: CPiObject) -> IntervalObject:
    """The image interval, symbolically: left key x - 1, right key y, both
    ends open.  Exact; the order of keys matches the order of the real
    endpoints tan(key*pi/2)."""
    if not u.in_fundamental_domain:
        raise DomainError(f"{u} is not reduced")
    return IntervalObject(tan_point(u.x - 1, PLUS), tan_point(u.y, MINUS))


def f_inverse_symbolic(m: IntervalObject) -> CPiObject:
    """Inverse of the symbolic image map on open intervals."""
    return CPiObject(point_key(m.left) + 1, point_key(m.right))


def key_to_float(key: Fraction) -> float:
    if key <= -1:
        return float("-inf")
    if key >= 1:
        return float("inf")
    return math.tan(float(key) * math.pi / 2)


def f_map(u: CPiObject) -> tuple[float, float]:
    """Numeric endpoints (a, b) of the image, a = -inf when u.x = 0."""
    m = f_map_symbolic(u)
    return key_to_float(point_key(m.left)), key_to_float(point_key(m.right))


def f_inverse(a: float, b: float) -> CPiObject:
    """Numeric inverse: the strip point with x = 2*atan(a)/pi + 1 and
    y = 2*atan(b)/pi (pi-units).  a may be -inf; requires a < b."""
    if not a < b:
        raise DomainError(f"need a < b, got {a}, {b}")
    if b == float("inf"):
        raise DomainError("the right endpoint must be finite")
    x = 2 * math.atan(a) / math.pi + 1 if a != float("-inf") else 0.0
    y = 2 * math.atan(b) / math.pi
    return CPiObject(Fraction(x), Fraction(y))


# ---------------------------------------------------------------------------
# Oracles for supported older-model cluster descriptions
# ---------------------------------------------------------------------------

class NROracle:
    """A description of an older-model compatible set, queried through its
    image intervals' endpoint incidences (the inputs of the completion
    rule)."""

    kind = "abstract"

    def image_intervals(self) -> list[IntervalObject]:
        """The finitely many individually-listed images (families are
        handled structurally by build_ter)."""
        raise NotImplementedError

    def to_json(self) -> dict:
        raise NotImplementedError


class VerticalLineOracle(NROracle):
    """{ M(0, y) : -1 < y < 1 }: the full vertical line at x = 0, whose
    images are exactly the open projectives."""

    kind = "vertical_line"

    def __init__(self, x0=0):
        if Fraction(x0) != 0:
            raise DomainError("only the x = 0 vertical line is supported")

    def to_json(self):
        return {"kind": self.kind, "x0": "0"}


class FiniteOracle(NROracle):
    """A finite list of strip points (pairwise compatible)."""

    kind = "finite"

    def __init__(self, points):
        pts = [p.reduce() for p in points]
        for i, p in enumerate(pts):
            for q in pts[i + 1 :]:
                if nr_incompatible(p, q):
                    raise DomainError(f"{p} and {q} are incompatible")
        self.points = tuple(sorted(set(pts), key=lambda p: (p.x, p.y)))

    def image_intervals(self):
        return [f_map_symbolic(p) for p in self.points]

    def to_json(self):
        return {
            "kind": self.kind,
            "points": [{"x": str(p.x), "y": str(p.y)} for p in self.points],
        }


class LadderChainOracle(NROracle):
    """The discrete older-model cluster whose image is: the chain of open
    projectives at the ladder points y_k, plus all dyadic refinements of
    each rung (y_k, y_{k+1}) -- a triangulated half-closed line.

    The ladder lives on tangent-line keys, so it must converge to -1 and 1.
    """

    kind = "ladder_chain"

    def __init__(self, ladder: Ladder | None = None):
        self.ladder = ladder or ScaledLadder(-1, 1)
        if self.ladder.lower != -1 or self.ladder.upper != 1:
            raise DomainError("chain ladder must span the key interval (-1, 1)")

    def chain_preimage(self, k: int) -> CPiObject:
        return CPiObject(Fraction(0), self.ladder.value(k))

    def to_json(self):
        return {"kind": self.kind, "ladder": self.ladder.to_json()}


def oracle_from_json(doc: dict) -> NROracle:
    kind = doc.get("kind")
    if kind == "vertical_line":
        return VerticalLineOracle(Fraction(doc.get("x0", "0")))
    if kind == "finite":
        return FiniteOracle(
            [CPiObject.of(p["x"], p["y"]) for p in doc.get("points", [])]
        )
    if kind == "ladder_chain":
        from .line import ladder_from_json

        return LadderChainOracle(ladder_from_json(doc["ladder"]) if "ladder" in doc else None)
    raise DomainError(f"unsupported oracle kind {kind!r}")


# ---------------------------------------------------------------------------
# The completion rule and the induced cluster description
# ---------------------------------------------------------------------------

@dataclass
class TERBuild:
    description: ClusterDescription
    images: tuple[IntervalObject, ...]
    completions: tuple[IntervalObject, ...]
    injective_cap: IntervalObject | None


def _satisfactory_sides(m: IntervalObject, images: list[IntervalObject]):
    """Whether each endpoint of the image m = (a, b) is 'covered' by the
    other images: a is satisfactory if some image ends at a, or some image
    (a, b') reaches past b, or a = -inf; mirrored for b."""
    a, b = m.left, m.right
    a_ok = a == NEG_INF_POINT or any(
        o.right.value == a.value for o in images if o != m
    ) or any(
        o != m and o.left.value == a.value and o.right > b for o in images
    )
    b_ok = any(o.left.value == b.value for o in images if o != m) or any(
        o != m and o.right.value == b.value and o.left < a for o in images
    )
    return a_ok, b_ok


def _tau(m: IntervalObject, a_ok: bool, b_ok: bool) -> list[IntervalObject]:
    if a_ok and b_ok:
        return []
    if a_ok:
        return [IntervalObject(m.left, m.right.flip())]  # (a, b]
    if b_ok:
        return [IntervalObject(m.left.flip(), m.right)]  # [a, b)
    return [
        IntervalObject(m.left.flip(), m.right.flip()),  # [a, b]
        IntervalObject(m.left.flip(), m.right),  # [a, b)
    ]


def build_ter(oracle: NROracle) -> TERBuild:
    """The induced cluster description on the tangent line: the full line,
    the images, the gap singletons, and the completion rule's half-open or
    closed additions (plus the injective cap over a maximal open
    projective, when there is one)."""
    full = IntervalObject.full_line()
    if isinstance(oracle, VerticalLineOracle):
        # images are all open projectives; every right end is
        # unsatisfactory, so the completions add all closed projectives,
        # and there are no gap singletons: exactly the projective cluster.
        desc = ClusterDescription([AllProjectivesFamily()], ScaledLadder(-1, 1))
        return TERBuild(desc, (), (), None)
    if isinstance(oracle, LadderChainOracle):
        fams = (
            LadderRungsFamily(oracle.ladder),
            FanFamily(NEG_INF_POINT, oracle.ladder, IntegerRay("all"), RIGHT),
            FiniteFamily([full]),
        )
        desc = ClusterDescription(fams, oracle.ladder)
        return TERBuild(desc, (), (), None)

    images = oracle.image_intervals()
    completions: list[IntervalObject] = []
    injective_cap = None
    open_projectives = [m for m in images if m.left == NEG_INF_POINT]
    cap_base = max(open_projectives, default=None, key=lambda m: m.right)
    for m in images:
        if cap_base is not None and m == cap_base:
            continue
        a_ok, b_ok = _satisfactory_sides(m, images)
        completions.extend(_tau(m, a_ok, b_ok))
    if cap_base is not None:
        injective_cap = IntervalObject(cap_base.right.flip(), POS_INF_POINT)
    excluded = sorted(
        {
            point_key(p)
            for m in images
            for p in (m.left, m.right)
            if p.value.is_finite
        }
    )
    finite_elements = [full, *images, *completions]
    if injective_cap is not None:
        finite_elements.append(injective_cap)
    fams = (
        FiniteFamily(finite_elements),
        CofiniteSingletonsFamily(excluded),
    )
    desc = ClusterDescription(fams, ScaledLadder(-1, 1))
    return TERBuild(desc, tuple(images), tuple(completions), injective_cap)


def chain_mutation_square(oracle: LadderChainOracle, k: int):
    """The two routes around the mutation square at the k-th chain
    element: mutate the embedded cluster at the image, and map the older
    model's replacement through the image map.  Returns (engine result,
    expected replacement image, removed preimage, added preimage)."""
    from .mutation import mutate

    build = build_ter(oracle)
    removed_img = IntervalObject(
        NEG_INF_POINT, tan_point(oracle.ladder.value(k), MINUS)
    )
    result = mutate(build.description, removed_img)
    expected = IntervalObject.open(
        oracle.ladder.value(k - 1), oracle.ladder.value(k + 1)
    )
    removed_pre = oracle.chain_preimage(k)
    added_pre = f_inverse_symbolic(expected)
    return result, expected, removed_pre, added_pre
