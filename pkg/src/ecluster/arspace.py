"""Strip coordinates, quiver sink/source specifications, the derived
equivalence classifier, and the coordinate map onto the older model.

Exactness lives in the symbolic layer; the trigonometric coordinates here
are floats for display, adequate to 1e-9.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .compat import is_degenerate
from .cpi import CPiObject
from .line import IntervalObject

HALF_PI = math.pi / 2


class DegenerateObject(Exception):
    """Raised for strip-boundary objects, which the localization kills."""


def lambda_base(z: float) -> float:
    """The sawtooth folding R onto [-pi/2, pi/2]: on [0, pi] it is
    w - pi/2, on [pi, 2pi] it is -w + 3pi/2, extended 2pi-periodically."""
    w = math.fmod(z, 2 * math.pi)
    if w < 0:
        w += 2 * math.pi
    if w <= math.pi:
        return w - HALF_PI
    return -w + 3 * HALF_PI


def lambda_shifted(kappa: float, x: float) -> float:
    """The boundary-curve family x -> lambda(x - kappa), kappa in [-pi, pi]."""
    if not -math.pi <= kappa <= math.pi:
        raise ValueError("kappa must lie in [-pi, pi]")
    return lambda_base(x - kappa)


# position of an indecomposable on its coordinate diamond, read off the
# endpoint closures: closed-closed, closed-open, open-closed, open-open
_POSITIONS = {(0, 1): 1, (0, 0): 2, (1, 1): 3, (1, 0): 4}


@dataclass(frozen=True)
class ARPoint:
    alpha: float
    beta: float
    position: int

    def shifted(self, n: int) -> "ARPoint":
        """Each suspension advances alpha by pi and flips beta."""
        return ARPoint(
            self.alpha + n * math.pi,
            self.beta if n % 2 == 0 else -self.beta,
            self.position,
        )


def _atan_endpoint(value) -> float:
    return math.atan(float(value))


def gamma_b(v: IntervalObject, shift: int = 0) -> ARPoint:
    """Strip coordinates of an interval object (straight orientation):
    degree 0 sits at (atan b + atan a + pi/2, atan b - atan a - pi/2), and
    each shift applies (alpha, beta) -> (alpha + pi, -beta)."""
    a = _atan_endpoint(v.left.value)
    b = _atan_endpoint(v.right.value)
    alpha = b + a + HALF_PI
    beta = b - a - HALF_PI
    position = _POSITIONS[(v.left.side, v.right.side)]
    return ARPoint(alpha, beta, position).shifted(shift)


def gamma_consistent_with_degeneracy(v: IntervalObject, tol: float = 1e-12) -> bool:
    return is_degenerate(v) == (abs(abs(gamma_b(v).beta) - HALF_PI) < tol)


def g_coordinate_map(p: ARPoint) -> CPiObject:
    """The localization functor's coordinates: (alpha, beta) -> the strip
    point M((alpha-beta)/pi, (alpha+beta)/pi) in pi-units.  Boundary
    points have no image (they are killed)."""
    if abs(abs(p.beta) - HALF_PI) < 1e-12:
        raise DegenerateObject(f"beta = {p.beta} is on the strip boundary")
    return CPiObject(
        Fraction((p.alpha - p.beta) / math.pi),
        Fraction((p.alpha + p.beta) / math.pi),
    )


# ---------------------------------------------------------------------------
# Quiver specifications and the derived classifier
# ---------------------------------------------------------------------------

SINK = "sink"
SOURCE = "source"

CLASS_FINITE = "CLASS_FINITE"
CLASS_HALF_BOUNDED = "CLASS_HALF_BOUNDED"
CLASS_UNBOUNDED = "CLASS_UNBOUNDED"


@dataclass(frozen=True)
class QuiverSpec:
    """Sink/source data of a continuous type-A quiver.

    kind 'finite':       finitely many sinks/sources, given explicitly as a
                         strictly increasing, alternating list;
    kind 'half_bounded': bounded on exactly one side ('left' or 'right'),
                         with a seed list continuing periodically;
    kind 'unbounded':    unbounded on both sides.
    """

    kind: str
    points: tuple = ()
    side: str = ""

    def __post_init__(self):
        if self.kind == "finite":
            vals = [Fraction(v) for v, _ in self.points]
            kinds = [k for _, k in self.points]
            if any(b <= a for a, b in zip(vals, vals[1:])):
                raise ValueError("sink/source positions must strictly increase")
            if any(k not in (SINK, SOURCE) for k in kinds):
                raise ValueError("kinds must be 'sink' or 'source'")
            if any(k1 == k2 for k1, k2 in zip(kinds, kinds[1:])):
                raise ValueError("sinks and sources must alternate")
        elif self.kind == "half_bounded":
            if self.side not in ("left", "right"):
                raise ValueError("half_bounded needs side 'left' or 'right'")
        elif self.kind != "unbounded":
            raise ValueError(f"unknown quiver kind {self.kind!r}")

    @staticmethod
    def straight() -> "QuiverSpec":
        return QuiverSpec("finite", ())

    def to_json(self):
        return {
            "schemaVersion": 1,
            "kind": self.kind,
            "points": [[str(v), k] for v, k in self.points],
            "side": self.side,
        }

    @staticmethod
    def from_json(doc):
        return QuiverSpec(
            doc["kind"],
            tuple((Fraction(v), k) for v, k in doc.get("points", ())),
            doc.get("side", ""),
        )


def classify_derived(spec: QuiverSpec) -> str:
    if spec.kind == "finite":
        return CLASS_FINITE
    if spec.kind == "half_bounded":
        return CLASS_HALF_BOUNDED
    return CLASS_UNBOUNDED


def derived_equivalent(q1: QuiverSpec, q2: QuiverSpec) -> bool:
    return classify_derived(q1) == classify_derived(q2)


# ---------------------------------------------------------------------------
# Strip pictures
# ---------------------------------------------------------------------------

def strip_svg(
    points,
    highlight=(),
    width: int = 720,
    height: int = 240,
    alpha_range: tuple[float, float] = (-math.pi, 2 * math.pi),
) -> str:
    """An SVG of the strip R x [-pi/2, pi/2] with labeled object dots and
    an optional highlighted exchange rectangle (list of corner points).

    `points` is an iterable of (ARPoint, label) pairs.
    """
    a_lo, a_hi = alpha_range
    pad = 12

    def sx(alpha):
        return pad + (alpha - a_lo) / (a_hi - a_lo) * (width - 2 * pad)

    def sy(beta):
        return height - pad - (beta + HALF_PI) / math.pi * (height - 2 * pad)

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>',
        f'<line x1="{pad}" y1="{sy(HALF_PI):.2f}" x2="{width - pad}" y2="{sy(HALF_PI):.2f}" '
        'stroke="#888" stroke-dasharray="4 3"/>',
        f'<line x1="{pad}" y1="{sy(-HALF_PI):.2f}" x2="{width - pad}" y2="{sy(-HALF_PI):.2f}" '
        'stroke="#888" stroke-dasharray="4 3"/>',
    ]
    hl = [p for p in highlight]
    if len(hl) >= 3:
        path = " ".join(
            f"{'M' if i == 0 else 'L'}{sx(p.alpha):.2f},{sy(p.beta):.2f}"
            for i, p in enumerate(hl)
        )
        parts.append(f'<path d="{path} Z" fill="#ffe9a8" stroke="#d4a017"/>')
    for p, label in points:
        parts.append(
            f'<circle cx="{sx(p.alpha):.2f}" cy="{sy(p.beta):.2f}" r="3" fill="#1a4d8f"/>'
        )
        if label:
            parts.append(
                f'<text x="{sx(p.alpha) + 5:.2f}" y="{sy(p.beta) - 5:.2f}" '
                f'font-size="10" fill="#333">{label}</text>'
            )
    parts.append("</svg>")
    return "".join(parts)
