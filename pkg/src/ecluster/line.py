"""Exact coordinates for the doubled real line.

Every endpoint is a rational (or an infinity symbol) tagged with a -/+ side,
so that closure of interval ends becomes a strict total order and all
comparisons are decidable.  Ladders provide the convergent integer-indexed
point sequences used by the symbolic cluster constructions.
"""

from __future__ import annotations

from fractions import Fraction

_NEG = -1
_FIN = 0
_POS = 1


class ExtendedRational:
    """A rational number, or one of the symbols -inf / +inf.

    Totally ordered with NEG_INF < q < POS_INF for every rational q.
    Arithmetic is never performed on the infinite values.
    """

    __slots__ = ("kind", "q", "_hash")

    def __init__(self, kind: int, q: Fraction):
        self.kind = kind
        self.q = q
        self._hash = hash((kind, q if kind == _FIN else 0))

    @staticmethod
    def of(value) -> "ExtendedRational":
        if isinstance(value, ExtendedRational):
            return value
        return ExtendedRational(_FIN, Fraction(value))

    @property
    def is_finite(self) -> bool:
        return self.kind == _FIN

    def __eq__(self, other):
        if not isinstance(other, ExtendedRational):
            return NotImplemented
        return self.kind == other.kind and (self.kind != _FIN or self.q == other.q)

    def __lt__(self, other):
        if self.kind != other.kind:
            return self.kind < other.kind
        return self.kind == _FIN and self.q < other.q

    def __le__(self, other):
        return self == other or self < other

    def __gt__(self, other):
        return other < self

    def __ge__(self, other):
        return other <= self

    def __hash__(self):
        return self._hash

    def __float__(self):
        if self.kind == _NEG:
            return float("-inf")
        if self.kind == _POS:
            return float("inf")
        return float(self.q)

    def __repr__(self):
        if self.kind == _NEG:
            return "-inf"
        if self.kind == _POS:
            return "+inf"
        return str(self.q)


NEG_INF = ExtendedRational(_NEG, Fraction(0))
POS_INF = ExtendedRational(_POS, Fraction(0))

MINUS = 0
PLUS = 1

_SIDE_CHARS = {MINUS: "-", PLUS: "+"}


class DoubledPoint:
    """A point of the doubled line: an extended rational with a -/+ side.

    Lexicographic order, MINUS < PLUS at equal values.  The infinities carry
    a fixed side (an endpoint at -inf or +inf is always open): NEG_INF only
    occurs with PLUS, POS_INF only with MINUS.
    """

    __slots__ = ("value", "side", "_hash")

    def __init__(self, value: ExtendedRational, side: int):
        if value.kind == _NEG and side != PLUS:
            raise ValueError("-inf carries side '+' only")
        if value.kind == _POS and side != MINUS:
            raise ValueError("+inf carries side '-' only")
        self.value = value
        self.side = side
        self._hash = hash((value._hash, side))

    @staticmethod
    def at(value, side: int) -> "DoubledPoint":
        return DoubledPoint(ExtendedRational.of(value), side)

    def flip(self) -> "DoubledPoint | None":
        """The same value with the opposite side, or None at +-inf."""
        if not self.value.is_finite:
            return None
        return DoubledPoint(self.value, 1 - self.side)

    def __eq__(self, other):
        if not isinstance(other, DoubledPoint):
            return NotImplemented
        return self.side == other.side and self.value == other.value

    def __lt__(self, other):
        v, w = self.value, other.value
        if v.kind != w.kind:
            return v.kind < w.kind
        if v.kind == _FIN and v.q != w.q:
            return v.q < w.q
        return self.side < other.side

    def __le__(self, other):
        return self == other or self < other

    def __gt__(self, other):
        return other < self

    def __ge__(self, other):
        return other <= self

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"({self.value},{_SIDE_CHARS[self.side]})"


def compare(p: DoubledPoint, q: DoubledPoint) -> int:
    """Total order on doubled points: -1, 0 or 1."""
    if p < q:
        return -1
    if q < p:
        return 1
    return 0


NEG_INF_POINT = DoubledPoint(NEG_INF, PLUS)
POS_INF_POINT = DoubledPoint(POS_INF, MINUS)


class IntervalObject:
    """An indecomposable of the continuous cluster category, as the ordered
    pair of doubled endpoints of its support interval.

    Closure convention: left side MINUS means the left endpoint is included,
    right side PLUS means the right endpoint is included.  A singleton at x
    is (x,-)..(x,+).  Zero objects are unrepresentable (left < right).
    """

    __slots__ = ("left", "right", "_hash")

    def __init__(self, left: DoubledPoint, right: DoubledPoint):
        if not left < right:
            raise ValueError(f"empty interval: {left} .. {right}")
        self.left = left
        self.right = right
        self._hash = hash((left, right))

    # -- constructors for the named shapes -------------------------------
    @staticmethod
    def open(a, b) -> "IntervalObject":
        """M_(a,b); a may be NEG_INF, b may be POS_INF."""
        a = ExtendedRational.of(a)
        b = ExtendedRational.of(b)
        return IntervalObject(DoubledPoint(a, PLUS), DoubledPoint(b, MINUS))

    @staticmethod
    def closed(a, b) -> "IntervalObject":
        return IntervalObject(DoubledPoint.at(a, MINUS), DoubledPoint.at(b, PLUS))

    @staticmethod
    def half_open_right(a, b) -> "IntervalObject":
        """M_[a,b)."""
        return IntervalObject(DoubledPoint.at(a, MINUS), DoubledPoint.at(b, MINUS))

    @staticmethod
    def half_open_left(a, b) -> "IntervalObject":
        """M_(a,b]."""
        a = ExtendedRational.of(a)
        return IntervalObject(DoubledPoint(a, PLUS), DoubledPoint.at(b, PLUS))

    @staticmethod
    def singleton(x) -> "IntervalObject":
        return IntervalObject(DoubledPoint.at(x, MINUS), DoubledPoint.at(x, PLUS))

    @staticmethod
    def proj_closed(a) -> "IntervalObject":
        """P_a, supported on (-inf, a]."""
        return IntervalObject(NEG_INF_POINT, DoubledPoint.at(a, PLUS))

    @staticmethod
    def proj_open(a) -> "IntervalObject":
        """P_a), supported on (-inf, a)."""
        return IntervalObject(NEG_INF_POINT, DoubledPoint.at(a, MINUS))

    @staticmethod
    def proj_at(p: DoubledPoint) -> "IntervalObject":
        """The projective whose right doubled endpoint is p."""
        return IntervalObject(NEG_INF_POINT, p)

    @staticmethod
    def full_line() -> "IntervalObject":
        """P_+inf = M_(-inf,+inf)."""
        return IntervalObject(NEG_INF_POINT, POS_INF_POINT)

    @staticmethod
    def inj_open(b) -> "IntervalObject":
        """I_(b, supported on (b, +inf)."""
        return IntervalObject(DoubledPoint.at(b, PLUS), POS_INF_POINT)

    # -- queries ----------------------------------------------------------
    @property
    def is_singleton(self) -> bool:
        return (
            self.left.value.is_finite
            and self.left.value == self.right.value
        )

    @property
    def is_projective(self) -> bool:
        return self.left == NEG_INF_POINT

    def contains(self, q: Fraction) -> bool:
        """Whether the rational q lies in the support interval."""
        lv = self.left.value
        if lv.is_finite:
            if q < lv.q or (q == lv.q and self.left.side == PLUS):
                return False
        elif lv.kind == _POS:
            return False
        rv = self.right.value
        if rv.is_finite:
            if q > rv.q or (q == rv.q and self.right.side == MINUS):
                return False
        elif rv.kind == _NEG:
            return False
        return True

    def __eq__(self, other):
        if not isinstance(other, IntervalObject):
            return NotImplemented
        return self.left == other.left and self.right == other.right

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        return (self.left, self.right) < (other.left, other.right)

    def __repr__(self):
        lb = "[" if self.left.side == MINUS else "("
        rb = "]" if self.right.side == PLUS else ")"
        if self.is_singleton:
            return f"M{{{self.left.value}}}"
        return f"M{lb}{self.left.value},{self.right.value}{rb}"


# ---------------------------------------------------------------------------
# Ladders
# ---------------------------------------------------------------------------

OUTSIDE = "OUTSIDE"


class Ladder:
    """A strictly increasing sequence a_i (i in Z) of rationals converging to
    finite limits at both ends.  Subclasses provide value() and the limits;
    locate() and the dyadic grid come for free.
    """

    lower: Fraction
    upper: Fraction

    def value(self, i: int) -> Fraction:
        raise NotImplementedError

    def locate(self, q: Fraction):
        """The rung index i with a_i <= q < a_{i+1}, or OUTSIDE.

        Generic exponential/binary search; subclasses may override with a
        closed form.
        """
        q = Fraction(q)
        if not (self.lower < q < self.upper):
            return OUTSIDE
        if self.value(0) <= q:
            lo, hi = 0, 1
            while self.value(hi) <= q:
                lo, hi = hi, hi * 2
        else:
            lo, hi = -1, 0
            while self.value(lo) > q:
                lo, hi = lo * 2, lo
        while hi - lo > 1:
            mid = (lo + hi) // 2
            if self.value(mid) <= q:
                lo = mid
            else:
                hi = mid
        return lo

    def index_of(self, q: Fraction) -> int | None:
        """Exact inverse: the i with a_i == q, if q is a ladder point."""
        i = self.locate(q)
        if i is OUTSIDE:
            return None
        return i if self.value(i) == Fraction(q) else None

    def dyadic(self, i: int, j: int, level: int) -> Fraction:
        """The dyadic refinement point a_i + (j/2^level)(a_{i+1} - a_i)."""
        if level < 0:
            raise ValueError("level must be >= 0")
        if not 0 <= j <= (1 << level):
            raise ValueError(f"j={j} out of range at level {level}")
        lo = self.value(i)
        return lo + Fraction(j, 1 << level) * (self.value(i + 1) - lo)

    def to_json(self) -> dict:
        raise NotImplementedError


class DefaultLadder(Ladder):
    """a_i = 2^i / (2^i + 1), limits 0 and 1.

    Rational-valued closed form; locate() inverts it by comparing q/(1-q)
    with powers of two, exactly.
    """

    def __init__(self):
        self.lower = Fraction(0)
        self.upper = Fraction(1)

    def value(self, i: int) -> Fraction:
        if i >= 0:
            return Fraction(1 << i, (1 << i) + 1)
        return Fraction(1, (1 << (-i)) + 1)

    def locate(self, q: Fraction):
        q = Fraction(q)
        if not (0 < q < 1):
            return OUTSIDE
        # a_i <= q  iff  2^i <= q/(1-q)
        r = q / (1 - q)
        i = r.numerator.bit_length() - r.denominator.bit_length()
        # i is within 1 of floor(log2 r); fix up exactly
        while (Fraction(1 << (i + 1)) if i + 1 >= 0 else Fraction(1, 1 << -(i + 1))) <= r:
            i += 1
        while (Fraction(1 << i) if i >= 0 else Fraction(1, 1 << -i)) > r:
            i -= 1
        return i

    def to_json(self) -> dict:
        return {"kind": "default"}


class ScaledLadder(Ladder):
    """The default ladder mapped affinely onto (lower, upper)."""

    def __init__(self, lower, upper):
        self.lower = Fraction(lower)
        self.upper = Fraction(upper)
        if not self.lower < self.upper:
            raise ValueError("need lower < upper")
        self._base = DefaultLadder()

    def value(self, i: int) -> Fraction:
        return self.lower + (self.upper - self.lower) * self._base.value(i)

    def locate(self, q: Fraction):
        q = Fraction(q)
        if not (self.lower < q < self.upper):
            return OUTSIDE
        return self._base.locate((q - self.lower) / (self.upper - self.lower))

    def to_json(self) -> dict:
        return {"kind": "scaled", "lower": str(self.lower), "upper": str(self.upper)}


def ladder_from_json(doc: dict) -> Ladder:
    kind = doc.get("kind", "default")
    if kind == "default":
        return DefaultLadder()
    if kind == "scaled":
        return ScaledLadder(Fraction(doc["lower"]), Fraction(doc["upper"]))
    raise ValueError(f"unknown ladder kind {kind!r}")


# ---------------------------------------------------------------------------
# Dyadic helpers (relative coordinates in [0,1])
# ---------------------------------------------------------------------------

def is_power_of_two(n: int) -> bool:
    return n > 0 and (n & (n - 1)) == 0


def is_dyadic(t: Fraction) -> bool:
    """Whether t (in lowest terms) has a power-of-two denominator."""
    return is_power_of_two(t.denominator)


def dyadic_level(t: Fraction) -> int:
    """The birth level of a dyadic t: smallest l with t*2^l integral."""
    if not is_dyadic(t):
        raise ValueError(f"{t} is not dyadic")
    return t.denominator.bit_length() - 1
