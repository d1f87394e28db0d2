"""JSON encodings and the compact interval string syntax.

Rationals are strings ("p/q" or "p"); doubled points are
{"value": "p/q" | "-inf" | "+inf", "side": "-" | "+"}; intervals pair a
left and right point.  The string syntax accepts bracket forms like
"(0,2]", "{1}", "M_[1,3)", projective forms "P_2", "P_2)", "P_+inf" and
the injective form "I_(2".
"""

from __future__ import annotations

from fractions import Fraction

from .families import (
    FAMILY_KINDS,
    AllProjectivesFamily,
    CofiniteSingletonsFamily,
    DyadicRungFamily,
    FanFamily,
    FiniteFamily,
    IntegerProjectivesFamily,
    IntegerRay,
    IntegerRungsFamily,
    LadderRungsFamily,
    SingletonCofamily,
)
from .line import (
    MINUS,
    NEG_INF,
    PLUS,
    POS_INF,
    DoubledPoint,
    ExtendedRational,
    IntervalObject,
    ladder_from_json,
)


class ParseError(ValueError):
    pass


def rational_to_json(q) -> str:
    return str(Fraction(q))


def value_to_json(v: ExtendedRational) -> str:
    return repr(v)


def value_from_json(s: str) -> ExtendedRational:
    s = s.strip()
    if s in ("-inf", "-oo"):
        return NEG_INF
    if s in ("+inf", "inf", "+oo"):
        return POS_INF
    try:
        return ExtendedRational.of(Fraction(s))
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad rational {s!r}") from exc


_SIDES = {"-": MINUS, "+": PLUS}


def point_to_json(p: DoubledPoint) -> dict:
    return {"value": value_to_json(p.value), "side": "-" if p.side == MINUS else "+"}


def point_from_json(doc: dict) -> DoubledPoint:
    if doc.get("side") not in _SIDES:
        raise ParseError(f"bad side in {doc!r}")
    return DoubledPoint(value_from_json(doc["value"]), _SIDES[doc["side"]])


def interval_to_json(m: IntervalObject) -> dict:
    return {"left": point_to_json(m.left), "right": point_to_json(m.right)}


def interval_from_json(doc: dict) -> IntervalObject:
    try:
        return IntervalObject(point_from_json(doc["left"]), point_from_json(doc["right"]))
    except (KeyError, ValueError) as exc:
        raise ParseError(f"bad interval {doc!r}") from exc


def format_interval(m: IntervalObject, prefix: bool = True) -> str:
    """Canonical compact form: projectives and injectives by name,
    singletons in braces, everything else in bracket notation."""
    if m.left.value == NEG_INF:
        if m.right.value == POS_INF:
            return "P_+inf"
        mark = "" if m.right.side == PLUS else ")"
        return f"P_{m.right.value}{mark}"
    if m.right.value == POS_INF:
        mark = "(" if m.left.side == PLUS else "["
        return f"I_{mark}{m.left.value}"
    if m.is_singleton:
        core = f"{{{m.left.value}}}"
    else:
        lb = "[" if m.left.side == MINUS else "("
        rb = "]" if m.right.side == PLUS else ")"
        core = f"{lb}{m.left.value},{m.right.value}{rb}"
    return ("M_" if prefix else "") + core


def parse_interval(text: str) -> IntervalObject:
    s = text.strip()
    if s.startswith("M_"):
        s = s[2:]
    if s.startswith("P_"):
        body = s[2:]
        if body in ("+inf", "inf"):
            return IntervalObject.full_line()
        if body.endswith(")"):
            return IntervalObject.proj_open(Fraction(body[:-1]))
        return IntervalObject.proj_closed(Fraction(body))
    if s.startswith("I_"):
        body = s[2:]
        if body.startswith("("):
            return IntervalObject.inj_open(Fraction(body[1:]))
        if body.startswith("["):
            return IntervalObject(
                DoubledPoint.at(Fraction(body[1:]), MINUS),
                IntervalObject.full_line().right,
            )
        raise ParseError(f"bad injective form {text!r}")
    if s.startswith("{") and s.endswith("}"):
        return IntervalObject.singleton(Fraction(s[1:-1]))
    if len(s) >= 2 and s[0] in "([" and s[-1] in ")]":
        left_side = MINUS if s[0] == "[" else PLUS
        right_side = PLUS if s[-1] == "]" else MINUS
        body = s[1:-1].split(",")
        if len(body) != 2:
            raise ParseError(f"bad interval form {text!r}")
        lv = value_from_json(body[0])
        rv = value_from_json(body[1])
        try:
            return IntervalObject(DoubledPoint(lv, left_side), DoubledPoint(rv, right_side))
        except ValueError as exc:
            raise ParseError(str(exc)) from exc
    raise ParseError(f"cannot parse interval {text!r}")


# ---------------------------------------------------------------------------
# Families and cluster descriptions
# ---------------------------------------------------------------------------

def family_from_json(doc: dict, ladder):
    kind = doc.get("kind")
    if kind not in FAMILY_KINDS:
        raise ParseError(f"unknown family kind {kind!r}")
    if kind == FiniteFamily.kind:
        return FiniteFamily([interval_from_json(e) for e in doc.get("elements", [])])
    if kind == AllProjectivesFamily.kind:
        return AllProjectivesFamily()
    if kind == DyadicRungFamily.kind:
        return DyadicRungFamily(
            Fraction(doc["lo"]), Fraction(doc["hi"]), doc.get("includeRightProjective", False)
        )
    if kind == SingletonCofamily.kind:
        return SingletonCofamily(Fraction(doc["lo"]), Fraction(doc["hi"]))
    if kind == CofiniteSingletonsFamily.kind:
        return CofiniteSingletonsFamily([Fraction(x) for x in doc.get("excluded", [])])
    if kind == FanFamily.kind:
        ray = IntegerRay(doc["ray"]["op"], doc["ray"].get("bound", 0))
        return FanFamily(point_from_json(doc["apex"]), ladder, ray, doc["side"])
    if kind == LadderRungsFamily.kind:
        return LadderRungsFamily(ladder)
    if kind == IntegerRungsFamily.kind:
        return IntegerRungsFamily(doc["lo"], doc["hi"])
    if kind == IntegerProjectivesFamily.kind:
        return IntegerProjectivesFamily(doc["lo"], doc["hi"])
    raise ParseError(f"unhandled family kind {kind!r}")


def cluster_from_json(doc: dict):
    from .clusters import ClusterDescription

    if doc.get("schemaVersion") != 1:
        raise ParseError("unsupported or missing schemaVersion")
    ladder = ladder_from_json(doc.get("ladder", {"kind": "default"}))
    fams = [family_from_json(f, ladder) for f in doc.get("families", [])]
    added = [interval_from_json(e) for e in doc.get("added", [])]
    removed = frozenset(interval_from_json(e) for e in doc.get("removed", []))
    return ClusterDescription(fams, ladder, added, removed)


def arcset_to_json(desc) -> dict:
    return {
        "schemaVersion": 1,
        "finite": [[a.i, a.j] for a in sorted(desc.finite)],
        "leftTails": [[t.m, t.i0] for t in desc.left_tails],
        "rightTails": [[t.n, t.j0] for t in desc.right_tails],
    }


def arcset_from_json(doc: dict):
    from .infgon import ArcSetDescription

    if doc.get("schemaVersion", 1) != 1:
        raise ParseError("unsupported schemaVersion")
    return ArcSetDescription.of(
        [tuple(a) for a in doc.get("finite", [])],
        [tuple(t) for t in doc.get("leftTails", [])],
        [tuple(t) for t in doc.get("rightTails", [])],
    )


def cpi_to_json(u) -> dict:
    return {"x": rational_to_json(u.x), "y": rational_to_json(u.y)}


def cpi_from_json(doc: dict):
    from .cpi import CPiObject

    return CPiObject.of(Fraction(doc["x"]), Fraction(doc["y"]))
