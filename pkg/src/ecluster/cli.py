"""Command-line workbench.

Exit codes: 0 success, 2 domain errors (not mutable, malformed
description, degenerate object), 1 malformed input.  All outputs are JSON
on stdout and deterministic for a fixed --seed.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import arspace, cpi, infgon, jsonio, polygon
from .clusters import (
    build_projective_cluster,
    build_t_infinity,
    build_t_n,
    verify_window,
)
from .compat import NONE, V_SUB, e_compatible_geometric, exchange_middle, ext_direction
from .infgon import MalformedDescription, NotMutableArc
from .jsonio import ParseError, format_interval, parse_interval
from .line import DefaultLadder, ladder_from_json
from .mutation import NotAMember, NotMutable, mutate


class CliError(Exception):
    def __init__(self, message, code):
        super().__init__(message)
        self.code = code


def _emit(doc):
    json.dump(doc, sys.stdout, indent=2)
    sys.stdout.write("\n")


def _load_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise CliError(f"cannot read {path}: {exc}", 1) from exc


def _ladder_arg(spec: str):
    if spec in (None, "default"):
        return DefaultLadder()
    try:
        return ladder_from_json(_load_json(spec))
    except ValueError as exc:
        raise CliError(str(exc), 1) from exc


def _parse_window(text):
    try:
        a, b = text.split(",")
        return Fraction(a), Fraction(b)
    except ValueError as exc:
        raise CliError(f"bad window {text!r} (want a,b)", 1) from exc


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_compat(args):
    a = parse_interval(args.a)
    b = parse_interval(args.b)
    compatible = e_compatible_geometric(a, b)
    direction = ext_direction(a, b)
    doc = {
        "schemaVersion": 1,
        "compatible": compatible,
        "extDirection": {NONE: "NONE", V_SUB: "A_SUB"}.get(direction, "B_SUB"),
        "middle": [],
    }
    if not compatible:
        sub, quot = (a, b) if direction == V_SUB else (b, a)
        doc["middle"] = [format_interval(m, prefix=False) for m in exchange_middle(sub, quot).middle]
    _emit(doc)


def _cluster_from_args(args):
    return jsonio.cluster_from_json(_load_json(args.cluster))


def cmd_cluster(args):
    if args.action == "build":
        ladder = _ladder_arg(args.ladder)
        if args.name == "projectives":
            desc = build_projective_cluster(ladder)
        elif args.name == "t-infinity":
            desc = build_t_infinity(ladder)
        elif args.name == "t-n":
            desc = build_t_n(ladder, args.n)
        else:
            raise CliError(f"unknown cluster name {args.name!r}", 1)
        _emit(desc.to_json())
        return
    if not args.cluster:
        raise CliError(f"cluster {args.action} needs --cluster", 1)
    desc = _cluster_from_args(args)
    if args.action in ("member", "witness") and not args.element:
        raise CliError(f"cluster {args.action} needs --element", 1)
    if args.action == "member":
        m = parse_interval(args.element)
        _emit({"schemaVersion": 1, "member": desc.member(m)})
    elif args.action == "witness":
        m = parse_interval(args.element)
        w = desc.find_incompatible(m)
        _emit(
            {
                "schemaVersion": 1,
                "witness": None if w is None else format_interval(w),
            }
        )
    elif args.action == "verify":
        window = _parse_window(args.window)
        report = verify_window(desc, window, budget=args.budget, seed=args.seed)
        _emit(
            {
                "schemaVersion": 1,
                "checked": report.checked,
                "failures": [
                    {"candidate": format_interval(m), "reason": r}
                    for m, r in report.failures
                ],
            }
        )


def cmd_mutate(args):
    desc = _cluster_from_args(args)
    at = parse_interval(args.at)
    try:
        result = mutate(desc, at)
    except NotAMember as exc:
        raise CliError(str(exc), 1) from exc
    except NotMutable as exc:
        raise CliError(str(exc), 2) from exc
    doc = result.to_json()
    doc["removedText"] = format_interval(result.removed)
    doc["addedText"] = format_interval(result.added)
    doc["middleText"] = [format_interval(m) for m in result.middle]
    _emit(doc)


def cmd_polygon(args):
    n = args.n
    if args.enumerate:
        tris = polygon.enumerate_triangulations(n)
        _emit(
            {
                "schemaVersion": 1,
                "count": len(tris),
                "triangulations": [
                    sorted(repr(d) for d in t.diagonals) for t in tris
                ],
            }
        )
        return
    if not args.triangulation:
        raise CliError("need --triangulation or --enumerate", 1)
    try:
        diags = [polygon.parse_diagonal(t) for t in args.triangulation.split(",")]
        tri = polygon.Triangulation(n, diags)
    except ValueError as exc:
        raise CliError(str(exc), 1) from exc
    doc = {"schemaVersion": 1, "n": n, "diagonals": sorted(repr(d) for d in tri.diagonals)}
    if args.flip:
        d = polygon.parse_diagonal(args.flip)
        if d not in tri.diagonals:
            raise CliError(f"{d} is not in the triangulation", 1)
        tri2, replacement = polygon.flip(tri, d)
        doc["flip"] = {
            "removed": repr(d),
            "added": repr(replacement),
            "diagonals": sorted(repr(x) for x in tri2.diagonals),
        }
        tri = tri2
    if args.embed:
        ladder = _ladder_arg(args.ladder)
        doc["embedded"] = [
            {
                "diagonal": repr(d),
                "interval": format_interval(polygon.embed_diagonal(ladder, d)),
            }
            for d in sorted(tri.diagonals)
        ]
    _emit(doc)


def cmd_infgon(args):
    try:
        desc = jsonio.arcset_from_json(_load_json(args.arcs))
    except (ParseError, ValueError) as exc:
        raise CliError(str(exc), 1) from exc
    try:
        if args.action == "report":
            rep = infgon.fountain_report(desc)
            _emit({"schemaVersion": 1, "kind": rep.kind, "m": rep.m, "n": rep.n})
        elif args.action == "noskip":
            _emit(
                {
                    "schemaVersion": 1,
                    "level": args.level,
                    "noSkip": infgon.no_skip_check(desc, args.level),
                }
            )
        elif args.action == "embed":
            ladder = _ladder_arg(args.ladder)
            emb = infgon.embed_arc_set(ladder, desc)
            _emit(emb.to_json())
        elif args.action == "mutate":
            if not args.at:
                raise CliError("infgon mutate needs --at i-j", 1)
            arc = infgon.parse_arc(args.at)
            new, replacement = infgon.mutate_arc(desc, arc)
            _emit(
                {
                    "schemaVersion": 1,
                    "removed": repr(arc),
                    "added": repr(replacement),
                    "arcs": jsonio.arcset_to_json(new),
                }
            )
    except MalformedDescription as exc:
        raise CliError(str(exc), 2) from exc
    except NotMutableArc as exc:
        raise CliError(str(exc), 2) from exc


def _parse_cpi(text):
    if not text:
        raise CliError("missing strip point (want x,y in pi-units)", 1)
    try:
        x, y = text.split(",")
        return cpi.CPiObject.of(Fraction(x), Fraction(y))
    except (ValueError, cpi.DomainError) as exc:
        raise CliError(f"bad strip point {text!r}: {exc}", 1) from exc


def cmd_cpi(args):
    try:
        if args.action == "compat":
            u = _parse_cpi(args.u).reduce()
            v = _parse_cpi(args.v).reduce()
            _emit(
                {
                    "schemaVersion": 1,
                    "compatible": not cpi.nr_incompatible(u, v),
                    "directAgrees": cpi.nr_incompatible(u, v)
                    == cpi.nr_incompatible_direct(u, v),
                }
            )
        elif args.action == "map":
            u = _parse_cpi(args.u).reduce()
            a, b = cpi.f_map(u)
            m = cpi.f_map_symbolic(u)
            _emit(
                {
                    "schemaVersion": 1,
                    "a": a,
                    "b": b,
                    "symbolic": format_interval(m),
                }
            )
        elif args.action == "inverse":
            if args.a is None or args.b is None:
                raise CliError("cpi inverse needs --a and --b", 1)
            try:
                a = float("-inf") if args.a in ("-inf", "-oo") else float(Fraction(args.a))
                b = float(Fraction(args.b))
            except (ValueError, ZeroDivisionError) as exc:
                raise CliError(f"bad endpoint: {exc}", 1) from exc
            u = cpi.f_inverse(a, b)
            _emit({"schemaVersion": 1, "x": float(u.x), "y": float(u.y)})
        elif args.action == "embed":
            if not args.oracle:
                raise CliError("cpi embed needs --oracle", 1)
            oracle = cpi.oracle_from_json(_load_json(args.oracle))
            build = cpi.build_ter(oracle)
            doc = build.description.to_json()
            doc["completions"] = [format_interval(c) for c in build.completions]
            doc["injectiveCap"] = (
                None if build.injective_cap is None else format_interval(build.injective_cap)
            )
            _emit(doc)
    except cpi.DomainError as exc:
        raise CliError(str(exc), 2) from exc


def cmd_arspace(args):
    if args.action == "gamma":
        if not args.interval:
            raise CliError("arspace gamma needs --interval", 1)
        m = parse_interval(args.interval[0])
        p = arspace.gamma_b(m, args.shift)
        _emit(
            {
                "schemaVersion": 1,
                "alpha": p.alpha,
                "beta": p.beta,
                "position": p.position,
            }
        )
    elif args.action == "classify":
        if not args.quiver:
            raise CliError("arspace classify needs --quiver", 1)
        try:
            spec = arspace.QuiverSpec.from_json(_load_json(args.quiver))
        except (ValueError, KeyError) as exc:
            raise CliError(str(exc), 1) from exc
        _emit({"schemaVersion": 1, "class": arspace.classify_derived(spec)})
    elif args.action == "svg":
        pts = []
        for text in args.interval:
            m = parse_interval(text)
            pts.append((arspace.gamma_b(m), format_interval(m)))
        sys.stdout.write(arspace.strip_svg(pts))
        sys.stdout.write("\n")


def cmd_serve(args):
    from .server import serve

    serve(port=args.port, data_dir=args.data_dir)


# ---------------------------------------------------------------------------

def build_parser():
    ap = argparse.ArgumentParser(prog="ecluster")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compat", help="compatibility and exchange data of two intervals")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.set_defaults(fn=cmd_compat)

    p = sub.add_parser("cluster", help="build and query cluster descriptions")
    p.add_argument("action", choices=["build", "member", "witness", "verify"])
    p.add_argument("--name", default="projectives")
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--ladder", default="default")
    p.add_argument("--cluster")
    p.add_argument("--element")
    p.add_argument("--window", default="0,1")
    p.add_argument("--budget", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(fn=cmd_cluster)

    p = sub.add_parser("mutate", help="mutate a cluster at an element")
    p.add_argument("--cluster", required=True)
    p.add_argument("--at", required=True)
    p.set_defaults(fn=cmd_mutate)

    p = sub.add_parser("polygon", help="triangulations of the (n+3)-gon")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--enumerate", action="store_true")
    p.add_argument("--triangulation")
    p.add_argument("--flip")
    p.add_argument("--embed", action="store_true")
    p.add_argument("--ladder", default="default")
    p.set_defaults(fn=cmd_polygon)

    p = sub.add_parser("infgon", help="infinity-gon arc descriptions")
    p.add_argument("action", choices=["embed", "report", "noskip", "mutate"])
    p.add_argument("--arcs", required=True)
    p.add_argument("--at")
    p.add_argument("--level", type=int, default=0)
    p.add_argument("--ladder", default="default")
    p.set_defaults(fn=cmd_infgon)

    p = sub.add_parser("cpi", help="the older strip model and its embedding")
    p.add_argument("action", choices=["compat", "map", "inverse", "embed"])
    p.add_argument("--u")
    p.add_argument("--v")
    p.add_argument("--a")
    p.add_argument("--b")
    p.add_argument("--oracle")
    p.set_defaults(fn=cmd_cpi)

    p = sub.add_parser("arspace", help="strip coordinates and the derived classifier")
    p.add_argument("action", choices=["gamma", "classify", "svg"])
    p.add_argument("--interval", action="append", default=[])
    p.add_argument("--shift", type=int, default=0)
    p.add_argument("--quiver")
    p.set_defaults(fn=cmd_arspace)

    p = sub.add_parser("serve", help="HTTP workbench server")
    p.add_argument("--port", type=int, default=8787)
    p.add_argument("--data-dir", default=".ecluster-sessions")
    p.set_defaults(fn=cmd_serve)

    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        args.fn(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
