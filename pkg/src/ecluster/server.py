"""Serve mode: sessions over HTTP/JSON for the explorer UI.

Sessions are persisted as JSON files under a data directory; replaying a
session's history from its initial object reproduces its current state
(tested), and per-session writes are serialized by a lock.  Concurrent
reads are fine.
"""

from __future__ import annotations

import json
import threading
import uuid
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from pathlib import Path

from . import arspace, infgon, polygon
from .jsonio import arcset_from_json, arcset_to_json, format_interval, parse_interval
from .clusters import build_projective_cluster
from .line import DefaultLadder
from .mutation import NotMutable, mutate

_LADDER = DefaultLadder()


class SessionError(Exception):
    def __init__(self, message, status):
        super().__init__(message)
        self.status = status


def _gamma_doc(m):
    p = arspace.gamma_b(m)
    return {
        "interval": format_interval(m),
        "alpha": p.alpha,
        "beta": p.beta,
        "position": p.position,
    }


def _fresh_session(body: dict) -> dict:
    kind = body.get("kind")
    if kind == "polygon":
        n = int(body.get("n", 2))
        if not 1 <= n <= 10:
            raise SessionError("polygon size n must be in 1..10", 400)
        tri = polygon.Triangulation.fan(n)
        initial = sorted(repr(d) for d in tri.diagonals)
    elif kind == "infgon":
        arcs = body.get("arcs")
        if arcs is None:
            raise SessionError("infgon session needs an 'arcs' description", 400)
        desc = arcset_from_json({"schemaVersion": 1, **arcs})
        try:
            desc.validate()
        except infgon.MalformedDescription as exc:
            raise SessionError(str(exc), 400) from exc
        initial = arcset_to_json(desc)
    elif kind == "projectives":
        initial = {"added": [], "removed": []}
    else:
        raise SessionError(f"unknown session kind {kind!r}", 400)
    return {
        "schemaVersion": 1,
        "id": uuid.uuid4().hex[:12],
        "kind": kind,
        "n": body.get("n"),
        "initial": initial,
        "history": [],
        "config": {"ladder": "default"},
    }


def _polygon_state(doc: dict) -> polygon.Triangulation:
    tri = polygon.Triangulation(
        int(doc["n"]), [polygon.parse_diagonal(t) for t in doc["initial"]]
    )
    for step in doc["history"]:
        tri, added = polygon.flip(tri, polygon.parse_diagonal(step["removed"]))
        if repr(added) != step["added"]:
            raise SessionError("history replay diverged", 500)
    return tri


def _arcset_state(doc: dict) -> infgon.ArcSetDescription:
    desc = arcset_from_json(doc["initial"])
    for step in doc["history"]:
        arc = infgon.parse_arc(step["removed"])
        desc, added = infgon.mutate_arc(desc, arc)
        if repr(added) != step["added"]:
            raise SessionError("history replay diverged", 500)
    return desc


def _projectives_state(doc: dict):
    desc = build_projective_cluster(_LADDER)
    for step in doc["history"]:
        result = mutate(desc, parse_interval(step["removed"]))
        if format_interval(result.added) != step["added"]:
            raise SessionError("history replay diverged", 500)
        desc = result.new_cluster
    return desc


def _current_view(doc: dict) -> dict:
    kind = doc["kind"]
    if kind == "polygon":
        tri = _polygon_state(doc)
        return {"diagonals": sorted(repr(d) for d in tri.diagonals)}
    if kind == "infgon":
        return arcset_to_json(_arcset_state(doc))
    desc = _projectives_state(doc)
    return {
        "added": [format_interval(a) for a in desc.added],
        "removed": [format_interval(r) for r in sorted(desc.removed)],
    }


def _embedding_view(doc: dict) -> dict:
    kind = doc["kind"]
    if kind == "polygon":
        tri = _polygon_state(doc)
        return {
            "schemaVersion": 1,
            "kind": kind,
            "elements": [
                {"label": repr(d), **_gamma_doc(polygon.embed_diagonal(_LADDER, d))}
                for d in sorted(tri.diagonals)
            ],
        }
    if kind == "infgon":
        desc = _arcset_state(doc)
        elements = [
            {"label": repr(a), **_gamma_doc(infgon.embed_arc(_LADDER, a))}
            for a in sorted(desc.finite)
        ]
        rep = infgon.fountain_report(desc)
        return {
            "schemaVersion": 1,
            "kind": kind,
            "elements": elements,
            "fountain": None if rep.kind == infgon.LOCALLY_FINITE else {"m": rep.m, "n": rep.n},
        }
    desc = _projectives_state(doc)
    elements = [{"label": format_interval(a), **_gamma_doc(a)} for a in desc.added]
    return {"schemaVersion": 1, "kind": kind, "elements": elements}


def _mutate_session(doc: dict, at: str) -> dict:
    kind = doc["kind"]
    if kind == "polygon":
        tri = _polygon_state(doc)
        d = polygon.parse_diagonal(at)
        if d not in tri.diagonals:
            raise SessionError(f"{at} is not in the current triangulation", 404)
        emb = polygon.embed_triangulation(_LADDER, tri)
        result = mutate(emb, polygon.embed_diagonal(_LADDER, d))
        _, added = polygon.flip(tri, d)
        if result.added != polygon.embed_diagonal(_LADDER, added):
            raise SessionError("engine and flip disagree", 500)
        step = {
            "removed": repr(d),
            "added": repr(added),
            "intervalRemoved": format_interval(result.removed),
            "intervalAdded": format_interval(result.added),
            "middle": [format_interval(m) for m in result.middle],
            "rectangle": [
                _gamma_doc(result.removed),
                *(_gamma_doc(m) for m in result.middle),
                _gamma_doc(result.added),
            ],
        }
    elif kind == "infgon":
        desc = _arcset_state(doc)
        arc = infgon.parse_arc(at)
        try:
            emb = infgon.embed_arc_set(_LADDER, desc)
            result = mutate(emb, infgon.embed_arc(_LADDER, arc))
            _, added = infgon.mutate_arc(desc, arc)
        except infgon.NotMutableArc as exc:
            raise SessionError(str(exc), 409) from exc
        if result.added != infgon.embed_arc(_LADDER, added):
            raise SessionError("engine and arc exchange disagree", 500)
        step = {
            "removed": repr(arc),
            "added": repr(added),
            "intervalRemoved": format_interval(result.removed),
            "intervalAdded": format_interval(result.added),
            "middle": [format_interval(m) for m in result.middle],
            "rectangle": [
                _gamma_doc(result.removed),
                *(_gamma_doc(m) for m in result.middle),
                _gamma_doc(result.added),
            ],
        }
    else:
        desc = _projectives_state(doc)
        result = mutate(desc, parse_interval(at))
        step = {
            "removed": format_interval(result.removed),
            "added": format_interval(result.added),
            "middle": [format_interval(m) for m in result.middle],
            "rectangle": [
                _gamma_doc(result.removed),
                *(_gamma_doc(m) for m in result.middle),
                _gamma_doc(result.added),
            ],
        }
    doc["history"].append(step)
    return step


class SessionStore:
    def __init__(self, data_dir):
        self.dir = Path(data_dir)
        self.dir.mkdir(parents=True, exist_ok=True)
        self._locks: dict[str, threading.Lock] = {}
        self._guard = threading.Lock()

    def lock(self, sid: str) -> threading.Lock:
        with self._guard:
            return self._locks.setdefault(sid, threading.Lock())

    def path(self, sid: str) -> Path:
        return self.dir / f"{sid}.json"

    def load(self, sid: str) -> dict:
        p = self.path(sid)
        if not p.exists():
            raise SessionError(f"no session {sid}", 404)
        return json.loads(p.read_text())

    def save(self, doc: dict) -> None:
        self.path(doc["id"]).write_text(json.dumps(doc, indent=1, sort_keys=True))


def make_handler(store: SessionStore):
    class Handler(BaseHTTPRequestHandler):
        def log_message(self, *args):
            pass

        def _send(self, status, doc):
            payload = json.dumps(doc, sort_keys=True).encode()
            self.send_response(status)
            self.send_header("Content-Type", "application/json")
            self.send_header("Access-Control-Allow-Origin", "*")
            self.send_header("Content-Length", str(len(payload)))
            self.end_headers()
            self.wfile.write(payload)

        def _send_svg(self, text):
            payload = text.encode()
            self.send_response(200)
            self.send_header("Content-Type", "image/svg+xml")
            self.send_header("Access-Control-Allow-Origin", "*")
            self.send_header("Content-Length", str(len(payload)))
            self.end_headers()
            self.wfile.write(payload)

        def _body(self):
            length = int(self.headers.get("Content-Length") or 0)
            if not length:
                return {}
            try:
                return json.loads(self.rfile.read(length))
            except json.JSONDecodeError as exc:
                raise SessionError(f"bad JSON body: {exc}", 400) from exc

        def _route(self):
            parts = [p for p in self.path.split("?")[0].split("/") if p]
            method = self.command
            if method == "POST" and parts == ["session"]:
                doc = _fresh_session(self._body())
                store.save(doc)
                return 200, {**doc, "current": _current_view(doc)}
            if len(parts) >= 2 and parts[0] == "session":
                sid = parts[1]
                rest = parts[2:]
                if method == "GET" and not rest:
                    doc = store.load(sid)
                    return 200, {**doc, "current": _current_view(doc)}
                if method == "GET" and rest == ["embedding"]:
                    return 200, _embedding_view(store.load(sid))
                if method == "GET" and rest == ["arspace-svg"]:
                    doc = store.load(sid)
                    emb = _embedding_view(doc)
                    pts = [
                        (
                            arspace.ARPoint(e["alpha"], e["beta"], e["position"]),
                            e["label"],
                        )
                        for e in emb["elements"]
                    ]
                    hl = []
                    if doc["history"]:
                        hl = [
                            arspace.ARPoint(c["alpha"], c["beta"], c["position"])
                            for c in doc["history"][-1]["rectangle"]
                        ]
                    return ("svg", arspace.strip_svg(pts, highlight=hl))
                if method == "POST" and rest == ["mutate"]:
                    with store.lock(sid):
                        doc = store.load(sid)
                        body = self._body()
                        at = body.get("at")
                        if not at:
                            raise SessionError("mutate needs 'at'", 400)
                        try:
                            step = _mutate_session(doc, at)
                        except NotMutable as exc:
                            raise SessionError(str(exc), 409) from exc
                        store.save(doc)
                        return 200, {
                            "schemaVersion": 1,
                            **step,
                            "current": _current_view(doc),
                        }
                if method == "POST" and rest == ["undo"]:
                    with store.lock(sid):
                        doc = store.load(sid)
                        if not doc["history"]:
                            raise SessionError("nothing to undo", 409)
                        undone = doc["history"].pop()
                        store.save(doc)
                        return 200, {
                            "schemaVersion": 1,
                            "undone": undone,
                            "current": _current_view(doc),
                        }
            raise SessionError(f"no route {method} {self.path}", 404)

        def _handle(self):
            try:
                result = self._route()
            except SessionError as exc:
                self._send(exc.status, {"error": str(exc)})
                return
            except (ValueError, KeyError) as exc:
                self._send(400, {"error": str(exc)})
                return
            if result[0] == "svg":
                self._send_svg(result[1])
            else:
                self._send(*result)

        def do_GET(self):
            self._handle()

        def do_POST(self):
            self._handle()

    return Handler


def make_server(port: int = 8787, data_dir=".ecluster-sessions") -> ThreadingHTTPServer:
    store = SessionStore(data_dir)
    return ThreadingHTTPServer(("127.0.0.1", port), make_handler(store))


def serve(port: int = 8787, data_dir=".ecluster-sessions"):
    httpd = make_server(port, data_dir)
    print(f"serving on http://127.0.0.1:{port} (data in {data_dir})")
    try:
        httpd.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        httpd.server_close()
