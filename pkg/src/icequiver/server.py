"""Local HTTP service backing the explorer.

One Session per client token; a session serializes its requests behind a
lock, keeps an undo stack, and recomputes caches from the collection on
every change.  All state transitions go through the same module
operations as the CLI; responses share the CLI's serializer.
"""
from __future__ import annotations

import json
import threading
from dataclasses import dataclass, field
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from pathlib import Path
from typing import Optional
from urllib.parse import parse_qs, urlparse

from . import serialize
from .cuts import Cut, cut_mutation, enumerate_cuts, is_cut, is_homogeneous_cut
from .errors import IceQuiverError
from .quiver import (
    geometric_exchange,
    orbit_exchange,
    quiver_from_collection,
    sigma_orbit,
    underline,
)
from .subsets import Collection, is_symmetric, subset


@dataclass
class Session:
    collection: Optional[Collection] = None
    cut: Optional[Cut] = None
    undo_stack: list = field(default_factory=list)
    lock: threading.Lock = field(default_factory=threading.Lock)
    _quiver: object = None
    _qp: object = None

    def load(self, coll: Collection):
        self._push()
        self.collection = coll
        self.cut = None
        self._refresh()

    def _push(self):
        if self.collection is not None:
            self.undo_stack.append((self.collection, self.cut))

    def undo(self):
        if not self.undo_stack:
            raise IceQuiverError("nothing to undo")
        self.collection, self.cut = self.undo_stack.pop()
        self._refresh()

    def _refresh(self):
        if self.collection is None:
            self._quiver = self._qp = None
            return
        self._quiver = quiver_from_collection(self.collection)
        self._qp = underline(self._quiver)

    def require(self) -> Collection:
        if self.collection is None:
            raise IceQuiverError("no collection loaded")
        return self.collection

    def mutate(self, label):
        coll = self.require()
        new = geometric_exchange(coll, label)
        self._push()
        self.collection = new
        self.cut = None
        self._refresh()

    def orbit_mutate(self, label):
        coll = self.require()
        new = orbit_exchange(coll, label)
        self._push()
        self.collection = new
        self.cut = None
        self._refresh()

    def set_cut(self, arrow_ids):
        self.require()
        self._push()
        self.cut = Cut(frozenset(int(a) for a in arrow_ids))

    def cut_mutate(self, label):
        self.require()
        if self.cut is None:
            raise IceQuiverError("no cut selected")
        new = cut_mutation(self._qp, self.cut, label)
        self._push()
        self.cut = new

    def state_json(self) -> dict:
        coll = self.require()
        q = self._quiver
        qp = self._qp
        symmetric = is_symmetric(coll)
        mutability = [
            {
                "label": list(lbl.elems),
                "valency": q.valency(lbl),
                "mutable": q.valency(lbl) == 4,
            }
            for lbl in sorted(q.internal_labels())
        ]
        orbits = []
        if symmetric:
            seen = set()
            for lbl in sorted(coll.internal_members()):
                orb = sigma_orbit(coll, lbl)
                key = frozenset(orb)
                if key in seen:
                    continue
                seen.add(key)
                orbit_set = set(orb)
                independent = not any(
                    a.src in orbit_set and a.tgt in orbit_set for a in q.arrows
                )
                mutable = all(q.valency(x) == 4 for x in orb)
                orbits.append(
                    {
                        "labels": [list(x.elems) for x in orb],
                        "independent": independent,
                        "mutable": mutable and independent,
                    }
                )
        cut_state = None
        if self.cut is not None:
            valid = is_cut(qp, self.cut.arrow_ids)
            strict = []
            for lbl, _pos in qp.vertices:
                ins = [a for a in qp.arrows if a.tgt == lbl]
                outs = [a for a in qp.arrows if a.src == lbl]
                src = bool(ins) and all(a.id in self.cut for a in ins) and not any(
                    a.id in self.cut for a in outs
                )
                snk = bool(outs) and all(a.id in self.cut for a in outs) and not any(
                    a.id in self.cut for a in ins
                )
                if src or snk:
                    strict.append(
                        {"label": list(lbl.elems), "kind": "source" if src else "sink"}
                    )
            cut_state = {
                "arrows": self.cut.sorted_ids(),
                "valid": valid,
                "homogeneous": bool(
                    valid and symmetric and is_homogeneous_cut(qp, self.cut)
                ),
                "strictVertices": strict,
            }
        return {
            "collection": serialize.collection_to_json(coll),
            "quiver": serialize.quiver_to_json(q),
            "report": serialize.report_json(coll, self.cut),
            "mutability": mutability,
            "orbits": orbits,
            "cut": cut_state,
            "undoDepth": len(self.undo_stack),
        }


class _App:
    def __init__(self, assets: Optional[str], seed: Optional[Collection]):
        self.sessions: dict[str, Session] = {}
        self.global_lock = threading.Lock()
        self.assets = Path(assets) if assets else None
        self.seed = seed

    def session(self, token: str) -> Session:
        with self.global_lock:
            if token not in self.sessions:
                s = Session()
                if self.seed is not None:
                    s.collection = self.seed
                    s._refresh()
                self.sessions[token] = s
            return self.sessions[token]


def _label_from_payload(payload, coll) -> object:
    lbl = payload.get("label")
    if lbl is None:
        raise IceQuiverError("payload needs a 'label'")
    return subset([int(x) for x in lbl], coll.n)


class Handler(BaseHTTPRequestHandler):
    app: _App = None

    def log_message(self, *args):  # quiet
        pass

    def _token(self) -> str:
        q = parse_qs(urlparse(self.path).query)
        if "token" in q:
            return q["token"][0]
        return self.headers.get("X-Session-Token", "default")

    def _send(self, code: int, body: bytes, ctype="application/json"):
        self.send_response(code)
        self.send_header("Content-Type", ctype)
        self.send_header("Content-Length", str(len(body)))
        self.end_headers()
        self.wfile.write(body)

    def _json(self, code: int, obj):
        self._send(code, serialize.dumps(obj).encode())

    def _error(self, exc: Exception):
        self._json(400, {"error": type(exc).__name__, "message": str(exc)})

    def _body(self) -> dict:
        length = int(self.headers.get("Content-Length", 0))
        if not length:
            return {}
        return json.loads(self.rfile.read(length))

    def do_GET(self):
        path = urlparse(self.path).path
        sess = self.app.session(self._token())
        try:
            if path == "/api/state":
                with sess.lock:
                    self._json(200, sess.state_json())
            elif path == "/api/report":
                with sess.lock:
                    self._json(200, serialize.report_json(sess.require(), sess.cut))
            elif path == "/api/cuts":
                with sess.lock:
                    qp = underline(quiver_from_collection(sess.require()))
                    cuts = enumerate_cuts(qp)
                    self._json(
                        200,
                        {"count": len(cuts), "cuts": [serialize.cut_to_json(c) for c in cuts]},
                    )
            else:
                self._static(path)
        except IceQuiverError as exc:
            self._error(exc)

    def _static(self, path: str):
        if self.app.assets is None:
            self._json(404, {"error": "NotFound", "message": "no assets directory"})
            return
        rel = "index.html" if path in ("", "/") else path.lstrip("/")
        target = (self.app.assets / rel).resolve()
        if not str(target).startswith(str(self.app.assets.resolve())) or not target.is_file():
            self._json(404, {"error": "NotFound", "message": path})
            return
        ctype = {
            ".html": "text/html",
            ".js": "text/javascript",
            ".css": "text/css",
            ".json": "application/json",
            ".svg": "image/svg+xml",
        }.get(target.suffix, "application/octet-stream")
        self._send(200, target.read_bytes(), ctype)

    def do_POST(self):
        path = urlparse(self.path).path
        sess = self.app.session(self._token())
        try:
            payload = self._body()
            with sess.lock:
                if path == "/api/load":
                    coll = serialize.collection_from_json(
                        payload.get("collection", payload)
                    )
                    sess.load(coll)
                elif path == "/api/mutate":
                    sess.mutate(_label_from_payload(payload, sess.require()))
                elif path == "/api/orbit-mutate":
                    sess.orbit_mutate(_label_from_payload(payload, sess.require()))
                elif path == "/api/cut":
                    sess.set_cut(payload.get("arrows", []))
                elif path == "/api/cut-mutate":
                    sess.cut_mutate(_label_from_payload(payload, sess.require()))
                elif path == "/api/undo":
                    sess.undo()
                else:
                    self._json(404, {"error": "NotFound", "message": path})
                    return
                self._json(200, sess.state_json())
        except IceQuiverError as exc:
            self._error(exc)
        except (KeyError, ValueError, TypeError) as exc:
            self._json(400, {"error": "BadRequest", "message": str(exc)})


def make_server(port: int, assets: Optional[str] = None, seed: Optional[Collection] = None):
    app = _App(assets, seed)
    handler = type("BoundHandler", (Handler,), {"app": app})
    return ThreadingHTTPServer(("127.0.0.1", port), handler)


def run_server(port: int, assets: Optional[str] = None, seed: Optional[Collection] = None):
    httpd = make_server(port, assets, seed)
    print(f"serving on http://127.0.0.1:{port}")
    try:
        httpd.serve_forever()
    finally:
        httpd.server_close()
