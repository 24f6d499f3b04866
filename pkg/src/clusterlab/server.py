"""JSON-over-HTTP session server for the explorer UI and scripts.

Sessions live in memory only; each one is guarded by its own lock so
requests on a session are serialized while distinct sessions proceed
concurrently.  All bodies use the canonical JSON formats.
"""

from __future__ import annotations

import json
import threading
import uuid
from dataclasses import dataclass, field
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from typing import Any

from . import jsonio
from .cluster import Seed, mutate_seed
from .laurent import NotDivisible
from .linalg import IntMatrix
from .quantum import QuantumSeed, mutate_quantum_seed
from .spectra import enumerate_affine_strata


@dataclass
class Session:
    """One exploration session: current seed, undo stack, optional Λ."""

    current: Seed | QuantumSeed
    lam: IntMatrix | None
    undo_stack: list[Seed | QuantumSeed] = field(default_factory=list)
    lock: threading.Lock = field(default_factory=threading.Lock)

    def seed_json(self) -> dict[str, Any]:
        if isinstance(self.current, QuantumSeed):
            return jsonio.quantum_seed_to_json(self.current)
        return jsonio.seed_to_json(self.current)


class SessionStore:
    def __init__(self) -> None:
        self._sessions: dict[str, Session] = {}
        self._lock = threading.Lock()

    def create(self, session: Session) -> str:
        sid = uuid.uuid4().hex[:12]
        with self._lock:
            self._sessions[sid] = session
        return sid

    def get(self, sid: str) -> Session | None:
        with self._lock:
            return self._sessions.get(sid)


class ApiError(Exception):
    def __init__(self, status: int, message: str) -> None:
        super().__init__(message)
        self.status = status


class Handler(BaseHTTPRequestHandler):
    store: SessionStore  # set on the server class

    # -- plumbing ------------------------------------------------------

    def log_message(self, fmt: str, *args: Any) -> None:  # quiet by default
        pass

    def _reply(self, status: int, payload: Any) -> None:
        body = json.dumps(payload, sort_keys=True).encode()
        self.send_response(status)
        self.send_header("Content-Type", "application/json")
        self.send_header("Content-Length", str(len(body)))
        self.send_header("Access-Control-Allow-Origin", "*")
        self.end_headers()
        self.wfile.write(body)

    def _read_json(self) -> Any:
        length = int(self.headers.get("Content-Length") or 0)
        raw = self.rfile.read(length) if length else b""
        if not raw:
            raise ApiError(400, "empty body")
        try:
            return json.loads(raw)
        except json.JSONDecodeError as exc:
            raise ApiError(400, f"malformed JSON: {exc}")

    def _session(self, sid: str) -> Session:
        session = self.store.get(sid)
        if session is None:
            raise ApiError(404, "unknown session")
        return session

    # -- routes ----------------------------------------------------------

    def do_GET(self) -> None:
        try:
            parts = [p for p in self.path.split("/") if p]
            if parts == ["health"]:
                self._reply(200, "ok")
            elif len(parts) == 2 and parts[0] == "session":
                session = self._session(parts[1])
                with session.lock:
                    self._reply(200, session.seed_json())
            elif len(parts) == 3 and parts[0] == "session" and parts[2] == "strata":
                session = self._session(parts[1])
                with session.lock:
                    lam = session.lam
                    if lam is None and isinstance(session.current, QuantumSeed):
                        lam = session.current.lam
                    if lam is None:
                        raise ApiError(400, "session has no bracket matrix")
                    strata = enumerate_affine_strata(lam)
                    self._reply(200, jsonio.strata_to_json(strata))
            else:
                raise ApiError(404, "no such route")
        except ApiError as exc:
            self._reply(exc.status, {"error": str(exc)})

    def do_POST(self) -> None:
        try:
            parts = [p for p in self.path.split("/") if p]
            if parts == ["session"]:
                self._create_session()
            elif parts == ["bruhat", "build"]:
                self._bruhat_build()
            elif len(parts) == 3 and parts[0] == "session" and parts[2] == "mutate":
                self._mutate(parts[1])
            elif len(parts) == 3 and parts[0] == "session" and parts[2] == "undo":
                self._undo(parts[1])
            else:
                raise ApiError(404, "no such route")
        except ApiError as exc:
            self._reply(exc.status, {"error": str(exc)})

    # -- handlers ----------------------------------------------------------

    def _create_session(self) -> None:
        data = self._read_json()
        try:
            if jsonio.is_quantum_seed_json(data):
                seed: Seed | QuantumSeed = jsonio.quantum_seed_from_json(data)
                lam = None
            else:
                seed = jsonio.seed_from_json(data)
                lam = (
                    jsonio.int_matrix_from_json(data["lambda"])
                    if "lambda" in data
                    else None
                )
        except (KeyError, ValueError, TypeError) as exc:
            raise ApiError(400, f"bad seed: {exc}")
        session = Session(seed, lam)
        sid = self.store.create(session)
        self._reply(200, {"id": sid, "seed": session.seed_json()})

    def _bruhat_build(self) -> None:
        data = self._read_json()
        try:
            word = str(data["word"])
            rank = int(data["rank"])
        except (KeyError, ValueError, TypeError) as exc:
            raise ApiError(400, f"bad build request: {exc}")
        from .cli import _build_bruhat

        try:
            _, _, payload = _build_bruhat(word, rank)
        except (ValueError, IndexError) as exc:
            raise ApiError(400, f"bad double word: {exc}")
        seed = jsonio.seed_from_json(payload)
        lam = jsonio.int_matrix_from_json(payload["lambda"])
        session = Session(seed, lam)
        sid = self.store.create(session)
        self._reply(
            200,
            {
                "id": sid,
                "seed": session.seed_json(),
                "lambda": payload["lambda"],
                "lambda_scale": payload["lambda_scale"],
                "exchangeable_vertices": payload["exchangeable_vertices"],
                "vertex_order": payload["vertex_order"],
            },
        )

    def _mutate(self, sid: str) -> None:
        session = self._session(sid)
        data = self._read_json()
        if not isinstance(data, dict) or "k" not in data:
            raise ApiError(400, "body must carry a mutation index k")
        try:
            k = int(data["k"])
        except (ValueError, TypeError):
            raise ApiError(400, "k must be an integer")
        with session.lock:
            m = session.current.m
            if not 1 <= k <= m:
                raise ApiError(409, f"mutation index {k} out of range [1,{m}]")
            try:
                if isinstance(session.current, QuantumSeed):
                    new = mutate_quantum_seed(session.current, k - 1)
                else:
                    new = mutate_seed(session.current, k - 1)
            except NotDivisible as exc:
                raise ApiError(409, f"NotDivisible: {exc}")
            session.undo_stack.append(session.current)
            session.current = new
            self._reply(200, session.seed_json())

    def _undo(self, sid: str) -> None:
        session = self._session(sid)
        with session.lock:
            if not session.undo_stack:
                raise ApiError(409, "nothing to undo")
            session.current = session.undo_stack.pop()
            self._reply(200, session.seed_json())


def make_server(port: int) -> ThreadingHTTPServer:
    store = SessionStore()
    handler = type("BoundHandler", (Handler,), {"store": store})
    return ThreadingHTTPServer(("127.0.0.1", port), handler)


def serve(port: int) -> None:
    server = make_server(port)
    print(f"clusterlab serving on 127.0.0.1:{port}", flush=True)
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        server.shutdown()
