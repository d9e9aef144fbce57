"""Session-oriented HTTP service for playing the dollar game move by move.

Protocol (JSON bodies, documented in the README):

    POST /sessions                   body: Appendix divisor object
                                     {"graph": {...}, "degrees": {...}}
    GET  /sessions/{sid}             current state plus move history
    POST /sessions/{sid}/moves       {"kind": "lend"|"borrow"|"set_fire",
                                      "vertices": [...]}
    POST /sessions/{sid}/undo
    GET  /sessions/{sid}/analysis/{kind}?q=...   kind: hint | winnable |
                                     qreduce | rank | ewd_replay

Every response carries {session_id, move_index, chips, degree, won}; errors
come back as {code, message, path}.  Moves on one session are serialized;
analysis reads see the latest committed state.
"""

from __future__ import annotations

import json
import threading
import time
import uuid
from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field

from . import formats
from .configuration import Configuration
from .dhar import default_q, dhar_burning, ewd, q_reduce
from .divisor import Divisor, Move, apply_move
from .errors import (
    ChipGameError,
    KindMismatchError,
    NothingToUndoError,
    PayloadSemanticError,
    PayloadSyntaxError,
    UnknownSessionError,
)
from .graph import Multigraph
from .rank import rank

DEFAULT_SESSION_TTL = 24 * 3600.0


class MoveRequest(BaseModel):
    kind: str = Field(pattern="^(lend|borrow|set_fire)$")
    vertices: list[str]


class _Session:
    def __init__(self, sid: str, graph: Multigraph, initial: Divisor) -> None:
        self.id = sid
        self.graph = graph
        self.initial = initial
        self.moves: list[Move] = []
        self.states: list[Divisor] = [initial]
        self.created = time.time()
        self.updated = self.created
        self.lock = threading.Lock()

    @property
    def current(self) -> Divisor:
        return self.states[-1]

    @property
    def move_index(self) -> int:
        return len(self.moves)


def _state_payload(session: _Session) -> dict:
    current = session.current
    return {
        "session_id": session.id,
        "move_index": session.move_index,
        "chips": current.as_dict(),
        "degree": current.degree,
        "won": current.is_effective(),
    }


def _error_status(exc: ChipGameError) -> int:
    if isinstance(exc, UnknownSessionError):
        return 404
    if isinstance(exc, NothingToUndoError):
        return 409
    if isinstance(exc, (PayloadSemanticError, PayloadSyntaxError, KindMismatchError)):
        return 422
    return 400


def _error_code(exc: Exception) -> str:
    name = type(exc).__name__
    if name.endswith("Error"):
        name = name[: -len("Error")]
    out = []
    for i, ch in enumerate(name):
        if ch.isupper() and i > 0:
            out.append("_")
        out.append(ch.lower())
    return "".join(out)


def create_app(
    session_ttl: float = DEFAULT_SESSION_TTL,
    persist_dir: str | None = None,
    rank_vertex_limit: int = 10,
    rank_degree_limit: int = 30,
    frontend_dir: str | None = None,
) -> FastAPI:
    """Build the service.  Sessions live in memory with the given TTL; when
    persist_dir is set, initial payloads and move logs are appended there and
    replayed on startup.  Rank queries are bounded by the configured limits
    because rank computation does not scale."""
    app = FastAPI(title="chipgame", version="0.1.0")
    sessions: dict[str, _Session] = {}
    store_lock = threading.Lock()
    persist_path = Path(persist_dir) if persist_dir else None
    if persist_path:
        persist_path.mkdir(parents=True, exist_ok=True)

    # --- persistence ------------------------------------------------------

    def _log_path(sid: str) -> Path:
        return persist_path / f"{sid}.jsonl"

    def _persist_create(session: _Session) -> None:
        if not persist_path:
            return
        record = {"op": "create", "divisor": formats.divisor_to_obj(session.initial)}
        with _log_path(session.id).open("a", encoding="utf-8") as fh:
            fh.write(json.dumps(record, sort_keys=True) + "\n")

    def _persist_move(session: _Session, move: Move) -> None:
        if not persist_path:
            return
        record = {"op": "move", "kind": move.kind, "vertices": sorted(move.vertices)}
        with _log_path(session.id).open("a", encoding="utf-8") as fh:
            fh.write(json.dumps(record, sort_keys=True) + "\n")

    def _persist_undo(session: _Session) -> None:
        if not persist_path:
            return
        with _log_path(session.id).open("a", encoding="utf-8") as fh:
            fh.write(json.dumps({"op": "undo"}) + "\n")

    def _recover() -> None:
        if not persist_path:
            return
        for log_file in sorted(persist_path.glob("*.jsonl")):
            sid = log_file.stem
            session = None
            for line in log_file.read_text(encoding="utf-8").splitlines():
                record = json.loads(line)
                if record["op"] == "create":
                    divisor = formats.divisor_from_obj(record["divisor"])
                    session = _Session(sid, divisor.graph, divisor)
                elif session is not None and record["op"] == "move":
                    move = Move(record["kind"], frozenset(record["vertices"]))
                    session.moves.append(move)
                    session.states.append(apply_move(session.current, move))
                elif session is not None and record["op"] == "undo":
                    session.moves.pop()
                    session.states.pop()
            if session is not None:
                sessions[sid] = session

    _recover()

    # --- session bookkeeping ------------------------------------------------

    def _prune() -> None:
        now = time.time()
        with store_lock:
            expired = [sid for sid, s in sessions.items() if now - s.updated > session_ttl]
            for sid in expired:
                del sessions[sid]

    def _get_session(sid: str) -> _Session:
        _prune()
        session = sessions.get(sid)
        if session is None:
            raise UnknownSessionError(f"no session {sid!r}")
        return session

    # --- error shaping --------------------------------------------------------

    @app.exception_handler(ChipGameError)
    async def _domain_error(_request: Request, exc: ChipGameError):
        path = getattr(exc, "path", None) or getattr(exc, "line", None)
        return JSONResponse(
            status_code=_error_status(exc),
            content={
                "code": _error_code(exc),
                "message": str(exc),
                "path": str(path) if path is not None else "",
            },
        )

    @app.exception_handler(RequestValidationError)
    async def _validation_error(_request: Request, exc: RequestValidationError):
        first = exc.errors()[0] if exc.errors() else {}
        loc = ".".join(str(part) for part in first.get("loc", ()))
        return JSONResponse(
            status_code=422,
            content={
                "code": "validation_error",
                "message": first.get("msg", "invalid request"),
                "path": loc,
            },
        )

    # --- endpoints ---------------------------------------------------------------

    @app.get("/")
    def root():
        return {"service": "chipgame", "endpoints": "/sessions"}

    @app.post("/sessions", status_code=201)
    async def create_session(request: Request):
        try:
            payload = await request.json()
        except json.JSONDecodeError as exc:
            raise PayloadSyntaxError(f"invalid JSON body: {exc.msg}", exc.lineno) from exc
        divisor = formats.object_from_obj("divisor", payload)
        sid = uuid.uuid4().hex
        session = _Session(sid, divisor.graph, divisor)
        with store_lock:
            sessions[sid] = session
        _persist_create(session)
        return _state_payload(session)

    @app.get("/sessions/{sid}")
    def get_state(sid: str):
        session = _get_session(sid)
        with session.lock:
            payload = _state_payload(session)
            payload["history"] = [
                {
                    "kind": move.kind,
                    "vertices": sorted(move.vertices),
                    "chips": state.as_dict(),
                }
                for move, state in zip(session.moves, session.states[1:])
            ]
            payload["initial_chips"] = session.initial.as_dict()
            payload["graph"] = formats.graph_to_obj(session.graph)
        return payload

    @app.post("/sessions/{sid}/moves")
    def post_move(sid: str, move: MoveRequest):
        session = _get_session(sid)
        with session.lock:
            parsed = Move(move.kind, frozenset(move.vertices))
            for v in parsed.vertices:
                session.graph.require_vertex(v)
            session.states.append(apply_move(session.current, parsed))
            session.moves.append(parsed)
            session.updated = time.time()
        _persist_move(session, parsed)
        return _state_payload(session)

    @app.post("/sessions/{sid}/undo")
    def post_undo(sid: str):
        session = _get_session(sid)
        with session.lock:
            if not session.moves:
                raise NothingToUndoError("no moves to undo")
            session.moves.pop()
            session.states.pop()
            session.updated = time.time()
        _persist_undo(session)
        return _state_payload(session)

    def _hint(session: _Session, q: str) -> dict:
        current = session.current
        if current.is_effective():
            return {"kind": "none", "vertices": [], "rationale": "position already won"}
        config = Configuration(current, q)
        if not config.is_nonnegative():
            worst = min(
                (v for v in session.graph.vertices if v != q),
                key=lambda v: (current.chips(v), v),
            )
            return {
                "kind": "borrow_at",
                "vertices": [worst],
                "rationale": f"{worst} is deepest in debt; borrowing cannot hurt the others",
            }
        firing_set = sorted(dhar_burning(config).firing_set)
        if firing_set:
            return {
                "kind": "dhar_set",
                "vertices": firing_set,
                "rationale": "maximal set that can fire without going into debt",
            }
        return {
            "kind": "none",
            "vertices": [],
            "rationale": f"already {q}-reduced with debt at {q}: the game is unwinnable",
        }

    @app.get("/sessions/{sid}/analysis/{kind}")
    def analysis(sid: str, kind: str, q: str | None = None):
        session = _get_session(sid)
        with session.lock:
            current = session.current
            graph = session.graph
            base = _state_payload(session)
        q_name = graph.require_vertex(q) if q else default_q(graph)
        if kind == "state":
            result: dict = {}
        elif kind == "hint":
            result = _hint(session, q_name)
        elif kind == "winnable":
            result = {"winnable": ewd(graph, current, q=q_name).winnable, "q": q_name}
        elif kind == "qreduce":
            reduced, script = q_reduce(current, q_name)
            result = {"q": q_name, "reduced": reduced.as_dict(), "script": script.as_dict()}
        elif kind == "rank":
            if graph.num_vertices > rank_vertex_limit or abs(current.degree) > rank_degree_limit:
                raise ChipGameError("too large for interactive analysis")
            r = rank(current)
            result = {
                "rank": r.rank,
                "witness": r.witness.as_dict() if r.witness else None,
            }
        elif kind == "ewd_replay":
            outcome = ewd(graph, current, q=q_name)
            result = {
                "q": q_name,
                "winnable": outcome.winnable,
                "steps": [
                    {"iteration": s.iteration, "fired": list(s.fired), "chips": s.chips}
                    for s in outcome.log
                ],
            }
        else:
            raise ChipGameError(f"unknown analysis kind {kind!r}")
        base["kind"] = kind
        base["result"] = result
        return base

    if frontend_dir and Path(frontend_dir).is_dir():
        from fastapi.staticfiles import StaticFiles

        app.mount("/ui", StaticFiles(directory=frontend_dir, html=True), name="ui")

    return app
