"""HTTP session service around the angulation core.

Sessions live in memory, keyed by random ids.  Each holds an initial
angulation, the current one, and the rotation history; replaying the
history from the initial angulation always reproduces the current state.
Rotations and undos take the session's lock, so concurrent clients see a
consistent sequence.  Core calls are pure, nothing is persisted.
"""

from __future__ import annotations

import hashlib
import json
import secrets
import threading

from fastapi import FastAPI, HTTPException, Request
from fastapi.encoders import jsonable_encoder
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse, PlainTextResponse, Response

from angulate.correspondence import angulation_quiver
from angulate.polygon import (
    angulation_from_json,
    angulation_to_json,
    angulation_to_svg,
    fan_angulation,
    rotate,
    rotated_diagonal,
)
from angulate.presentation import presentation_json, presentation_of, presentation_text
from angulate.quiver import quiver_to_json

__all__ = ["app", "create_app"]


def _canonical_hash(document):
    payload = json.dumps(document, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(payload.encode()).hexdigest()


class _Session:
    def __init__(self, session_id, angulation):
        self.id = session_id
        self.initial = angulation
        self.current = angulation
        self.past = []
        self.history = []
        self.lock = threading.Lock()

    def state(self):
        ang = self.current
        quiver = angulation_quiver(ang)
        angulation = angulation_to_json(ang)
        quiver_doc = quiver_to_json(quiver)
        return {
            "id": self.id,
            "n": ang.n,
            "m": ang.m,
            "angulation": angulation,
            "quiver": quiver_doc,
            "presentation": presentation_json(presentation_of(quiver)),
            "history": [dict(entry) for entry in self.history],
            "state_hash": _canonical_hash(angulation),
            "quiver_hash": _canonical_hash(quiver_doc),
        }


def _parse_diagonal(payload):
    if not isinstance(payload, dict) or "diagonal" not in payload:
        raise HTTPException(status_code=400, detail="body must carry a diagonal")
    raw = payload["diagonal"]
    if (
        not isinstance(raw, (list, tuple))
        or len(raw) != 2
        or not all(isinstance(v, int) and not isinstance(v, bool) for v in raw)
    ):
        raise HTTPException(status_code=400, detail="diagonal must be a pair of vertices")
    return tuple(sorted(raw))


def create_app() -> FastAPI:
    app = FastAPI(title="angulate session service")
    # browser frontends are served from their own origin
    app.add_middleware(CORSMiddleware, allow_origins=["*"], allow_methods=["*"], allow_headers=["*"])
    sessions: dict[str, _Session] = {}
    registry = threading.Lock()

    @app.exception_handler(RequestValidationError)
    async def malformed(request: Request, exc: RequestValidationError):
        return JSONResponse(status_code=400, content={"detail": jsonable_encoder(exc.errors())})

    def lookup(session_id) -> _Session:
        with registry:
            session = sessions.get(session_id)
        if session is None:
            raise HTTPException(status_code=404, detail="unknown session")
        return session

    @app.post("/sessions", status_code=201)
    def create_session(payload: dict):
        if "angulation" in payload:
            try:
                ang = angulation_from_json(payload["angulation"])
            except ValueError as exc:
                raise HTTPException(status_code=400, detail=str(exc))
        else:
            n, m = payload.get("n"), payload.get("m")
            try:
                ang = fan_angulation(n, m)
            except (ValueError, TypeError) as exc:
                raise HTTPException(status_code=400, detail=str(exc))
        session = _Session(secrets.token_hex(8), ang)
        with registry:
            sessions[session.id] = session
        return {"id": session.id, "state": session.state()}

    @app.get("/sessions/{session_id}")
    def get_session(session_id: str):
        session = lookup(session_id)
        with session.lock:
            return session.state()

    @app.post("/sessions/{session_id}/rotate")
    def rotate_diagonal(session_id: str, payload: dict):
        session = lookup(session_id)
        diagonal = _parse_diagonal(payload)
        with session.lock:
            if diagonal not in session.current.diagonals:
                raise HTTPException(status_code=422, detail=f"{list(diagonal)} is not in the angulation")
            image = rotated_diagonal(session.current, diagonal)
            session.past.append(session.current)
            session.current = rotate(session.current, diagonal)
            session.history.append({"diagonal": list(diagonal), "image": list(image)})
            state = session.state()
        state["rotated"] = {"diagonal": list(diagonal), "image": list(image)}
        return state

    @app.post("/sessions/{session_id}/undo")
    def undo(session_id: str):
        session = lookup(session_id)
        with session.lock:
            if not session.past:
                raise HTTPException(status_code=400, detail="nothing to undo")
            session.current = session.past.pop()
            session.history.pop()
            return session.state()

    @app.get("/sessions/{session_id}/svg")
    def svg(session_id: str):
        session = lookup(session_id)
        with session.lock:
            drawing = angulation_to_svg(session.current)
        return Response(content=drawing, media_type="image/svg+xml")

    @app.get("/sessions/{session_id}/presentation")
    def presentation(session_id: str, format: str = "json"):
        if format not in ("json", "text"):
            raise HTTPException(status_code=400, detail="format must be json or text")
        session = lookup(session_id)
        with session.lock:
            P = presentation_of(angulation_quiver(session.current))
        if format == "text":
            return PlainTextResponse(presentation_text(P))
        return presentation_json(P)

    return app


app = create_app()
