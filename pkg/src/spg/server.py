"""HTTP session API serving the interactive play client.

All game logic stays here: the client only renders states it is given.
Sessions live in memory with an idle TTL; operations on one session are
serialized by a per-session lock while distinct sessions run in parallel.
"""

from __future__ import annotations

import threading
import time
import uuid
from dataclasses import dataclass, field

from fastapi import FastAPI, HTTPException
from fastapi.responses import JSONResponse

from . import engine
from .dispatch import choose_algorithm, solve_with
from .errors import IllegalMove, SchemaError, SpgError
from .graph import GameGraph, load_and_validate
from .rules import (
    GameState,
    Move,
    Parity,
    apply_move,
    initial_state,
    is_terminal,
    legal_moves,
)

SESSION_TTL_SECONDS = 3600.0
HINTED_ALGORITHMS = {"tree", "dag", "cactus", "directed-cactus"}


@dataclass
class Session:
    sid: str
    graph: GameGraph
    state: GameState
    mode: str                  # "engine" (engine plays one side) or "human"
    human_side: Parity
    hints: bool
    evaluator: engine.Evaluator | None
    history: list[int] = field(default_factory=list)
    lock: threading.Lock = field(default_factory=threading.Lock)
    touched: float = field(default_factory=time.monotonic)


def _cost_pair_json(pair) -> dict:
    return {"decider": pair.decider, "follower": pair.follower}


def _state_json(g: GameGraph, state: GameState) -> dict:
    return {
        "current": state.current,
        "parity": int(state.parity),
        "to_move": "A" if state.parity == Parity.A_TO_MOVE else "B",
        "visited": sorted([v, int(p)] for v, p in state.visited),
        "cost_a": state.cost_a,
        "cost_b": state.cost_b,
        "terminal": is_terminal(state, g),
    }


def _solution_json(sol) -> dict:
    return {
        "cost_a": sol.cost_a,
        "cost_b": sol.cost_b,
        "walk": list(sol.walk),
        "payers": list(sol.payers),
        "node_count": sol.node_count,
        "algorithm": sol.algorithm,
    }


def _load_document(payload) -> GameGraph:
    if not isinstance(payload, dict):
        raise SchemaError("request body must be a JSON object")
    try:
        return load_and_validate(payload)
    except SpgError:
        raise


def create_app() -> FastAPI:
    app = FastAPI(title="shortest path game service")
    sessions: dict[str, Session] = {}
    registry_lock = threading.Lock()

    def prune(now: float) -> None:
        stale = [sid for sid, s in sessions.items()
                 if now - s.touched > SESSION_TTL_SECONDS]
        for sid in stale:
            sessions.pop(sid, None)

    def get_session(sid: str) -> Session:
        with registry_lock:
            prune(time.monotonic())
            sess = sessions.get(sid)
        if sess is None:
            raise HTTPException(status_code=404, detail="unknown session")
        return sess

    @app.exception_handler(SpgError)
    async def domain_error(_request, exc: SpgError):
        return JSONResponse(status_code=400, content={"error": str(exc)})

    @app.post("/api/solve")
    async def solve_endpoint(payload: dict):
        graph_doc = payload.get("graph", payload)
        algorithm = payload.get("algorithm", "auto") if "graph" in payload else "auto"
        g = _load_document(graph_doc)
        sol = solve_with(g, algorithm)
        return _solution_json(sol)

    @app.post("/api/sessions", status_code=201)
    async def create_session(payload: dict):
        graph_doc = payload.get("graph")
        if graph_doc is None:
            raise SchemaError("missing field 'graph'")
        mode = payload.get("mode", "engine")
        if mode not in ("engine", "human"):
            raise SchemaError("field 'mode' must be 'engine' or 'human'")
        side = payload.get("human_side", "A")
        if side not in ("A", "B"):
            raise SchemaError("field 'human_side' must be 'A' or 'B'")
        g = _load_document(graph_doc)
        auto_algo = choose_algorithm(g)
        small_enough = g.n <= engine.vertex_limit()
        hints = bool(payload.get(
            "hints", auto_algo in HINTED_ALGORITHMS and small_enough))
        if (hints or mode == "engine") and not small_enough:
            raise HTTPException(
                status_code=400,
                detail=f"graph exceeds the engine limit of "
                       f"{engine.vertex_limit()} vertices for hinted or "
                       f"engine-played sessions; raise SPG_ENGINE_VERTEX_LIMIT "
                       f"or create a human session without hints",
            )
        sess = Session(
            sid=uuid.uuid4().hex,
            graph=g,
            state=initial_state(g),
            mode=mode,
            human_side=Parity.A_TO_MOVE if side == "A" else Parity.B_TO_MOVE,
            hints=hints,
            evaluator=engine.Evaluator(g) if (hints or mode == "engine")
            and g.n <= engine.vertex_limit() else None,
        )
        with sess.lock:
            _engine_moves(sess)
            body = _session_json(sess)
        with registry_lock:
            prune(time.monotonic())
            sessions[sess.sid] = sess
        return body

    def _engine_turn(sess: Session) -> bool:
        return (
            sess.mode == "engine"
            and not is_terminal(sess.state, sess.graph)
            and sess.state.parity != sess.human_side
        )

    def _value_at(sess: Session, state: GameState):
        mode = "memoized" if sess.graph.n <= engine.vertex_limit() else "dfs"
        return engine.value_at(sess.graph, state, mode=mode,
                               evaluator=sess.evaluator)

    def _engine_moves(sess: Session) -> None:
        while _engine_turn(sess):
            _, per_move = _value_at(sess, sess.state)
            best = min(
                per_move,
                key=lambda mp: (mp[1].decider, mp[1].follower, mp[0].next),
            )
            sess.state = apply_move(sess.graph, sess.state, best[0])
            sess.history.append(best[0].next)

    def _session_json(sess: Session) -> dict:
        g = sess.graph
        body = {
            "session": sess.sid,
            "mode": sess.mode,
            "human_side": "A" if sess.human_side == Parity.A_TO_MOVE else "B",
            "graph": {
                "directed": g.directed,
                "n": g.n,
                "edges": [[e.u, e.v, e.cost] for e in g.edges],
                "s": g.s,
                "t": g.t,
                "labels": list(g.labels) if g.labels else None,
            },
            "state": _state_json(g, sess.state),
            "history": list(sess.history),
            "hints": sess.hints,
        }
        moves = []
        if not is_terminal(sess.state, g):
            if sess.hints:
                _, per_move = _value_at(sess, sess.state)
                for move, pair in per_move:
                    moves.append({
                        "next": move.next,
                        "cost": move.edge.cost,
                        "what_if": _cost_pair_json(pair),
                    })
            else:
                for move in legal_moves(g, sess.state):
                    moves.append({"next": move.next, "cost": move.edge.cost})
        body["legal_moves"] = moves
        return body

    @app.get("/api/sessions/{sid}")
    async def read_session(sid: str):
        sess = get_session(sid)
        with sess.lock:
            sess.touched = time.monotonic()
            return _session_json(sess)

    @app.post("/api/sessions/{sid}/moves")
    async def post_move(sid: str, payload: dict):
        sess = get_session(sid)
        with sess.lock:
            sess.touched = time.monotonic()
            if is_terminal(sess.state, sess.graph):
                raise HTTPException(status_code=409, detail="game is over")
            if sess.mode == "engine" and sess.state.parity != sess.human_side:
                raise HTTPException(status_code=409, detail="not your turn")
            target = payload.get("next")
            if not isinstance(target, int):
                raise SchemaError("missing integer field 'next'")
            chosen = None
            for w, _, idx in sess.graph.successors(sess.state.current):
                if w == target:
                    chosen = Move(edge=sess.graph.edges[idx], next=w)
            if chosen is None:
                return JSONResponse(status_code=400, content={
                    "error": f"no edge to vertex {target}", "rule": None})
            try:
                sess.state = apply_move(sess.graph, sess.state, chosen)
            except IllegalMove as exc:
                return JSONResponse(status_code=400, content={
                    "error": str(exc), "rule": exc.rule})
            sess.history.append(chosen.next)
            _engine_moves(sess)
            return _session_json(sess)

    @app.delete("/api/sessions/{sid}", status_code=204)
    async def delete_session(sid: str):
        with registry_lock:
            if sid not in sessions:
                raise HTTPException(status_code=404, detail="unknown session")
            del sessions[sid]
        return None

    return app


app = create_app()
