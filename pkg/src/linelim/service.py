"""Local HTTP service for running tournaments, backed by JSON event logs.

One file per tournament id in the data directory; the log is the source of
truth and every stored state can be rebuilt by replay.  Mutations to a
single tournament are serialized behind a lock and guarded by the round
index in the URL, so a stale or duplicate submission gets a 409 instead of
corrupting state.
"""

from __future__ import annotations

import json
import os
import threading
import uuid
from pathlib import Path

from fastapi import FastAPI, HTTPException
from fastapi.middleware.cors import CORSMiddleware
from pydantic import BaseModel, Field

from .engine import (
    TournamentState,
    apply_results,
    final_ranking,
    new_tournament,
    pair_round,
    tournament_from_log,
    tournament_to_log,
)
from .model import InvalidConfig, InvalidResultVector

DATA_DIR_ENV = "LINELIM_DATA_DIR"
DEFAULT_DATA_DIR = "./linelim-data"


def data_dir_from_env() -> Path:
    return Path(os.environ.get(DATA_DIR_ENV, DEFAULT_DATA_DIR))


class CreateTournament(BaseModel):
    players: int
    rounds: int
    passes: int = Field(default=1, ge=1)


class RoundResults(BaseModel):
    results: list[str]


class TournamentStore:
    """Tournaments on disk, one event-log file per id, with cached states."""

    def __init__(self, data_dir: str | Path):
        self.data_dir = Path(data_dir)
        self.data_dir.mkdir(parents=True, exist_ok=True)
        self._states: dict[str, TournamentState] = {}
        self._locks: dict[str, threading.Lock] = {}
        self._registry = threading.Lock()
        for path in sorted(self.data_dir.glob("*.json")):
            try:
                doc = json.loads(path.read_text())
                self._states[path.stem] = tournament_from_log(doc)
                self._locks[path.stem] = threading.Lock()
            except (ValueError, KeyError):
                continue  # unrelated or corrupt file; leave it alone

    def create(self, players: int, rounds: int, passes: int = 1) -> tuple[str, TournamentState]:
        state = new_tournament(players, rounds, passes)
        tid = uuid.uuid4().hex[:12]
        with self._registry:
            self._states[tid] = state
            self._locks[tid] = threading.Lock()
        self._persist(tid, state)
        return tid, state

    def get(self, tid: str) -> TournamentState:
        try:
            return self._states[tid]
        except KeyError:
            raise HTTPException(status_code=404, detail=f"no tournament {tid!r}") from None

    def lock(self, tid: str) -> threading.Lock:
        self.get(tid)
        return self._locks[tid]

    def update(self, tid: str, state: TournamentState) -> None:
        self._states[tid] = state
        self._persist(tid, state)

    def ids(self) -> list[str]:
        return sorted(self._states)

    def _persist(self, tid: str, state: TournamentState) -> None:
        path = self.data_dir / f"{tid}.json"
        path.write_text(json.dumps(tournament_to_log(state), indent=2) + "\n")


def _pairs_payload(state: TournamentState) -> list[dict]:
    n = len(state.standings)
    return [
        {"ranks": [i + 1, n - i], "seeds": [a, b]}
        for i, (a, b) in enumerate(pair_round(state))
    ]


def _state_payload(tid: str, state: TournamentState) -> dict:
    doc = tournament_to_log(state)
    payload = {
        "id": tid,
        "config": doc["config"],
        "schedule": doc["schedule"],
        "round": state.round_index,
        "status": doc["status"],
        "champion": state.champion,
        "standings": list(state.standings),
    }
    if state.completed:
        payload["finalRanking"] = list(final_ranking(state))
    return payload


def create_app(data_dir: str | Path | None = None) -> FastAPI:
    """Build the service around a store rooted at ``data_dir``."""
    store = TournamentStore(data_dir or data_dir_from_env())
    app = FastAPI(title="linelim tournament service")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )
    app.state.store = store

    @app.get("/tournaments")
    def list_tournaments() -> list[dict]:
        out = []
        for tid in store.ids():
            state = store.get(tid)
            out.append(
                {
                    "id": tid,
                    "players": state.config.players,
                    "rounds": state.config.rounds,
                    "round": state.round_index,
                    "status": "completed" if state.completed else "in-progress",
                }
            )
        return out

    @app.post("/tournaments", status_code=201)
    def create_tournament(body: CreateTournament) -> dict:
        try:
            tid, state = store.create(body.players, body.rounds, body.passes)
        except InvalidConfig as err:
            raise HTTPException(status_code=422, detail=str(err)) from None
        payload = _state_payload(tid, state)
        payload["pairings"] = _pairs_payload(state)
        return payload

    @app.get("/tournaments/{tid}")
    def get_tournament(tid: str) -> dict:
        return _state_payload(tid, store.get(tid))

    @app.get("/tournaments/{tid}/pairings")
    def get_pairings(tid: str) -> dict:
        state = store.get(tid)
        if state.completed:
            return {
                "round": state.round_index,
                "status": "completed",
                "champion": state.champion,
                "pairings": [],
            }
        return {
            "round": state.round_index,
            "status": "in-progress",
            "pairings": _pairs_payload(state),
        }

    @app.get("/tournaments/{tid}/history")
    def get_history(tid: str) -> dict:
        state = store.get(tid)
        return {"id": tid, "history": tournament_to_log(state)["history"]}

    @app.post("/tournaments/{tid}/rounds/{round_index}/results")
    def post_results(tid: str, round_index: int, body: RoundResults) -> dict:
        with store.lock(tid):
            state = store.get(tid)
            if state.completed:
                raise HTTPException(status_code=409, detail="tournament already completed")
            if round_index != state.round_index:
                raise HTTPException(
                    status_code=409,
                    detail=f"round {round_index} is not current "
                    f"(expected {state.round_index})",
                )
            try:
                new_state = apply_results(state, "".join(body.results))
            except InvalidResultVector as err:
                raise HTTPException(status_code=422, detail=str(err)) from None
            store.update(tid, new_state)
        record = new_state.history[-1]
        payload = {
            "round": record.round_index,
            "standings": list(record.standings),
            "eliminated": list(record.eliminated),
            "status": "completed" if new_state.completed else "in-progress",
        }
        if new_state.completed:
            payload["champion"] = new_state.champion
            payload["finalRanking"] = list(final_ranking(new_state))
        else:
            payload["nextPairings"] = _pairs_payload(new_state)
        return payload

    return app
