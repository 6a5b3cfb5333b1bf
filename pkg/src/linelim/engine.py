"""Round lifecycle for a linear-elimination tournament.

State is immutable: :func:`apply_results` returns a new
:class:`TournamentState` with the round's record appended, so a tournament
is a pure fold of result vectors over its starting state.  The JSON event
log produced by :func:`tournament_to_log` is the durable source of truth;
:func:`tournament_from_log` rebuilds any state by replaying it.

Each round: pair rank ``i`` with rank ``n+1-i``, re-rank from the result
vector, remove the scheduled number of losers from the bottom of the new
standings, and compact ranks.  When the final two have played, the rank-1
player (the final's winner) is champion.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Callable, Sequence

from .model import (
    LOSS,
    Config,
    InvalidResultVector,
    TournamentError,
    parse_results,
    results_to_string,
    validate_config,
    validate_results,
)
from .rerank import rerank
from .schedule import build_schedule

LOG_FORMAT = "linear-elimination"


class BadResultLength(InvalidResultVector):
    """Result vector length does not match the active player count."""


class AntiSymmetryViolation(InvalidResultVector):
    """Result vector breaks the paired-opponents anti-symmetry."""


class TournamentComplete(TournamentError):
    """Operation requires an in-progress tournament, but it has finished."""


class TournamentInProgress(TournamentError):
    """Operation requires a finished tournament, but rounds remain."""


@dataclass(frozen=True)
class RoundRecord:
    """Everything that happened in one round.

    ``standings`` is the full post-rerank order (before removal), so
    ``eliminated`` players still appear in it, at the bottom ranks;
    ``eliminated`` is listed by rank at elimination, best first.
    """

    round_index: int
    pairings: tuple[tuple[int, int], ...]
    results: tuple[int, ...]
    standings: tuple[int, ...]
    eliminated: tuple[int, ...]


@dataclass(frozen=True)
class TournamentState:
    """Snapshot of a tournament between rounds.

    ``standings`` holds the seeds of the active players in order form
    (rank 1 first); ``round_index`` counts completed rounds; ``champion``
    is set exactly when the tournament is over.
    """

    config: Config
    schedule: tuple[int, ...]
    round_index: int
    standings: tuple[int, ...]
    history: tuple[RoundRecord, ...] = ()
    champion: int | None = None
    passes: int = 1

    @property
    def completed(self) -> bool:
        return self.champion is not None


def new_tournament(players: int, rounds: int, passes: int = 1) -> TournamentState:
    """Validate the configuration and seat players 1..n in seed order."""
    cfg = validate_config(players, rounds)
    if passes < 1:
        raise ValueError(f"rerank passes must be >= 1, got {passes}")
    return TournamentState(
        config=cfg,
        schedule=build_schedule(cfg),
        round_index=0,
        standings=tuple(range(1, players + 1)),
        passes=passes,
    )


def pair_round(state: TournamentState) -> tuple[tuple[int, int], ...]:
    """Current round's match-ups: rank i meets rank n+1-i, best vs worst.

    Pairs are returned in rank order as (higher-ranked seed, lower-ranked
    seed); every active player appears exactly once.
    """
    if state.completed:
        raise TournamentComplete("tournament already has a champion")
    n = len(state.standings)
    return tuple(
        (state.standings[i], state.standings[n - 1 - i]) for i in range(n // 2)
    )


def _check_results(state: TournamentState, results: Sequence[int] | str) -> tuple[int, ...]:
    if isinstance(results, str):
        results = parse_results(results)
    results = tuple(results)
    n = len(state.standings)
    if len(results) != n:
        raise BadResultLength(
            f"round {state.round_index} needs {n} results, got {len(results)}"
        )
    try:
        return validate_results(results)
    except InvalidResultVector as err:
        raise AntiSymmetryViolation(str(err)) from None


def apply_results(state: TournamentState, results: Sequence[int] | str) -> TournamentState:
    """Advance one round: re-rank, eliminate the scheduled losers, compact.

    The eliminated players are the scheduled number of losers holding the
    numerically largest post-rerank ranks; survivors keep their relative
    order and compact to ranks ``1..n_next``.  On the final round the
    post-round rank-1 player (necessarily the final's winner) becomes
    champion.
    """
    if state.completed:
        raise TournamentComplete("tournament already has a champion")
    results = _check_results(state, results)
    t = state.round_index
    n = len(state.standings)
    pairings = pair_round(state)

    order = rerank(results, state.passes)
    reranked = tuple(state.standings[p - 1] for p in order)
    outcome_by_position = tuple(results[p - 1] for p in order)

    final_round = t == state.config.rounds - 1
    if final_round:
        eliminated: tuple[int, ...] = ()
        survivors = reranked
        champion = reranked[0]
    else:
        drop = state.schedule[t] - state.schedule[t + 1]
        loser_positions = [k for k in range(n) if outcome_by_position[k] == LOSS]
        assert drop <= len(loser_positions), (
            f"round {t}: cannot eliminate {drop} from {len(loser_positions)} losers"
        )
        cut = set(loser_positions[len(loser_positions) - drop:])
        eliminated = tuple(reranked[k] for k in sorted(cut))
        survivors = tuple(s for k, s in enumerate(reranked) if k not in cut)
        champion = None

    record = RoundRecord(
        round_index=t,
        pairings=pairings,
        results=results,
        standings=reranked,
        eliminated=eliminated,
    )
    return replace(
        state,
        round_index=t + 1,
        standings=survivors,
        history=state.history + (record,),
        champion=champion,
    )


def run_tournament(
    players: int,
    rounds: int,
    result_provider: Callable[[TournamentState], Sequence[int] | str],
    passes: int = 1,
) -> TournamentState:
    """Drive a full tournament, asking ``result_provider`` for each round."""
    state = new_tournament(players, rounds, passes)
    while not state.completed:
        state = apply_results(state, result_provider(state))
    return state


def final_ranking(state: TournamentState) -> tuple[int, ...]:
    """Order all entrants: champion, runner-up, then the eliminated.

    Eliminated players rank by elimination round (later is better), ties
    within a round by their rank at elimination.
    """
    if not state.completed:
        raise TournamentInProgress(
            f"{state.config.rounds - state.round_index} rounds still to play"
        )
    ranking = list(state.standings)
    for record in reversed(state.history):
        ranking.extend(record.eliminated)
    return tuple(ranking)


# ---------------------------------------------------------------------------
# JSON event log
# ---------------------------------------------------------------------------

def tournament_to_log(state: TournamentState) -> dict:
    """Serialize a tournament to its event-log document."""
    return {
        "format": LOG_FORMAT,
        "config": {
            "players": state.config.players,
            "rounds": state.config.rounds,
            "passes": state.passes,
        },
        "schedule": list(state.schedule),
        "round": state.round_index,
        "status": "completed" if state.completed else "in-progress",
        "champion": state.champion,
        "standings": list(state.standings),
        "history": [
            {
                "round": rec.round_index,
                "pairings": [list(p) for p in rec.pairings],
                "results": [c for c in results_to_string(rec.results)],
                "standings": list(rec.standings),
                "eliminated": list(rec.eliminated),
            }
            for rec in state.history
        ],
    }


def tournament_from_log(doc: dict) -> TournamentState:
    """Rebuild a state by replaying the logged result vectors in order."""
    cfg = doc["config"]
    state = new_tournament(cfg["players"], cfg["rounds"], cfg.get("passes", 1))
    for rec in doc["history"]:
        state = apply_results(state, "".join(rec["results"]))
    return state


def save_log(state: TournamentState, path: str | Path) -> None:
    Path(path).write_text(json.dumps(tournament_to_log(state), indent=2) + "\n")


def load_log(path: str | Path) -> TournamentState:
    return tournament_from_log(json.loads(Path(path).read_text()))
