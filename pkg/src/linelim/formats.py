"""Baseline tournament formats for comparison: single elimination and
round-robin, the two extremes the linear-elimination design sits between.

Single elimination uses a seeded positional bracket (no re-seeding between
rounds): round one pairs seed ``i`` with seed ``n+1-i`` and winners advance
in bracket order.  Round-robin schedules everyone against everyone with the
circle method and ranks by win count, head-to-head among the tied, then
seed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Mapping, Sequence

from .model import (
    LOSS,
    WIN,
    TournamentError,
    parse_results,
    results_to_string,
    validate_config,
)

LINEAR_ELIMINATION = "linear-elimination"
SINGLE_ELIMINATION = "single-elimination"
ROUND_ROBIN = "round-robin"

KINDS = (LINEAR_ELIMINATION, SINGLE_ELIMINATION, ROUND_ROBIN)


class InvalidFormat(TournamentError, ValueError):
    """Format descriptor parameters are inconsistent or unsupported."""


class NotPowerOfTwo(InvalidFormat):
    """Single elimination requires a power-of-two field."""


class IncompleteResults(TournamentError, ValueError):
    """Round-robin ranking needs a result for every pair, exactly once."""


@dataclass(frozen=True)
class FormatDescriptor:
    """Which format to run and at what size.

    ``rounds`` is required for linear elimination, derived for the others
    (``log2 n`` for single elimination, ``n - 1`` for round-robin).
    """

    kind: str
    players: int
    rounds: int | None = None


def validate_format(desc: FormatDescriptor) -> FormatDescriptor:
    """Check a descriptor and fill in the derived round count."""
    if desc.kind == LINEAR_ELIMINATION:
        if desc.rounds is None:
            raise InvalidFormat("linear elimination needs an explicit round count")
        validate_config(desc.players, desc.rounds)
        return desc
    if desc.kind == SINGLE_ELIMINATION:
        n = desc.players
        if n < 2 or n & (n - 1) != 0:
            raise NotPowerOfTwo(f"single elimination needs 2**k players, got {n}")
        return FormatDescriptor(desc.kind, n, n.bit_length() - 1)
    if desc.kind == ROUND_ROBIN:
        if desc.players < 2 or desc.players % 2 != 0:
            raise InvalidFormat(
                f"round-robin scheduling here requires an even field, got {desc.players}"
            )
        return FormatDescriptor(desc.kind, desc.players, desc.players - 1)
    raise InvalidFormat(f"unknown format kind {desc.kind!r} (choose from {KINDS})")


# ---------------------------------------------------------------------------
# Single elimination
# ---------------------------------------------------------------------------

def bracket_order(n: int) -> tuple[int, ...]:
    """Seeds in bracket-position order for an n-player single elimination.

    Adjacent positions meet in round one (opponents sum to n+1) and, with
    no upsets, seed 1 works down the top half while seed 2 mirrors it from
    the bottom, so the final is 1 vs 2.
    """
    if n < 2 or n & (n - 1) != 0:
        raise NotPowerOfTwo(f"bracket size must be 2**k, got {n}")
    order = [1]
    size = 1
    while size < n:
        size *= 2
        order = [s for x in order for s in (x, size + 1 - x)]
    matches = [(order[i], order[i + 1]) for i in range(0, n, 2)]
    matches = matches[: len(matches) // 2] + matches[len(matches) // 2:][::-1]
    return tuple(s for match in matches for s in match)


def single_elim_round(bracket: Sequence[int], results: Sequence[int] | str) -> tuple[int, ...]:
    """Resolve one bracket round; winners advance positionally.

    ``results`` has one W/L entry per bracket position; adjacent positions
    play each other, so entries come in complementary pairs (unlike snake
    rounds, the vector is not anti-symmetric about its middle).
    """
    bracket = tuple(bracket)
    n = len(bracket)
    if n < 2 or n & (n - 1) != 0:
        raise NotPowerOfTwo(f"remaining bracket must be 2**k players, got {n}")
    if isinstance(results, str):
        results = parse_results(results)
    results = tuple(results)
    if len(results) != n:
        raise IncompleteResults(f"need {n} results for {n} bracket slots")
    for i in range(0, n, 2):
        if results[i] not in (WIN, LOSS) or results[i] + results[i + 1] != 1:
            raise IncompleteResults(
                f"bracket slots {i + 1} and {i + 2} play each other and need "
                f"complementary W/L results"
            )
    return tuple(
        bracket[i] if results[i] == WIN else bracket[i + 1] for i in range(0, n, 2)
    )


def run_single_elim(
    n: int,
    pick_winner: Callable[[int, int], int],
) -> tuple[tuple[int, ...], dict]:
    """Play out a whole bracket with ``pick_winner`` deciding each match.

    Returns the full finish order (champion first; losers rank by round
    reached, then seed) and an event log in the engine's shape with a
    ``single-elimination`` format tag.
    """
    bracket = bracket_order(n)
    history = []
    eliminated_by_round: list[list[int]] = []
    round_index = 0
    while len(bracket) > 1:
        size = len(bracket)
        results = [LOSS] * size
        for i in range(0, size, 2):
            winner = pick_winner(bracket[i], bracket[i + 1])
            results[i if winner == bracket[i] else i + 1] = WIN
        nxt = single_elim_round(bracket, results)
        losers = sorted(set(bracket) - set(nxt))
        eliminated_by_round.append(losers)
        history.append(
            {
                "round": round_index,
                "pairings": [[bracket[i], bracket[i + 1]] for i in range(0, size, 2)],
                "results": list(results_to_string(results)),
                "standings": list(nxt),
                "eliminated": losers,
            }
        )
        bracket = nxt
        round_index += 1
    ranking = [bracket[0]]
    for losers in reversed(eliminated_by_round):
        ranking.extend(losers)
    log = {
        "format": SINGLE_ELIMINATION,
        "config": {"players": n, "rounds": round_index},
        "champion": bracket[0],
        "history": history,
    }
    return tuple(ranking), log


# ---------------------------------------------------------------------------
# Round-robin
# ---------------------------------------------------------------------------

def round_robin_schedule(n: int) -> tuple[tuple[tuple[int, int], ...], ...]:
    """Circle-method schedule: n-1 rounds, every player plays once per round."""
    if n < 2 or n % 2 != 0:
        raise InvalidFormat(f"circle method needs an even player count, got {n}")
    circle = list(range(2, n + 1))
    rounds = []
    for _ in range(n - 1):
        line = [1] + circle
        rounds.append(tuple((line[i], line[n - 1 - i]) for i in range(n // 2)))
        circle = circle[1:] + circle[:1]
    return tuple(rounds)


def round_robin_rank(
    n: int,
    winners: Mapping[tuple[int, int], int],
) -> tuple[int, ...]:
    """Rank players from a complete pairwise result table.

    ``winners`` maps each pair ``(i, j)`` with ``i < j`` to the winning
    seed.  Ranking is by win count; ties break by head-to-head wins inside
    the tied group, then by seed.
    """
    expected = {(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)}
    if set(winners) != expected:
        missing = expected - set(winners)
        extra = set(winners) - expected
        raise IncompleteResults(
            f"pairwise results mismatch: missing {sorted(missing)}, extra {sorted(extra)}"
        )
    for (i, j), w in winners.items():
        if w not in (i, j):
            raise IncompleteResults(f"winner of {(i, j)} must be one of the pair, got {w}")

    wins = {p: 0 for p in range(1, n + 1)}
    for w in winners.values():
        wins[w] += 1

    by_wins: dict[int, list[int]] = {}
    for p in sorted(wins):
        by_wins.setdefault(wins[p], []).append(p)

    ranking: list[int] = []
    for count in sorted(by_wins, reverse=True):
        group = by_wins[count]
        if len(group) == 1:
            ranking.extend(group)
            continue
        members = set(group)
        head_to_head = {p: 0 for p in group}
        for (i, j), w in winners.items():
            if i in members and j in members:
                head_to_head[w] += 1
        ranking.extend(sorted(group, key=lambda p: (-head_to_head[p], p)))
    return tuple(ranking)


def run_round_robin(
    n: int,
    pick_winner: Callable[[int, int], int],
) -> tuple[tuple[int, ...], dict]:
    """Play a full round-robin and rank it; also returns an event log."""
    winners: dict[tuple[int, int], int] = {}
    history = []
    for round_index, matches in enumerate(round_robin_schedule(n)):
        results = []
        for a, b in matches:
            w = pick_winner(a, b)
            winners[(min(a, b), max(a, b))] = w
            results.append("W" if w == a else "L")
        history.append(
            {
                "round": round_index,
                "pairings": [list(m) for m in matches],
                "results": results,
                "eliminated": [],
            }
        )
    ranking = round_robin_rank(n, winners)
    log = {
        "format": ROUND_ROBIN,
        "config": {"players": n, "rounds": n - 1},
        "champion": ranking[0],
        "standings": list(ranking),
        "history": history,
    }
    return ranking, log
