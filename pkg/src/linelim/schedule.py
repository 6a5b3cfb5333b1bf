"""Elimination schedules: how many players remain in each round.

A schedule for ``players`` entrants over ``rounds`` rounds is the sequence
of remaining-player counts, starting at the full field and ending at the
two finalists.  Feasible schedules eliminate an even number (at least 2)
per round and never more than half the field, since only losers can go.

:func:`build_schedule` distributes eliminations as evenly as those
constraints allow, which provably minimizes the total change between
consecutive rounds' elimination counts (:func:`schedule_objective`) -- the
"linear" middle ground between a knockout's halving and a round-robin's
no-elimination.
"""

from __future__ import annotations

from typing import Sequence

from .model import Config, TournamentError, config_violations


class ScheduleTooShort(TournamentError, ValueError):
    """Schedule has fewer than two rounds, so no objective is defined."""


def build_schedule(cfg: Config) -> tuple[int, ...]:
    """Construct the evenly-distributed elimination schedule for ``cfg``.

    Works backwards from the two finalists: at each earlier round, add the
    rounded-down average elimination still outstanding, capped at doubling
    (a round cannot eliminate more players than it keeps).  The result
    minimizes :func:`schedule_objective` over all feasible schedules.
    """
    players, rounds = cfg.players, cfg.rounds
    counts = [0] * rounds
    counts[0] = players
    counts[rounds - 1] = 2
    for m in range(rounds - 1, 1, -1):
        step = 2 * ((counts[0] - counts[m]) // (2 * m))
        if m == rounds - 1:
            # Guaranteed by rounds <= players/2; fail loudly if not.
            assert step >= 2, f"first backward step {step} < 2 for {cfg}"
        if step >= counts[m]:
            counts[m - 1] = 2 * counts[m]
        else:
            counts[m - 1] = counts[m] + step
    schedule = tuple(counts)
    assert not validate_schedule(schedule, players, rounds), (
        f"constructed schedule {schedule} violates its own invariants"
    )
    return schedule


def schedule_objective(counts: Sequence[int]) -> int:
    """Total absolute change between consecutive per-round elimination counts.

    Sums ``|eliminated[t] - eliminated[t-1]|`` over the schedule's interior;
    0 means perfectly linear elimination.  Schedules with fewer than two
    rounds have no eliminations to compare and raise
    :class:`ScheduleTooShort`; a two-round schedule has a single
    elimination count and objective 0.
    """
    if len(counts) < 2:
        raise ScheduleTooShort(
            f"need at least two rounds to compare eliminations, got {len(counts)}"
        )
    drops = [counts[t] - counts[t + 1] for t in range(len(counts) - 1)]
    return sum(abs(b - a) for a, b in zip(drops, drops[1:]))


def validate_schedule(
    counts: Sequence[int],
    players: int | None = None,
    rounds: int | None = None,
) -> list[str]:
    """Return every invariant violation of a schedule; empty list means valid.

    Checks, per index where applicable: the field starts at ``players`` and
    ends at 2, the length matches ``rounds``, each round eliminates an even
    number >= 2, no round eliminates more than half its field, and
    per-round eliminations never increase.  When ``players`` and ``rounds``
    are both given, configuration-bound violations are included too.
    """
    violations: list[str] = []
    counts = list(counts)
    if players is not None and rounds is not None:
        violations.extend(config_violations(players, rounds))
    if not counts:
        violations.append("schedule is empty")
        return violations
    if players is not None and counts[0] != players:
        violations.append(f"index 0: schedule starts at {counts[0]}, not {players}")
    if rounds is not None and len(counts) != rounds:
        violations.append(f"schedule length {len(counts)} differs from {rounds} rounds")
    if counts[-1] != 2:
        violations.append(f"index {len(counts) - 1}: schedule must end at 2, got {counts[-1]}")
    drops = [counts[t] - counts[t + 1] for t in range(len(counts) - 1)]
    for t, drop in enumerate(drops):
        if drop % 2 != 0:
            violations.append(f"index {t}: eliminates an odd number ({drop})")
        if drop < 2:
            violations.append(f"index {t}: eliminates fewer than 2 ({drop})")
        if counts[t] > 2 * counts[t + 1]:
            violations.append(
                f"index {t}: {counts[t]} players cannot drop to {counts[t + 1]} "
                f"(more than half eliminated)"
            )
    for t in range(1, len(drops)):
        if drops[t] > drops[t - 1]:
            violations.append(
                f"index {t}: eliminations increase from {drops[t - 1]} to {drops[t]}"
            )
    return violations


def schedule_rows(counts: Sequence[int]) -> list[tuple[int, int, int]]:
    """Tabulate a schedule as (round, remaining, eliminated) rows for export."""
    rows = []
    for t, remaining in enumerate(counts):
        eliminated = counts[t] - counts[t + 1] if t + 1 < len(counts) else 0
        rows.append((t, remaining, eliminated))
    return rows
