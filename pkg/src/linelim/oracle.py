"""Exhaustive brute-force solvers used to certify the optimizers on small
instances.

These deliberately share no code with the fast paths they check.  The
re-ranking oracle enumerates every permutation of the ranks and filters by
the fairness rules stated directly (direction, order preservation, rigid
same-result blocks) plus the path-change budget; the schedule oracle
enumerates every feasible remaining-player sequence.  Instance sizes are
guarded because the search spaces are factorial/exponential.
"""

from __future__ import annotations

from itertools import islice, permutations
from typing import Iterator, Sequence

import numpy as np

from .model import (
    LOSS,
    WIN,
    Config,
    TournamentError,
    path_change,
    validate_results,
)

MAX_RERANK_PLAYERS = 12
MAX_SCHEDULE_PLAYERS = 20

_CHUNK = 500_000


class InstanceTooLarge(TournamentError, ValueError):
    """Instance exceeds the exhaustive-search guard."""


class Infeasible(TournamentError):
    """No feasible schedule exists (possible only for invalid configs)."""


_perm_cache: dict[int, np.ndarray] = {}


def _perm_chunks(n: int) -> Iterator[np.ndarray]:
    """Yield all permutations of 0..n-1 as int8 arrays, in memory-safe chunks.

    Up to n=10 the full table (3.6M rows, ~36 MB) is built once and cached;
    larger n stream in chunks to bound memory.
    """
    if n <= 10:
        if n not in _perm_cache:
            flat = np.fromiter(
                (v for perm in permutations(range(n)) for v in perm),
                dtype=np.int8,
            )
            _perm_cache[n] = flat.reshape(-1, n)
        yield _perm_cache[n]
        return
    source = permutations(range(n))
    while True:
        flat = np.fromiter(
            (v for perm in islice(source, _CHUNK) for v in perm),
            dtype=np.int8,
        )
        if flat.size == 0:
            return
        yield flat.reshape(-1, n)


def brute_force_rerank(results: Sequence[int] | str) -> tuple[int, set[tuple[int, ...]]]:
    """Exhaustively solve the constrained re-ranking problem.

    Enumerates all permutations of the pre-round ranks, keeps those obeying
    the fairness rules and reducing path change by exactly 2 (identity only
    when path change is already 1), and returns the maximum displacement
    together with the set of every permutation attaining it (order form).
    """
    results = validate_results(results)
    n = len(results)
    if n > MAX_RERANK_PLAYERS:
        raise InstanceTooLarge(
            f"{n} players means {n}! permutations; guard is {MAX_RERANK_PLAYERS}"
        )
    if path_change(results) == 1:
        return 0, {tuple(range(1, n + 1))}

    outcomes = np.asarray(results, dtype=np.int8)
    target = path_change(results) - 2
    winner_cols = np.flatnonzero(outcomes == WIN)
    loser_cols = np.flatnonzero(outcomes == LOSS)
    block_cols = np.flatnonzero(outcomes[:-1] == outcomes[1:])
    positions = np.arange(n, dtype=np.int8)

    best = -1
    maximizers: set[tuple[int, ...]] = set()
    for perms in _perm_chunks(n):
        rows = np.arange(perms.shape[0])
        inv = np.empty_like(perms)
        inv[rows[:, None], perms] = positions  # inv[r, p] = new rank of p (0-based)

        # Winners never drop, losers never climb.
        ok = (inv[:, winner_cols] <= winner_cols).all(axis=1)
        ok &= (inv[:, loser_cols] >= loser_cols).all(axis=1)
        # Order within winners and within losers is preserved.
        if winner_cols.size > 1:
            ok &= (np.diff(inv[:, winner_cols], axis=1) > 0).all(axis=1)
        if loser_cols.size > 1:
            ok &= (np.diff(inv[:, loser_cols], axis=1) > 0).all(axis=1)
        # Consecutive same-result players move rigidly together.
        if block_cols.size:
            ok &= (inv[:, block_cols + 1] - inv[:, block_cols] == 1).all(axis=1)
        # Path change of the permuted results drops by exactly 2.
        permuted = outcomes[perms]
        padded = np.concatenate(
            [
                np.ones((perms.shape[0], 1), dtype=np.int8),
                permuted,
                np.zeros((perms.shape[0], 1), dtype=np.int8),
            ],
            axis=1,
        )
        ok &= np.abs(np.diff(padded, axis=1)).sum(axis=1) == target

        if not ok.any():
            continue
        feasible = perms[ok]
        disp = np.abs(feasible - positions).sum(axis=1)
        chunk_best = int(disp.max())
        if chunk_best > best:
            best = chunk_best
            maximizers.clear()
        if chunk_best == best:
            for row in feasible[disp == chunk_best]:
                maximizers.add(tuple(int(v) + 1 for v in row))
    return best, maximizers


def feasible_schedules(cfg: Config) -> Iterator[tuple[int, ...]]:
    """Yield every remaining-player sequence satisfying the hard constraints.

    Feasibility only: starts at the full field, ends at 2, even drops of at
    least 2, never more than half the field per round.  Monotone-drop
    behavior is *not* imposed; it is a property of optima, not a
    constraint, and tests confirm it empirically on this enumeration.
    """
    if cfg.players > MAX_SCHEDULE_PLAYERS:
        raise InstanceTooLarge(
            f"{cfg.players} players exceeds the schedule enumeration guard "
            f"({MAX_SCHEDULE_PLAYERS})"
        )

    def extend(prefix: list[int]) -> Iterator[tuple[int, ...]]:
        remaining_rounds = cfg.rounds - len(prefix)
        current = prefix[-1]
        if remaining_rounds == 0:
            if current == 2:
                yield tuple(prefix)
            return
        # Each remaining round must drop >= 2, and a round keeps >= half.
        for nxt in range(current - 2, 1, -2):
            if current > 2 * nxt:
                break
            if nxt - 2 < 2 * (remaining_rounds - 1):
                continue
            prefix.append(nxt)
            yield from extend(prefix)
            prefix.pop()

    yield from extend([cfg.players])


def _interior_objective(counts: Sequence[int]) -> int:
    drops = [counts[t] - counts[t + 1] for t in range(len(counts) - 1)]
    return sum(abs(b - a) for a, b in zip(drops, drops[1:]))


def brute_force_schedule(cfg: Config) -> int:
    """Minimum elimination-change objective over all feasible schedules."""
    best: int | None = None
    for counts in feasible_schedules(cfg):
        value = _interior_objective(counts)
        if best is None or value < best:
            best = value
    if best is None:
        raise Infeasible(f"no feasible schedule for {cfg}")
    return best


def optimal_schedules(cfg: Config) -> list[tuple[int, ...]]:
    """All feasible schedules attaining the brute-force minimum objective."""
    best: int | None = None
    argmin: list[tuple[int, ...]] = []
    for counts in feasible_schedules(cfg):
        value = _interior_objective(counts)
        if best is None or value < best:
            best = value
            argmin = [counts]
        elif value == best:
            argmin.append(counts)
    if best is None:
        raise Infeasible(f"no feasible schedule for {cfg}")
    return argmin
