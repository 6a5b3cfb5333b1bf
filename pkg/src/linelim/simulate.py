"""Reproducible Monte Carlo comparison of tournament formats.

Players carry latent strengths; matches are decided either by the
Bradley-Terry rule (win probability ``s_i / (s_i + s_j)``, monotone in the
strength gap) or deterministically (stronger player always wins).  Each
trial seats players into tournament seeds, plays the chosen format to the
end, and scores how well the finish order recovers the truth: did the
strongest player win, and what is the Kendall rank correlation between
finish order and true strength order.

Every trial's random stream derives from ``(seed, trial index)``, so
reports are bit-identical across runs and independent of execution order.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .engine import final_ranking, new_tournament, pair_round, apply_results
from .formats import (
    LINEAR_ELIMINATION,
    ROUND_ROBIN,
    SINGLE_ELIMINATION,
    FormatDescriptor,
    run_round_robin,
    run_single_elim,
    validate_format,
)
from .model import LOSS, WIN, TournamentError

BRADLEY_TERRY = "bradley-terry"
DETERMINISTIC = "deterministic"

SEEDINGS = ("true-order", "random", "noisy")


class EqualStrengths(TournamentError, ValueError):
    """The deterministic rule cannot decide a match of equal strengths."""


class MismatchedRankings(TournamentError, ValueError):
    """Kendall tau needs two rankings of exactly the same players."""


@dataclass(frozen=True)
class StrengthModel:
    """Latent per-player strengths plus the pairwise win rule."""

    strengths: tuple[float, ...]
    rule: str = BRADLEY_TERRY

    def __post_init__(self) -> None:
        if self.rule not in (BRADLEY_TERRY, DETERMINISTIC):
            raise ValueError(f"unknown win rule {self.rule!r}")
        if any(s <= 0 for s in self.strengths):
            raise ValueError("strengths must be positive")


def harmonic_strengths(n: int) -> tuple[float, ...]:
    """Default strength profile 1, 1/2, 1/3, ... for players 1..n."""
    return tuple(1.0 / k for k in range(1, n + 1))


def win_prob(model: StrengthModel, i: int, j: int) -> float:
    """Probability that player ``i`` beats player ``j`` (1-based indices)."""
    if i == j:
        raise ValueError("a player cannot play itself")
    si, sj = model.strengths[i - 1], model.strengths[j - 1]
    if model.rule == DETERMINISTIC:
        if si == sj:
            raise EqualStrengths(
                f"players {i} and {j} have equal strength {si} under the "
                f"deterministic rule"
            )
        return 1.0 if si > sj else 0.0
    return si / (si + sj)


def kendall_tau(a: Sequence, b: Sequence) -> float:
    """Kendall rank correlation between two orderings of the same items.

    (concordant - discordant) / (n*(n-1)/2); 1 for identical orders, -1
    for reversed.
    """
    if len(set(a)) != len(a) or set(a) != set(b) or len(a) != len(b):
        raise MismatchedRankings("rankings must order exactly the same items")
    n = len(a)
    if n < 2:
        return 1.0
    pos_b = {item: k for k, item in enumerate(b)}
    concordant = 0
    discordant = 0
    for x in range(n):
        for y in range(x + 1, n):
            if pos_b[a[x]] < pos_b[a[y]]:
                concordant += 1
            else:
                discordant += 1
    return (concordant - discordant) / (n * (n - 1) / 2)


@dataclass(frozen=True)
class SimulationReport:
    """Aggregated outcomes of all trials for one format."""

    format: FormatDescriptor
    rule: str
    strengths: tuple[float, ...]
    seeding: str
    noise_sigma: float
    trials: int
    seed: int
    top1_wins: int
    mean_kendall_tau: float
    champion_counts: tuple[int, ...]

    @property
    def top1_win_rate(self) -> float:
        return self.top1_wins / self.trials

    @property
    def top1_half_width(self) -> float:
        """95% normal-approximation confidence half-width of the top-1 rate."""
        p = self.top1_win_rate
        return 1.96 * math.sqrt(p * (1 - p) / self.trials)

    @property
    def champion_dist(self) -> tuple[float, ...]:
        return tuple(c / self.trials for c in self.champion_counts)


def _seating(
    rng: np.random.Generator,
    model: StrengthModel,
    seeding: str,
    noise_sigma: float,
) -> list[int]:
    """Assign players (0-based) to seeds: entry k is the player seeded k+1."""
    n = len(model.strengths)
    if seeding == "true-order":
        return sorted(range(n), key=lambda p: (-model.strengths[p], p))
    if seeding == "random":
        return [int(p) for p in rng.permutation(n)]
    perceived = np.asarray(model.strengths) + rng.normal(0.0, noise_sigma, n)
    return sorted(range(n), key=lambda p: (-perceived[p], p))


def _play_linear(n, rounds, passes, sample):
    state = new_tournament(n, rounds, passes)
    while not state.completed:
        pairs = pair_round(state)
        size = len(state.standings)
        vec = [LOSS] * size
        for idx, (a, b) in enumerate(pairs):
            if sample(a, b) == a:
                vec[idx] = WIN
            else:
                vec[size - 1 - idx] = WIN
        state = apply_results(state, vec)
    return final_ranking(state)


def simulate(
    fmt: FormatDescriptor,
    model: StrengthModel,
    trials: int,
    seed: int = 0,
    seeding: str = "true-order",
    noise_sigma: float = 0.0,
    passes: int = 1,
) -> SimulationReport:
    """Run ``trials`` independent tournaments and aggregate the outcomes.

    ``seeding`` controls the initial seed-to-player assignment: the true
    strength order, a uniformly random order, or the order of strengths
    perturbed by Gaussian noise of scale ``noise_sigma``.
    """
    fmt = validate_format(fmt)
    n = fmt.players
    if len(model.strengths) != n:
        raise ValueError(
            f"model has {len(model.strengths)} strengths for {n} players"
        )
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    if seeding not in SEEDINGS:
        raise ValueError(f"seeding must be one of {SEEDINGS}, got {seeding!r}")
    if seeding == "noisy" and noise_sigma <= 0:
        raise ValueError("noisy seeding needs a positive noise_sigma")

    best_player = min(range(n), key=lambda p: (-model.strengths[p], p))
    true_order = sorted(range(n), key=lambda p: (-model.strengths[p], p))

    top1_wins = 0
    champion_counts = [0] * n
    taus = np.empty(trials)
    for t in range(trials):
        rng = np.random.default_rng((seed, t))
        seating = _seating(rng, model, seeding, noise_sigma)

        def sample(a: int, b: int) -> int:
            p = win_prob(model, seating[a - 1] + 1, seating[b - 1] + 1)
            return a if rng.random() < p else b

        if fmt.kind == LINEAR_ELIMINATION:
            ranking = _play_linear(n, fmt.rounds, passes, sample)
        elif fmt.kind == SINGLE_ELIMINATION:
            ranking, _ = run_single_elim(n, sample)
        else:
            ranking, _ = run_round_robin(n, sample)

        champion_counts[ranking[0] - 1] += 1
        if seating[ranking[0] - 1] == best_player:
            top1_wins += 1
        finish_players = [seating[s - 1] for s in ranking]
        taus[t] = kendall_tau(finish_players, true_order)

    return SimulationReport(
        format=fmt,
        rule=model.rule,
        strengths=model.strengths,
        seeding=seeding,
        noise_sigma=noise_sigma,
        trials=trials,
        seed=seed,
        top1_wins=top1_wins,
        mean_kendall_tau=float(taus.mean()),
        champion_counts=tuple(champion_counts),
    )


def report_to_dict(report: SimulationReport) -> dict:
    return {
        "format": {
            "kind": report.format.kind,
            "players": report.format.players,
            "rounds": report.format.rounds,
        },
        "model": {"rule": report.rule, "strengths": list(report.strengths)},
        "seeding": report.seeding,
        "noise_sigma": report.noise_sigma,
        "trials": report.trials,
        "seed": report.seed,
        "top1_win_rate": report.top1_win_rate,
        "top1_half_width": report.top1_half_width,
        "mean_kendall_tau": report.mean_kendall_tau,
        "champion_counts": list(report.champion_counts),
        "champion_dist": list(report.champion_dist),
    }


def report_to_json(report: SimulationReport) -> str:
    """Serialize a report deterministically (same inputs, same bytes)."""
    return json.dumps(report_to_dict(report), sort_keys=True, indent=2)


def champion_csv(report: SimulationReport) -> str:
    """Per-seed champion distribution as ``seed,wins,rate`` CSV."""
    lines = ["seed,wins,rate"]
    for k, wins in enumerate(report.champion_counts, start=1):
        lines.append(f"{k},{wins},{wins / report.trials}")
    return "\n".join(lines) + "\n"
