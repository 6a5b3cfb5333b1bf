"""Constrained re-ranking of players from one round of snake-paired results.

The optimizer moves players as far as the round's information allows while
respecting three fairness rules: winners never drop and losers never climb;
relative order inside the winner group and inside the loser group is kept;
and consecutively ranked players with the same result move by the same
amount, i.e. maximal same-result runs travel as rigid blocks.

Under those rules the re-ranking that maximizes total displacement while
reducing the results' path change by exactly two is: swap every maximal
loser run with the winner run immediately below it, all swaps at once.
:func:`rerank_once` implements that single pass; :func:`rerank` iterates it,
and :func:`full_sort` is the fixed point (winners above losers, both in
original order, path change 1).

All functions return standings in order form over pre-round ranks: position
``k`` of the output holds the pre-round rank of the player now ranked ``k``.
"""

from __future__ import annotations

from typing import NamedTuple, Sequence

from .model import LOSS, WIN, path_change, validate_results


class Run(NamedTuple):
    """Maximal block of equal outcomes: ``length`` players from rank ``start``."""

    outcome: int
    start: int
    length: int


def decompose_runs(results: Sequence[int] | str) -> tuple[Run, ...]:
    """Run-length encode a result vector into maximal same-outcome blocks.

    Adjacent runs always differ in outcome and the runs tile ranks ``1..n``
    exactly, so concatenating them reproduces the input.
    """
    results = validate_results(results)
    runs: list[Run] = []
    start = 0
    for i in range(1, len(results) + 1):
        if i == len(results) or results[i] != results[start]:
            runs.append(Run(results[start], start + 1, i - start))
            start = i
    return tuple(runs)


def rerank_once(results: Sequence[int] | str) -> tuple[int, ...]:
    """One re-ranking pass: swap each loser run with the winner run below it.

    Returns the identity permutation when the results' path change is
    already 1 (nothing left to learn from this round).  Otherwise the
    output permutation reduces path change by exactly 2 and attains the
    maximum displacement among all permutations obeying the fairness rules.
    """
    results = validate_results(results)
    n = len(results)
    if path_change(results) == 1:
        return tuple(range(1, n + 1))
    runs = decompose_runs(results)
    order: list[int] = []
    i = 0
    while i < len(runs):
        run = runs[i]
        # Runs alternate outcomes, so the run after a loser run is a winner run.
        if run.outcome == LOSS and i + 1 < len(runs):
            winners = runs[i + 1]
            order.extend(range(winners.start, winners.start + winners.length))
            order.extend(range(run.start, run.start + run.length))
            i += 2
        else:
            order.extend(range(run.start, run.start + run.length))
            i += 1
    return tuple(order)


def permute_results(results: Sequence[int] | str, order: Sequence[int]) -> tuple[int, ...]:
    """Reorder a result vector by an order-form permutation.

    Entry ``k`` of the output is the outcome of the player placed at rank
    ``k`` by ``order``.
    """
    results = validate_results(results)
    return tuple(results[p - 1] for p in order)


def rerank(results: Sequence[int] | str, passes: int = 1) -> tuple[int, ...]:
    """Iterate :func:`rerank_once` up to ``passes`` times, composing passes.

    Each pass operates on the result vector as permuted by the passes so
    far and lowers its path change by 2; iteration stops early once the
    path change reaches 1.  ``passes=1`` is exactly :func:`rerank_once`.
    """
    if passes < 1:
        raise ValueError(f"passes must be >= 1, got {passes}")
    current = validate_results(results)
    n = len(current)
    order = tuple(range(1, n + 1))
    for _ in range(passes):
        if path_change(current) == 1:
            break
        step = rerank_once(current)
        order = tuple(order[p - 1] for p in step)
        current = permute_results(current, step)
    return order


def full_sort(results: Sequence[int] | str) -> tuple[int, ...]:
    """Stable partition: all winners (in original order) above all losers.

    This is the unconstrained displacement maximizer and the fixed point of
    repeated re-ranking; the sorted results have path change 1.
    """
    results = validate_results(results)
    ranks = range(1, len(results) + 1)
    winners = [r for r in ranks if results[r - 1] == WIN]
    losers = [r for r in ranks if results[r - 1] == LOSS]
    return tuple(winners + losers)
