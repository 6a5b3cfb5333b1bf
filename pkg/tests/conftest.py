"""Shared test helpers: exhaustive and random result vectors, providers."""

from __future__ import annotations

import itertools
import random

from linelim.model import WIN, LOSS


def all_result_vectors(n: int):
    """Every valid anti-symmetric result vector of length n (2**(n/2) of them)."""
    for half in itertools.product((WIN, LOSS), repeat=n // 2):
        yield half + tuple(1 - b for b in reversed(half))


def random_result_vector(rng: random.Random, n: int) -> tuple[int, ...]:
    half = tuple(rng.choice((WIN, LOSS)) for _ in range(n // 2))
    return half + tuple(1 - b for b in reversed(half))


def favorites(state) -> str:
    """Provider where the higher-ranked player always wins."""
    n = len(state.standings)
    return "W" * (n // 2) + "L" * (n // 2)


def valid_round_counts(players: int) -> list[int]:
    """All round counts the configuration bounds allow for this field size."""
    return [
        m
        for m in range(1, players // 2 + 1)
        if 2 ** m >= players
    ]
