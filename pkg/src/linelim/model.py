"""Core domain types for snake-paired elimination tournaments.

Players are identified by their seed, an integer in ``1..n`` fixed for the
tournament's lifetime; seed 1 is the strongest initial rank.  A standings
permutation appears in two mutually inverse forms:

* order form -- position ``k`` holds the player currently ranked ``k``
* assignment form -- position ``p`` holds the current rank of player ``p``

Both forms are permutations of ``1..n``; :func:`order_to_assignment` and
:func:`assignment_to_order` convert between them (each is its own inverse).

Round results are binary vectors ordered by pre-round rank, win = 1 and
loss = 0.  Snake pairing (rank ``i`` vs rank ``n+1-i``) forces anti-symmetry:
paired opponents have complementary outcomes, so ``b[i] + b[n+1-i] == 1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

WIN = 1
LOSS = 0


class TournamentError(Exception):
    """Base class for every domain error raised by this package."""


class InvalidConfig(TournamentError, ValueError):
    """Player/round counts violate the feasibility bounds."""


class OddPlayerCount(InvalidConfig):
    """Player count is odd (or below the two-player minimum)."""


class TooFewRounds(InvalidConfig):
    """Fewer rounds than binary results can distinguish: 2**rounds < players."""


class TooManyRounds(InvalidConfig):
    """More rounds than eliminations allow: rounds > players / 2."""


class NotAPermutation(TournamentError, ValueError):
    """Sequence is not a permutation of the expected rank set."""


class InvalidResultVector(TournamentError, ValueError):
    """Result vector fails length, binary-value, or anti-symmetry checks."""


@dataclass(frozen=True)
class Config:
    """A validated tournament size: ``players`` entrants over ``rounds`` rounds.

    Construct through :func:`validate_config`; the bounds are
    ``players`` even and at least 2, and ``ceil(log2(players)) <= rounds
    <= players / 2``.
    """

    players: int
    rounds: int


def config_violations(players: int, rounds: int) -> list[str]:
    """Return human-readable bound violations for (players, rounds), if any.

    Empty list means the pair is a valid configuration.  The lower round
    bound is checked as ``2**rounds >= players`` in exact integer
    arithmetic, never through a floating-point log.
    """
    violations = []
    if players < 2:
        violations.append(f"player count must be at least 2, got {players}")
    elif players % 2 != 0:
        violations.append(f"player count must be even, got {players}")
    if rounds < 1:
        violations.append(f"round count must be positive, got {rounds}")
    elif players >= 2:
        if 2 ** rounds < players:
            violations.append(
                f"too few rounds: 2**{rounds} < {players} players"
            )
        if rounds > players // 2:
            violations.append(
                f"too many rounds: {rounds} > {players}/2 eliminations available"
            )
    return violations


def validate_config(players: int, rounds: int) -> Config:
    """Validate a (players, rounds) pair and return a :class:`Config`.

    Raises :class:`OddPlayerCount`, :class:`TooFewRounds`, or
    :class:`TooManyRounds` (all subclasses of :class:`InvalidConfig`).
    """
    if players < 2 or players % 2 != 0:
        raise OddPlayerCount(
            f"player count must be an even integer >= 2, got {players}"
        )
    if rounds < 1 or 2 ** rounds < players:
        raise TooFewRounds(
            f"{rounds} rounds cannot rank {players} players (need 2**rounds >= players)"
        )
    if rounds > players // 2:
        raise TooManyRounds(
            f"{rounds} rounds exceed the {players // 2} eliminations available"
        )
    return Config(players=players, rounds=rounds)


def check_permutation(perm: Sequence[int]) -> tuple[int, ...]:
    """Return ``perm`` as a tuple after checking it permutes ``1..len(perm)``."""
    out = tuple(perm)
    if sorted(out) != list(range(1, len(out) + 1)):
        raise NotAPermutation(f"not a permutation of 1..{len(out)}: {out}")
    return out


def invert_permutation(perm: Sequence[int]) -> tuple[int, ...]:
    """Invert a permutation of ``1..n``; applying it twice is the identity."""
    perm = check_permutation(perm)
    inverse = [0] * len(perm)
    for position, value in enumerate(perm, start=1):
        inverse[value - 1] = position
    return tuple(inverse)


def order_to_assignment(order: Sequence[int]) -> tuple[int, ...]:
    """Convert order form (player by rank) to assignment form (rank by player)."""
    return invert_permutation(order)


def assignment_to_order(assignment: Sequence[int]) -> tuple[int, ...]:
    """Convert assignment form (rank by player) to order form (player by rank)."""
    return invert_permutation(assignment)


def displacement(perm: Sequence[int]) -> int:
    """Total absolute rank movement ``sum(|perm[k] - k|)`` of a permutation.

    This is the quantity the re-ranking step maximizes; a permutation and
    its inverse always have equal displacement.
    """
    perm = check_permutation(perm)
    return sum(abs(value - position) for position, value in enumerate(perm, start=1))


def parse_results(text: str) -> tuple[int, ...]:
    """Parse a ``"WLLW..."`` string into a win/loss tuple (no validation)."""
    outcomes = []
    for ch in text.strip().upper():
        if ch == "W":
            outcomes.append(WIN)
        elif ch == "L":
            outcomes.append(LOSS)
        else:
            raise InvalidResultVector(f"result characters must be W or L, got {ch!r}")
    return tuple(outcomes)


def results_to_string(results: Iterable[int]) -> str:
    """Format a win/loss sequence as a ``"WLLW..."`` string."""
    return "".join("W" if b == WIN else "L" for b in results)


def validate_results(results: Sequence[int] | str) -> tuple[int, ...]:
    """Check a result vector and return it as a tuple of 0/1 ints.

    Accepts either a ``"WL..."`` string or a sequence of 0/1.  Requires even
    length and the snake anti-symmetry ``b[i] + b[n+1-i] == 1``.
    """
    if isinstance(results, str):
        results = parse_results(results)
    out = tuple(results)
    n = len(out)
    if n == 0 or n % 2 != 0:
        raise InvalidResultVector(f"result vector length must be even and positive, got {n}")
    if any(b not in (WIN, LOSS) for b in out):
        raise InvalidResultVector(f"results must be 0/1 values: {out}")
    for i in range(n // 2):
        if out[i] + out[n - 1 - i] != 1:
            raise InvalidResultVector(
                f"anti-symmetry violated at ranks {i + 1} and {n - i}: "
                f"paired opponents need complementary outcomes"
            )
    return out


def path_change(results: Sequence[int] | str) -> int:
    """Count win/loss transitions in the results, padded by a leading win
    and a trailing loss.

    Value 1 means the results are perfectly sorted by rank (all wins above
    all losses); any valid anti-symmetric vector yields an odd value.
    """
    out = validate_results(results)
    padded = (WIN,) + out + (LOSS,)
    return sum(1 for a, b in zip(padded, padded[1:]) if a != b)
