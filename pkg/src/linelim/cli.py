"""Command-line interface: schedules, re-ranking, simulation, live runs,
and the HTTP service.

Domain validation failures exit with status 2 and a message on stderr.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click

from .engine import (
    apply_results,
    final_ranking,
    new_tournament,
    pair_round,
    save_log,
    tournament_to_log,
)
from .formats import KINDS, FormatDescriptor
from .model import (
    TournamentError,
    parse_results,
    path_change,
    validate_config,
)
from .rerank import permute_results, rerank
from .schedule import build_schedule, schedule_rows
from .simulate import (
    BRADLEY_TERRY,
    DETERMINISTIC,
    SEEDINGS,
    StrengthModel,
    champion_csv,
    harmonic_strengths,
    report_to_json,
    simulate,
)


@click.group()
def main() -> None:
    """Linear-elimination tournament toolkit."""


@main.command("schedule")
@click.argument("players", type=int)
@click.argument("rounds", type=int)
@click.option(
    "--format", "fmt", type=click.Choice(["json", "csv"]), default="json",
    help="Output format.",
)
def cli_schedule(players: int, rounds: int, fmt: str) -> None:
    """Print the per-round remaining-player schedule for PLAYERS over ROUNDS."""
    try:
        counts = build_schedule(validate_config(players, rounds))
    except TournamentError as err:
        raise click.UsageError(str(err))
    if fmt == "json":
        click.echo(json.dumps(list(counts)))
    else:
        click.echo("round,remaining,eliminated")
        for row in schedule_rows(counts):
            click.echo(",".join(str(v) for v in row))


@main.command("rerank")
@click.argument("results")
@click.option("--passes", type=int, default=1, show_default=True,
              help="Number of re-ranking passes to compose.")
def cli_rerank(results: str, passes: int) -> None:
    """Re-rank one round of results given as a W/L string (by current rank)."""
    try:
        vec = parse_results(results)
        before = path_change(vec)
        order = rerank(vec, passes)
        after = path_change(permute_results(vec, order))
    except (TournamentError, ValueError) as err:
        raise click.UsageError(str(err))
    click.echo(" ".join(str(p) for p in order))
    if before == 1:
        click.echo("path change already 1; standings unchanged")
    else:
        click.echo(f"path change: {before} -> {after}")


@main.command("simulate")
@click.argument("kind", type=click.Choice(list(KINDS)))
@click.argument("players", type=int)
@click.option("--rounds", type=int, default=None,
              help="Round count (required for linear-elimination).")
@click.option("--model", "rule", type=click.Choice([BRADLEY_TERRY, DETERMINISTIC]),
              default=BRADLEY_TERRY, show_default=True)
@click.option("--strengths", default=None,
              help="Comma-separated player strengths; default is 1,1/2,1/3,...")
@click.option("--trials", type=int, default=10000, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--seeding", type=click.Choice(list(SEEDINGS)), default="true-order",
              show_default=True)
@click.option("--noise-sigma", type=float, default=0.0,
              help="Gaussian noise scale for noisy seeding.")
@click.option("--passes", type=int, default=1, show_default=True,
              help="Re-ranking passes per round (linear elimination only).")
@click.option("--csv", "as_csv", is_flag=True,
              help="Emit the per-seed champion distribution as CSV instead of JSON.")
def cli_simulate(kind, players, rounds, rule, strengths, trials, seed, seeding,
                 noise_sigma, passes, as_csv) -> None:
    """Monte Carlo efficiency report for a tournament format."""
    try:
        if strengths is None:
            values = harmonic_strengths(players)
        else:
            values = tuple(float(s) for s in strengths.split(","))
        report = simulate(
            FormatDescriptor(kind, players, rounds),
            StrengthModel(values, rule),
            trials=trials,
            seed=seed,
            seeding=seeding,
            noise_sigma=noise_sigma,
            passes=passes,
        )
    except (TournamentError, ValueError) as err:
        raise click.UsageError(str(err))
    click.echo(champion_csv(report) if as_csv else report_to_json(report))


@main.command("run")
@click.argument("players", type=int)
@click.argument("rounds", type=int)
@click.option("--input", "input_path", type=click.Path(exists=True, dir_okay=False),
              default=None, help="Results file, one W/L line per round; "
              "omit for interactive entry.")
@click.option("--log", "log_path", type=click.Path(dir_okay=False), default=None,
              help="Where to write the event log (default: tournament-<id>.json).")
@click.option("--passes", type=int, default=1, show_default=True)
def cli_run(players: int, rounds: int, input_path, log_path, passes: int) -> None:
    """Run a tournament to completion from a results file or interactively."""
    try:
        state = new_tournament(players, rounds, passes)
    except TournamentError as err:
        raise click.UsageError(str(err))

    lines = None
    if input_path is not None:
        lines = [
            line.strip()
            for line in Path(input_path).read_text().splitlines()
            if line.strip()
        ]

    while not state.completed:
        t = state.round_index
        pairs = pair_round(state)
        n = len(state.standings)
        if lines is not None:
            if t >= len(lines):
                raise click.UsageError(f"round {t}: no results line in {input_path}")
            results = lines[t]
        else:
            click.echo(f"round {t} pairings (rank i vs rank n+1-i):")
            vec = ["L"] * n
            for i, (a, b) in enumerate(pairs):
                winner = click.prompt(
                    f"  rank {i + 1} (seed {a}) vs rank {n - i} (seed {b}) -- winning seed",
                    type=click.Choice([str(a), str(b)]),
                    show_choices=True,
                )
                vec[i if int(winner) == a else n - 1 - i] = "W"
            results = "".join(vec)
        try:
            state = apply_results(state, results)
        except TournamentError as err:
            raise click.UsageError(f"round {t}: {err}")
        record = state.history[-1]
        click.echo(
            f"round {t}: standings {' '.join(map(str, record.standings))}"
            + (f" | eliminated {list(record.eliminated)}" if record.eliminated else "")
        )

    ranking = final_ranking(state)
    if log_path is None:
        log_path = f"tournament-{players}x{rounds}.json"
    save_log(state, log_path)
    click.echo(f"champion: seed {state.champion}")
    click.echo(f"final ranking: {' '.join(map(str, ranking))}")
    click.echo(f"event log written to {log_path}")


@main.command("serve")
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8440, show_default=True)
@click.option("--data-dir", default=None,
              help="Event-log directory (default: $LINELIM_DATA_DIR or ./linelim-data).")
def cli_serve(host: str, port: int, data_dir) -> None:
    """Serve the tournament HTTP API on localhost."""
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(data_dir), host=host, port=port)


if __name__ == "__main__":
    main()
