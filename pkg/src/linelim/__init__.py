"""linelim: linear-elimination tournament design, simulation, and operation.

The format sits between a knockout and a round-robin: every round pairs
rank i with rank n+1-i, results re-rank the field under fairness
constraints, and a near-constant number of losers is eliminated until two
remain for the final.
"""

from .model import (
    LOSS,
    WIN,
    Config,
    InvalidConfig,
    InvalidResultVector,
    NotAPermutation,
    OddPlayerCount,
    TooFewRounds,
    TooManyRounds,
    TournamentError,
    assignment_to_order,
    config_violations,
    displacement,
    invert_permutation,
    order_to_assignment,
    parse_results,
    path_change,
    results_to_string,
    validate_config,
    validate_results,
)
from .rerank import Run, decompose_runs, full_sort, permute_results, rerank, rerank_once
from .schedule import (
    ScheduleTooShort,
    build_schedule,
    schedule_objective,
    schedule_rows,
    validate_schedule,
)
from .engine import (
    AntiSymmetryViolation,
    BadResultLength,
    RoundRecord,
    TournamentComplete,
    TournamentInProgress,
    TournamentState,
    apply_results,
    final_ranking,
    load_log,
    new_tournament,
    pair_round,
    run_tournament,
    save_log,
    tournament_from_log,
    tournament_to_log,
)
from .formats import (
    KINDS,
    LINEAR_ELIMINATION,
    ROUND_ROBIN,
    SINGLE_ELIMINATION,
    FormatDescriptor,
    IncompleteResults,
    InvalidFormat,
    NotPowerOfTwo,
    bracket_order,
    round_robin_rank,
    round_robin_schedule,
    run_round_robin,
    run_single_elim,
    single_elim_round,
    validate_format,
)
from .simulate import (
    BRADLEY_TERRY,
    DETERMINISTIC,
    EqualStrengths,
    MismatchedRankings,
    SimulationReport,
    StrengthModel,
    champion_csv,
    harmonic_strengths,
    kendall_tau,
    report_to_dict,
    report_to_json,
    simulate,
    win_prob,
)
from .oracle import (
    Infeasible,
    InstanceTooLarge,
    brute_force_rerank,
    brute_force_schedule,
    feasible_schedules,
    optimal_schedules,
)

__version__ = "0.1.0"
