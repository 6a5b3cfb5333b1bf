import pytest

from linelim.model import Config, displacement, validate_config
from linelim.oracle import (
    Infeasible,
    InstanceTooLarge,
    brute_force_rerank,
    brute_force_schedule,
    feasible_schedules,
    optimal_schedules,
)
from linelim.rerank import rerank_once
from linelim.schedule import build_schedule, schedule_objective
from conftest import all_result_vectors, valid_round_counts


class TestBruteForceRerank:
    def test_sorted_results_admit_only_identity(self):
        assert brute_force_rerank("WWLL") == (0, {(1, 2, 3, 4)})

    def test_two_player_upset(self):
        best, maximizers = brute_force_rerank("LW")
        assert best == 2
        assert (2, 1) in maximizers

    def test_alternating_four(self):
        best, maximizers = brute_force_rerank("LWLW")
        assert best == 4
        assert (2, 1, 4, 3) in maximizers

    def test_guard(self):
        with pytest.raises(InstanceTooLarge):
            brute_force_rerank("W" * 8 + "L" * 8)  # 16 players

    def test_agreement_with_fast_path_small(self):
        for n in (2, 4, 6, 8):
            for vec in all_result_vectors(n):
                best, maximizers = brute_force_rerank(vec)
                fast = rerank_once(vec)
                assert displacement(fast) == best, vec
                assert fast in maximizers, vec


class TestScheduleEnumeration:
    def test_unique_feasible_knockout(self):
        assert list(feasible_schedules(validate_config(8, 3))) == [(8, 4, 2)]

    def test_constant_drop_sequence_is_feasible(self):
        assert (8, 6, 4, 2) in set(feasible_schedules(validate_config(8, 4)))

    def test_guard(self):
        with pytest.raises(InstanceTooLarge):
            list(feasible_schedules(validate_config(22, 11)))

    def test_every_candidate_respects_constraints(self):
        for counts in feasible_schedules(validate_config(16, 5)):
            assert counts[0] == 16 and counts[-1] == 2 and len(counts) == 5
            for t in range(len(counts) - 1):
                drop = counts[t] - counts[t + 1]
                assert drop >= 2 and drop % 2 == 0
                assert counts[t] <= 2 * counts[t + 1]


class TestBruteForceSchedule:
    @pytest.mark.parametrize("players,rounds,expected", [(12, 6, 0), (8, 3, 2), (8, 4, 0)])
    def test_known_minima(self, players, rounds, expected):
        assert brute_force_schedule(validate_config(players, rounds)) == expected

    def test_infeasible_config(self):
        # bypasses validation: 8 players cannot reach 2 in 2 rounds
        with pytest.raises(Infeasible):
            brute_force_schedule(Config(8, 2))

    def test_construction_attains_minimum_everywhere(self):
        for players in range(4, 21, 2):
            for rounds in valid_round_counts(players):
                cfg = validate_config(players, rounds)
                built = build_schedule(cfg)
                objective = schedule_objective(built) if len(built) > 1 else 0
                assert objective == brute_force_schedule(cfg), cfg

    def test_all_optima_have_nonincreasing_drops(self):
        # empirical confirmation of the nonincreasing-change property of optima
        for players in range(4, 21, 2):
            for rounds in valid_round_counts(players):
                for counts in optimal_schedules(validate_config(players, rounds)):
                    drops = [counts[t] - counts[t + 1] for t in range(len(counts) - 1)]
                    assert all(a >= b for a, b in zip(drops, drops[1:])), counts
