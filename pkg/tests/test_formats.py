import itertools
import random

import pytest

from linelim.formats import (
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


def by_seed(a: int, b: int) -> int:
    return min(a, b)


class TestValidateFormat:
    def test_linear_needs_rounds(self):
        with pytest.raises(InvalidFormat):
            validate_format(FormatDescriptor("linear-elimination", 8))
        validate_format(FormatDescriptor("linear-elimination", 8, 3))

    def test_single_elim_power_of_two(self):
        desc = validate_format(FormatDescriptor("single-elimination", 8))
        assert desc.rounds == 3
        with pytest.raises(NotPowerOfTwo):
            validate_format(FormatDescriptor("single-elimination", 6))

    def test_round_robin_rounds_derived(self):
        assert validate_format(FormatDescriptor("round-robin", 6)).rounds == 5
        with pytest.raises(InvalidFormat):
            validate_format(FormatDescriptor("round-robin", 5))

    def test_unknown_kind(self):
        with pytest.raises(InvalidFormat):
            validate_format(FormatDescriptor("swiss", 8))


class TestBracket:
    def test_first_round_opponents_sum(self):
        for n in (2, 4, 8, 16, 32):
            order = bracket_order(n)
            assert sorted(order) == list(range(1, n + 1))
            for i in range(0, n, 2):
                assert order[i] + order[i + 1] == n + 1

    def test_not_power_of_two(self):
        with pytest.raises(NotPowerOfTwo):
            bracket_order(6)

    def test_two_players_single_match(self):
        assert bracket_order(2) == (1, 2)
        assert single_elim_round((1, 2), "WL") == (1,)

    def test_favorites_meet_in_standard_order(self):
        # seed 1 beats 4 and seed 2 beats 3 in the semis, then 1 beats 2
        ranking, log = run_single_elim(4, by_seed)
        final_match = log["history"][-1]["pairings"]
        assert {frozenset(p) for p in final_match} == {frozenset((1, 2))}
        assert ranking == (1, 2, 3, 4)

    def test_all_underdogs_semifinalists(self):
        bracket = bracket_order(8)
        results = ["L", "W"] * 4  # away player wins every opening match
        winners = single_elim_round(bracket, "".join(results))
        assert winners == (8, 5, 6, 7)

    def test_winners_advance_positionally(self):
        nxt = single_elim_round((1, 8, 4, 5, 3, 6, 2, 7), "WLWLWLWL")
        assert nxt == (1, 4, 3, 2)

    def test_mismatched_results_rejected(self):
        with pytest.raises(IncompleteResults):
            single_elim_round((1, 2, 3, 4), "WL")
        with pytest.raises(IncompleteResults):
            single_elim_round((1, 2, 3, 4), "WWLL")

    def test_full_run_ranks_by_round_reached(self):
        def upsets(a, b):
            return max(a, b)

        ranking, log = run_single_elim(8, upsets)
        assert log["champion"] == ranking[0] == 8
        # losers of earlier rounds rank below losers of later rounds
        first_out = set(log["history"][0]["eliminated"])
        assert set(ranking[-4:]) == first_out


class TestRoundRobinSchedule:
    @pytest.mark.parametrize("n", [2, 4, 6, 8, 12])
    def test_circle_method_properties(self, n):
        rounds = round_robin_schedule(n)
        assert len(rounds) == n - 1
        for matches in rounds:
            seen = sorted(p for match in matches for p in match)
            assert seen == list(range(1, n + 1))
        all_pairs = [frozenset(m) for matches in rounds for m in matches]
        assert len(all_pairs) == len(set(all_pairs)) == n * (n - 1) // 2

    def test_odd_field_rejected(self):
        with pytest.raises(InvalidFormat):
            round_robin_schedule(5)


class TestRoundRobinRank:
    @staticmethod
    def results_by(n, pick):
        return {
            (i, j): pick(i, j)
            for i, j in itertools.combinations(range(1, n + 1), 2)
        }

    def test_seed_order_wins(self):
        winners = self.results_by(4, by_seed)
        assert round_robin_rank(4, winners) == (1, 2, 3, 4)

    def test_cycle_broken_by_seed(self):
        # 1 beats 2, 2 beats 3, 3 beats 1: all tied at one win, seed decides
        winners = {(1, 2): 1, (2, 3): 2, (1, 3): 3}
        # pad to an even 4-player field where 4 loses everything
        winners.update({(1, 4): 1, (2, 4): 2, (3, 4): 3})
        ranking = round_robin_rank(4, winners)
        assert ranking[-1] == 4
        assert ranking[:3] == (1, 2, 3)

    def test_one_upset_head_to_head(self):
        def pick(i, j):
            if (i, j) == (1, 4):
                return 4
            return min(i, j)

        winners = self.results_by(4, pick)
        # win counts 2,2,1,1; head-to-head resolves both ties: 1 beat 2, 3 beat 4
        assert round_robin_rank(4, winners) == (1, 2, 3, 4)

    def test_invariant_to_supply_order(self):
        rng = random.Random(1)
        winners = self.results_by(6, lambda i, j: rng.choice((i, j)))
        baseline = round_robin_rank(6, winners)
        items = list(winners.items())
        for _ in range(10):
            rng.shuffle(items)
            assert round_robin_rank(6, dict(items)) == baseline

    def test_incomplete_results(self):
        winners = self.results_by(4, by_seed)
        del winners[(2, 3)]
        with pytest.raises(IncompleteResults):
            round_robin_rank(4, winners)

    def test_winner_must_be_in_pair(self):
        winners = self.results_by(4, by_seed)
        winners[(1, 2)] = 3
        with pytest.raises(IncompleteResults):
            round_robin_rank(4, winners)

    def test_run_round_robin_log_shape(self):
        ranking, log = run_round_robin(4, by_seed)
        assert ranking == (1, 2, 3, 4)
        assert log["format"] == "round-robin"
        assert len(log["history"]) == 3
