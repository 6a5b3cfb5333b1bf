import pytest

from linelim.model import validate_config
from linelim.schedule import (
    ScheduleTooShort,
    build_schedule,
    schedule_objective,
    schedule_rows,
    validate_schedule,
)
from conftest import valid_round_counts

REFERENCE_SCHEDULE = (134, 122, 110, 98, 86, 76, 66, 56, 46, 36, 26, 16, 8, 4, 2)


class TestBuildSchedule:
    def test_reference_134_15(self):
        assert build_schedule(validate_config(134, 15)) == REFERENCE_SCHEDULE

    def test_pure_linear(self):
        assert build_schedule(validate_config(12, 6)) == (12, 10, 8, 6, 4, 2)

    def test_pure_knockout(self):
        assert build_schedule(validate_config(8, 3)) == (8, 4, 2)

    def test_smallest_field(self):
        assert build_schedule(validate_config(2, 1)) == (2,)

    def test_two_round_schedule(self):
        assert build_schedule(validate_config(4, 2)) == (4, 2)

    def test_all_small_configs_pass_validation(self):
        for players in range(4, 21, 2):
            for rounds in valid_round_counts(players):
                cfg = validate_config(players, rounds)
                counts = build_schedule(cfg)
                assert validate_schedule(counts, players, rounds) == [], (players, rounds)
                drops = [counts[i] - counts[i + 1] for i in range(len(counts) - 1)]
                assert all(d >= 2 and d % 2 == 0 for d in drops)
                assert all(a >= b for a, b in zip(drops, drops[1:]))


class TestScheduleObjective:
    def test_constant_drops_is_zero(self):
        assert schedule_objective((12, 10, 8, 6, 4, 2)) == 0

    def test_reference_schedule_objective(self):
        assert schedule_objective(REFERENCE_SCHEDULE) == 10
        # equals first drop minus last drop for nonincreasing drops
        assert schedule_objective(REFERENCE_SCHEDULE) == (134 - 122) - (4 - 2)

    def test_knockout_objective(self):
        assert schedule_objective((8, 4, 2)) == 2

    def test_two_rounds_has_no_interior(self):
        assert schedule_objective((4, 2)) == 0

    def test_too_short(self):
        with pytest.raises(ScheduleTooShort):
            schedule_objective((2,))


class TestValidateSchedule:
    def test_reference_schedule_is_clean(self):
        assert validate_schedule(REFERENCE_SCHEDULE, 134, 15) == []

    def test_halving_bound_and_config_violations(self):
        violations = validate_schedule((8, 2), 8, 2)
        assert any("more than half" in v for v in violations)
        assert any("too few rounds" in v for v in violations)
        assert len(violations) == 2

    def test_parity_violation(self):
        violations = validate_schedule((8, 5, 2))
        assert any("odd number (3)" in v for v in violations)

    def test_must_end_at_two(self):
        assert any("end at 2" in v for v in validate_schedule((8, 6, 4)))

    def test_increasing_drops_flagged(self):
        violations = validate_schedule((10, 8, 4, 2))
        assert any("increase" in v for v in violations)

    def test_empty_schedule(self):
        assert validate_schedule(()) == ["schedule is empty"]


class TestScheduleRows:
    def test_rows_include_final_round(self):
        assert schedule_rows((8, 4, 2)) == [(0, 8, 4), (1, 4, 2), (2, 2, 0)]
