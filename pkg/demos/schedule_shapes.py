#!/usr/bin/env python3
"""How the elimination schedule bends between knockout and round-robin.

For a fixed field, sweeping the round budget from the minimum (a pure
knockout) to the maximum (two eliminated per round) shows the schedule
flattening out: the objective below counts how unevenly eliminations are
spread, and hits 0 when every round drops the same number.
"""

from linelim import build_schedule, schedule_objective, validate_config

players = 32
print(f"{players} players, every feasible round budget:\n")
print(f"{'rounds':>6}  {'unevenness':>10}  schedule")
for rounds in range(1, players // 2 + 1):
    if 2 ** rounds < players:
        continue
    counts = build_schedule(validate_config(players, rounds))
    objective = schedule_objective(counts) if len(counts) > 1 else 0
    print(f"{rounds:>6}  {objective:>10}  {' '.join(map(str, counts))}")

print()
print("The reference 134-player, 15-round schedule:")
counts = build_schedule(validate_config(134, 15))
drops = [a - b for a, b in zip(counts, counts[1:])]
print("  remaining:", " ".join(map(str, counts)))
print("  eliminated per round:", " ".join(map(str, drops)))
print("  unevenness:", schedule_objective(counts))
