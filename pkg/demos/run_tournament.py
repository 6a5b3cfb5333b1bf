#!/usr/bin/env python3
"""Play a full 14-player, 7-round tournament with random results.

Shows the round loop end to end: snake pairings, a result vector sampled
for each round, re-ranked standings, eliminations, and the final ranking.
The closing section writes the event log and replays it to the same state.
"""

import json
import random
import tempfile
from pathlib import Path

from linelim import (
    apply_results,
    final_ranking,
    load_log,
    new_tournament,
    pair_round,
    results_to_string,
    save_log,
)

rng = random.Random(14)
state = new_tournament(players=14, rounds=7)
print("schedule:", " ".join(map(str, state.schedule)))

while not state.completed:
    pairs = pair_round(state)
    n = len(state.standings)
    # sample one winner per pair; the vector is indexed by pre-round rank
    vec = [0] * n
    for i, (a, b) in enumerate(pairs):
        if rng.random() < 0.7:  # the better-ranked seed usually wins
            vec[i] = 1
        else:
            vec[n - 1 - i] = 1
    state = apply_results(state, vec)
    record = state.history[-1]
    print(f"\nround {record.round_index}: results {results_to_string(record.results)}")
    print("  new standings:", " ".join(map(str, record.standings)))
    if record.eliminated:
        print("  eliminated:", ", ".join(f"seed {s}" for s in record.eliminated))

print(f"\nchampion: seed {state.champion}")
print("final ranking:", " ".join(map(str, final_ranking(state))))

with tempfile.TemporaryDirectory() as tmp:
    path = Path(tmp) / "tournament.json"
    save_log(state, path)
    replayed = load_log(path)
    doc = json.loads(path.read_text())
    print(f"\nevent log: {len(doc['history'])} round records, "
          f"replay identical: {replayed == state}")
