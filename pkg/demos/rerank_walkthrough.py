#!/usr/bin/env python3
"""Step through the re-ranking of one 14-player round of results.

The result vector is ordered by pre-round rank and anti-symmetric because
rank i played rank n+1-i.  Re-ranking swaps each maximal run of losers
with the run of winners just below it, which is the displacement-maximal
move that reduces the result vector's path change by exactly 2.
"""

from linelim import (
    decompose_runs,
    displacement,
    full_sort,
    order_to_assignment,
    path_change,
    permute_results,
    rerank,
    rerank_once,
    results_to_string,
)

results = "WLLWWWLWLLLWWL"
n = len(results)

print("results by pre-round rank:", " ".join(results))
print("path change (with leading W / trailing L padding):", path_change(results))
print()
print("maximal runs:")
for run in decompose_runs(results):
    label = "winners" if run.outcome else "losers "
    print(f"  ranks {run.start:>2}..{run.start + run.length - 1:<2} {label}")

order = rerank_once(results)
print()
print("new standings (pre-round ranks in new-rank order):")
print("  ", " ".join(map(str, order)))
print("total rank movement:", displacement(order))
print("results re-sorted by the new ranks:", results_to_string(permute_results(results, order)))
print("path change after:", path_change(permute_results(results, order)))

print()
print("each matched pair moves zero-sum:")
new_rank = order_to_assignment(order)
for i in range(n // 2):
    a, b = i + 1, n - i
    print(
        f"  pair ranks ({a:>2},{b:>2}): "
        f"{a:>2} -> {new_rank[a - 1]:>2}  and  {b:>2} -> {new_rank[b - 1]:>2}"
    )

print()
print("extra passes keep shaving the path change by 2:")
for passes in range(1, 4):
    order = rerank(results, passes=passes)
    after = path_change(permute_results(results, order))
    print(f"  passes={passes}: order {' '.join(map(str, order))}  path change {after}")
print("fixed point is the stable winners-then-losers sort:")
print("  ", " ".join(map(str, full_sort(results))))
