"""Hunting for chains whose independence ratio alpha/r is small.

The proven floor says alpha/r >= max(1, ceil(floor(r/3)/2))/r, roughly
1/6, but nobody knows how close real chains can get. This script runs
seeded annealing over resplit/swap/relabel moves with the exact solver as
the objective, persists the results as line-delimited JSON records, and
reloads them with full re-verification.
"""

import sys
import tempfile
from fractions import Fraction
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from chaincliq import (
    SearchConfig,
    alon_guarantee,
    append_record,
    load_records,
    local_search_min_ratio,
)

N, R, BUDGET = 6, 9, 4_000
print("=" * 72)
print(f"Annealing over chains with n={N}, r={R}, budget={BUDGET} per seed")
print(f"proven floor on the ratio: {Fraction(alon_guarantee(R), R)}")
print("=" * 72)

records_path = Path(tempfile.mkdtemp()) / "records.ldjson"
best = None
print(f"{'seed':>6} {'alpha':>6} {'ratio':>7} {'accepted moves':>15}")
for seed in range(8):
    record = local_search_min_ratio(SearchConfig(n=N, r=R, budget=BUDGET, seed=seed))
    append_record(records_path, record)
    print(f"{seed:>6} {record.alpha:>6} {str(record.ratio):>7} {record.move_trace_length:>15}")
    if best is None or record.ratio < best.ratio:
        best = record

print(f"\nbest ratio over all seeds: {best.ratio} (alpha {best.alpha} at r={R})")
print("best chain, step by step:")
for i, g in enumerate(best.chain.graphs, 1):
    print(f"  G_{i}: {sorted(g.edges)}")

reloaded = load_records(records_path, verify=True)
print(f"\nreloaded {len(reloaded)} records from {records_path.name} with every")
print("stored alpha recomputed from scratch: all consistent.")
print("Each record line embeds the chain itself, so any result in the file")
print("can be replayed or re-verified independently of this process.")
