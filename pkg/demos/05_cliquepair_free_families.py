"""Largest families of graphs avoiding the nested clique-difference pair.

A clique pair is two graphs G strictly inside H whose difference H minus
G is a clique. How many graphs on {1..n} can a family contain before a
clique pair is forced? At desk scale the question is answered exactly by
solving maximum independent set on the conflict graph over all 2^C(n,2)
graphs.
"""

import sys
from fractions import Fraction
from math import comb
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from chaincliq import family_has_clique_pair, make_graph, max_cliquepair_free_family

print("=" * 72)
print("Exact extremal sizes of clique-pair-free families")
print("=" * 72)
print(f"{'n':>3} {'graphs':>8} {'max free':>9} {'density':>10}")
for n in (2, 3, 4):
    report = max_cliquepair_free_family(n)
    total = 1 << comb(n, 2)
    print(
        f"{n:>3} {total:>8} {report.max_free_size:>9} "
        f"{str(Fraction(report.max_free_size, total)):>10}"
    )

report = max_cliquepair_free_family(3)
print("\none extremal family for n=3:")
for g in sorted(report.family, key=lambda g: g.mask):
    print(f"  {sorted(g.edges) or '(empty graph)'}")
print(f"contains a clique pair: {family_has_clique_pair(3, report.family)}")

print("\nand an example where a pair is unavoidable:")
family = {make_graph(3, []), make_graph(3, [(1, 2)]), make_graph(3, [(1, 3), (2, 3)])}
pair = family_has_clique_pair(3, family)
low, high = pair
print(f"  in {{empty, one edge, a path}}: {sorted(low.edges) or '{}'} sits inside "
      f"{sorted(high.edges)} and the difference is a single edge, the 2-clique")
