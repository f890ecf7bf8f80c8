"""
Two brute-force oracles
=======================

Ground truth at small scale.  One counts admissible tuples directly over
Z_t, the other goes through independent sets of the sum graph, weighting
each set by the number of ways to fill an n-tuple from it.
"""

import time

from threshold_arrangements import (
    Family,
    ReducedFamily,
    SumGraph,
    brute_count_tuples,
    case_counts,
    count_tuples_via_independent_sets,
)

fam = ReducedFamily(Family.ST, 3, 2)
t = 37

start = time.perf_counter()
direct = brute_count_tuples(fam, t).count
mid = time.perf_counter()
via_sets = count_tuples_via_independent_sets(SumGraph.for_family(fam, t), fam.n)
end = time.perf_counter()
print(f"tuples: {direct} ({mid - start:.3f}s)   independent sets: {via_sets} ({end - mid:.3f}s)")

# %%
# The engine gets the same number from interval counting in milliseconds.
b = case_counts(fam, t)
print("engine:", b.total)
print("parts:", b.N, b.N_p_first_clique, b.N_p_second_clique, b.N_pairs)

# %%
# Looped vertices: 2v is forbidden, so v can appear at most once in a tuple.
g = SumGraph.for_family(fam, t)
print(sorted(g.loops()))
