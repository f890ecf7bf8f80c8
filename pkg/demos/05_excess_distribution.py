"""
Excess distributions
====================

Inside the engine every count reduces to independent sets of a bipartite
graph between two intervals.  For a choice of upper vertices the number of
lower vertices left free is g, a sum of clipped gaps; the distribution of g
over all l-subsets is built by dynamic programming instead of enumeration.
"""

import itertools

from threshold_arrangements import SlicePlan, count_I, excess_distribution

plan = SlicePlan(lower=2, upper=5, gap_penalty=3, tail_offset=4)
for l in range(4):
    print(l, excess_distribution(plan, l).counts)

# %%
# Same thing by enumeration.
for l in range(4):
    seen = {}
    for chosen in itertools.combinations(range(plan.lower, plan.upper + 1), l):
        g = plan.excess(chosen)
        seen[g] = seen.get(g, 0) + 1
    print(l, dict(sorted(seen.items())))

# %%
# I(q) never builds the distribution, so its cost does not grow with the window.
big = SlicePlan(lower=3, upper=50_000, gap_penalty=4, tail_offset=49_998, shift=1)
print([count_I(big, q) for q in range(4)])
