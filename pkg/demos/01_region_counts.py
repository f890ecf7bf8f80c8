"""
Region counts of threshold arrangements
=======================================

The arrangement x_i + x_j = -l, ..., k (all pairs i < j) in R^n.  Its
characteristic polynomial is found by counting points of the complement over
Z_t at a handful of odd t and interpolating; regions come from chi(-1).
"""

from threshold_arrangements import ArrangementSpec, characteristic_polynomial

# the threshold arrangement itself: x_i + x_j = 0, 1
for n in range(2, 8):
    res = characteristic_polynomial(ArrangementSpec(n, 1, 0))
    print(f"n={n}: {res.poly}   regions = {res.regions}")

# %%
# Negative constants are allowed.  With l odd the constants can be shifted
# to start at 1 instead of 0, with l even to start at 0.
res = characteristic_polynomial(ArrangementSpec(4, 2, 3))
print(res.family, res.poly, res.regions)

# %%
# The samples behind the interpolation, last one held out as a check.
for t, count in res.samples:
    print(t, count)
