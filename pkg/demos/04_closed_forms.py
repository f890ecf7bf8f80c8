"""
Closed forms
============

Known formulas for x_i + x_j = 0, 1 and x_i + x_j = -1, 0, 1, and the
classical braid, Shi and Catalan arrangements, against the engine.
"""

from math import comb, factorial

from threshold_arrangements import (
    ArrangementSpec,
    characteristic_polynomial,
    chi_braid,
    chi_catalan,
    chi_seo_CT,
    chi_seo_ST,
    chi_shi,
    regions,
)

for n in range(2, 7):
    st_ok = characteristic_polynomial(ArrangementSpec(n, 1, 0)).poly == chi_seo_ST(n)
    ct_ok = characteristic_polynomial(ArrangementSpec(n, 1, 1)).poly == chi_seo_CT(n)
    print(n, st_ok, ct_ok, chi_seo_CT(n))

# %%
# Region counts of the difference arrangements.
for n in range(1, 7):
    print(n, regions(chi_braid(n), n), regions(chi_shi(n), n), regions(chi_catalan(n), n),
          factorial(n) * comb(2 * n, n) // (n + 1))
