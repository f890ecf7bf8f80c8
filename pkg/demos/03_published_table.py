"""
Checking a published table
==========================

A table of ST_{n,k} characteristic polynomials for k = 1, 2, 3.  Every
entry is compared with the engine and with brute-force counts at two primes
above a safe bound.  Entries that cannot be characteristic polynomials (wrong
t^{n-1} coefficient, signs not alternating) are flagged before any
computation.
"""

from threshold_arrangements import ArrangementSpec, adjudicate, load_published_table

table = load_published_table()
for entry in table.entries:
    rep = adjudicate(ArrangementSpec(entry.n, entry.k, 0))
    print(f"n={entry.n} k={entry.k}: {rep.verdict.value}")
    if rep.verdict.value != "AllAgree":
        print(f"   published {entry.poly}")
        print(f"   computed  {rep.engine_poly}")
        for problem in entry.problems:
            print(f"   ({problem})")

# %%
for seq in table.sequences:
    print(f"k={seq.k} regions from n={seq.n_from}:", seq.regions, "disputed:", seq.disputed)
