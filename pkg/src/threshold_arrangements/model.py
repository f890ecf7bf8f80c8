"""Arrangement specifications, the parity reduction, the sum graph over Z_m,
and two brute-force counting oracles.

A tuple ``(x_1, ..., x_n)`` over Z_t is *admissible* for a forbidden residue
set F when ``x_i + x_j mod t`` avoids F for every pair ``i < j``.  For a good
modulus the number of admissible tuples is the characteristic polynomial of
the arrangement evaluated at t.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator

import numpy as np

from .errors import BudgetExceeded
from .exact import binomial, falling, stirling2

DEFAULT_BUDGET = 10**9

# rows of candidate extensions materialised at once by the tuple oracle
_CHUNK_CELLS = 1 << 22


class Family(str, Enum):
    ST = "ST"  # constants 0..k
    CT = "CT"  # constants 1..k


@dataclass(frozen=True)
class ArrangementSpec:
    """Hyperplanes x_i + x_j = -l, ..., k for all 1 <= i < j <= n."""

    n: int
    k: int
    l: int = 0

    def __post_init__(self):
        if self.n < 1 or self.k < 0 or self.l < 0:
            raise ValueError(f"need n >= 1, k >= 0, l >= 0; got {self}")

    @property
    def constants(self) -> range:
        return range(-self.l, self.k + 1)


@dataclass(frozen=True)
class ReducedFamily:
    family: Family
    n: int
    k_eff: int

    @property
    def forbidden(self) -> range:
        if self.family is Family.ST:
            return range(0, self.k_eff + 1)
        return range(1, self.k_eff + 1)


@dataclass(frozen=True)
class AdmissibleTupleCount:
    t: int
    count: int


def reduce(spec: ArrangementSpec) -> ReducedFamily:
    """Translate every coordinate by ceil(l/2) so the constants start at 0 or 1."""
    if spec.l % 2 == 0:
        return ReducedFamily(Family.ST, spec.n, spec.k + spec.l)
    return ReducedFamily(Family.CT, spec.n, spec.k + spec.l + 1)


def hyperplane_count(spec: ArrangementSpec) -> int:
    return binomial(spec.n, 2) * (spec.k + spec.l + 1)


class SumGraph:
    """Graph on the signed residues -r..r of Z_m, u ~ v iff u + v mod m is forbidden.

    A vertex v whose double 2v is forbidden carries a self-loop; it may appear
    in an admissible tuple at most once.
    """

    def __init__(self, m: int, forbidden: Iterable[int]):
        if m < 3 or m % 2 == 0:
            raise ValueError(f"modulus must be odd and >= 3, got {m}")
        self.m = m
        self.r = (m - 1) // 2
        self.forbidden = frozenset(c % m for c in forbidden)

    @classmethod
    def for_family(cls, family: ReducedFamily, m: int) -> SumGraph:
        return cls(m, family.forbidden)

    def __repr__(self):
        return f"SumGraph(m={self.m}, forbidden={sorted(self.forbidden)})"

    def normalize(self, x: int) -> int:
        return (x + self.r) % self.m - self.r

    def vertices(self) -> list[int]:
        return list(range(-self.r, self.r + 1))

    def is_edge(self, u: int, v: int) -> bool:
        return (u + v) % self.m in self.forbidden

    def has_loop(self, v: int) -> bool:
        return (2 * v) % self.m in self.forbidden

    def loops(self) -> set[int]:
        return {v for v in self.vertices() if self.has_loop(v)}

    def neighbors(self, v: int) -> set[int]:
        """Distinct neighbours of v (a self-loop is not reported)."""
        return {self.normalize(c - v) for c in self.forbidden} - {v}


def is_edge(g: SumGraph, u: int, v: int) -> bool:
    return g.is_edge(u, v)


def count_admissible_tuples(n: int, forbidden: Iterable[int], t: int,
                            budget: int = DEFAULT_BUDGET) -> int:
    """Count admissible n-tuples over Z_t by pruned level-by-level enumeration.

    Each level extends every surviving prefix by all t residues and drops the
    extensions that violate a pair.  ``budget`` caps the total number of
    candidate extensions examined.
    """
    if t < 1:
        raise ValueError("modulus must be positive")
    bad = np.zeros(t, dtype=bool)
    for c in forbidden:
        bad[c % t] = True
    if n == 1:
        return t
    cand = np.arange(t, dtype=np.int64)
    frontier = cand.reshape(-1, 1)
    work = t
    total = 0
    for depth in range(1, n):
        work += len(frontier) * t
        if work > budget:
            raise BudgetExceeded(
                f"tuple enumeration for n={n}, t={t} passes the budget of {budget} candidates"
            )
        last = depth == n - 1
        step = max(1, _CHUNK_CELLS // t)
        grown = []
        for start in range(0, len(frontier), step):
            block = frontier[start:start + step]
            ok = np.ones((len(block), t), dtype=bool)
            for i in range(depth):
                ok &= ~bad[(block[:, i:i + 1] + cand) % t]
            if last:
                total += int(ok.sum())
            else:
                rows, cols = np.nonzero(ok)
                grown.append(np.hstack([block[rows], cols.reshape(-1, 1)]))
        if not last:
            frontier = np.vstack(grown) if grown else np.empty((0, depth + 1), dtype=np.int64)
    return total


def brute_count_tuples(family: ReducedFamily, t: int,
                       budget: int = DEFAULT_BUDGET) -> AdmissibleTupleCount:
    if t < 3 or t % 2 == 0:
        raise ValueError(f"t must be odd and >= 3, got {t}")
    return AdmissibleTupleCount(t, count_admissible_tuples(family.n, family.forbidden, t, budget))


def _walk(g: SumGraph, max_size: int, chosen: list[int], cands: list[int],
          adj: dict[int, set[int]]) -> Iterator[tuple[int, ...]]:
    yield tuple(chosen)
    if len(chosen) == max_size:
        return
    leaf = len(chosen) + 1 == max_size
    for idx, v in enumerate(cands):
        chosen.append(v)
        if leaf:
            yield tuple(chosen)
        else:
            nv = adj[v]
            yield from _walk(g, max_size, chosen, [w for w in cands[idx + 1:] if w not in nv], adj)
        chosen.pop()


def enum_independent_sets(g: SumGraph, max_size: int) -> Iterator[tuple[int, ...]]:
    """Yield every set of at most ``max_size`` pairwise non-adjacent vertices.

    Sets are yielded once each as increasing tuples; self-loops are ignored
    here, since a looped vertex may still be used exactly once.
    """
    adj = {v: g.neighbors(v) for v in g.vertices()}
    yield from _walk(g, max_size, [], g.vertices(), adj)


def independent_set_profile(g: SumGraph, max_size: int) -> Counter:
    """Histogram of independent sets keyed by (size, number of looped members).

    Same walk as :func:`enum_independent_sets`, but the last level is tallied
    in bulk instead of materialised.
    """
    adj = {v: g.neighbors(v) for v in g.vertices()}
    loops = g.loops()
    hist: Counter = Counter()

    def walk(size: int, nloops: int, cands: list[int]):
        hist[size, nloops] += 1
        if size == max_size:
            return
        if size + 1 == max_size:
            looped = sum(1 for w in cands if w in loops)
            if looped:
                hist[size + 1, nloops + 1] += looped
            if len(cands) > looped:
                hist[size + 1, nloops] += len(cands) - looped
            return
        for idx, v in enumerate(cands):
            nv = adj[v]
            walk(size + 1, nloops + (v in loops),
                 [w for w in cands[idx + 1:] if w not in nv])

    walk(0, 0, g.vertices())
    return hist


def tuple_weight(n: int, size: int, nloops: int) -> int:
    """Number of maps [n] -> S onto a set S of ``size`` vertices hitting each
    of its ``nloops`` looped vertices exactly once."""
    free = size - nloops
    return falling(n, nloops) * stirling2(n - nloops, free) * falling(free, free)


def count_tuples_via_independent_sets(g: SumGraph, n: int) -> int:
    return sum(cnt * tuple_weight(n, q, s) for (q, s), cnt in independent_set_profile(g, n).items())
