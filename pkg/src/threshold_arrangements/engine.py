"""Characteristic polynomials of ST_{n,k} and CT_{n,k} by clique/independent-set
counting at odd sample points, followed by exact interpolation.

Coordinates
-----------
Residues of Z_t (t = 2r+1) are taken in the window -r..r.  After removing the
looped vertices (two cliques) the sum graph is bipartite: the *upper* side is
an interval of positive residues and the *lower* side an interval of negative
residues, written below through b = -a so that it becomes the interval
``[b0, R]`` of positive integers.  An upper vertex i is adjacent to the lower
vertices whose b lies in ``[i - k, i - e]``, with e = 0 for ST (constants
0..k) and e = 1 for CT (constants 1..k).

For an increasing choice i_1 < ... < i_l of upper vertices, the number of
lower vertices adjacent to none of them is

    g = max(i_1 - shift - gap, 0) + sum_j max(i_j - i_{j-1} - gap, 0)
        + max(tail - i_l, 0)

with ``gap = k + 1 - e``, ``shift = b0 - 1 + e`` and ``tail = R + e``; the
empty choice leaves ``tail - shift`` free vertices.  A :class:`SlicePlan`
carries exactly these numbers.
"""

from __future__ import annotations

import math
from math import comb
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .errors import (
    HoldoutMismatch,
    InvalidSamplePoint,
    NegativeRegionCount,
    SanityCheckFailed,
)
from .exact import IntPolynomial, binomial, interpolate, stirling2
from .model import ArrangementSpec, Family, ReducedFamily, SumGraph, hyperplane_count, reduce

_INT64_SAFE = 1 << 62


@dataclass(frozen=True)
class SlicePlan:
    lower: int
    upper: int
    gap_penalty: int
    tail_offset: int
    shift: int = 0

    def __post_init__(self):
        if self.lower > self.upper + 1:
            raise ValueError(f"empty range must have lower == upper + 1: {self}")

    @property
    def width(self) -> int:
        return self.upper - self.lower + 1

    @property
    def slices_exact(self) -> bool:
        """Whether the slice formula counts the lower side exactly.

        Every gap must end inside the lower side and start above its first
        element; both hold once the modulus is large enough.
        """
        if self.width == 0:
            return True
        return self.lower >= self.shift and self.upper - self.gap_penalty <= self.tail_offset

    def excess(self, chosen) -> int:
        """g for one increasing tuple of upper vertices (reference form)."""
        if not chosen:
            return max(self.tail_offset - self.shift, 0)
        g = max(chosen[0] - self.shift - self.gap_penalty, 0)
        for a, b in zip(chosen, chosen[1:]):
            g += max(b - a - self.gap_penalty, 0)
        return g + max(self.tail_offset - chosen[-1], 0)


@dataclass(frozen=True)
class ExcessDistribution:
    l: int
    counts: dict[int, int]

    @property
    def total(self) -> int:
        return sum(self.counts.values())


def _shift_up(row: np.ndarray) -> np.ndarray:
    if row[-1]:
        raise AssertionError("excess exceeded its table bound")
    out = np.zeros_like(row)
    out[1:] = row[:-1]
    return out


@lru_cache(maxsize=4096)
def _excess_tables(plan: SlicePlan, l_max: int) -> tuple[dict[int, int], ...]:
    """Distributions of g for l = 0..l_max by dynamic programming over gaps.

    ``dp[x, g]`` counts tuples of the current length whose last element is
    ``lower + x`` and whose accumulated gaps (tail excluded) sum to g.  A new
    element y either sits within ``gap_penalty`` of the previous one (no
    excess) or further away, adding ``y - x - gap_penalty``.  The second kind
    is summed through the diagonal accumulator ``T[z] = sum_{x <= z}
    shift(dp[x], z - x)``, so each layer costs O(width) vector operations.
    """
    out = [{max(plan.tail_offset - plan.shift, 0): 1}]
    w = plan.width
    if l_max == 0 or w == 0:
        return tuple(out + [{} for _ in range(l_max)])
    dtype = np.int64 if math.comb(w, min(l_max, w // 2)) < _INT64_SAFE else object
    gmax = max(plan.upper - min(plan.lower, plan.shift), 0) + 1
    xs = np.arange(plan.lower, plan.upper + 1)
    tails = np.maximum(plan.tail_offset - xs, 0)

    dp = np.zeros((w, gmax), dtype=dtype)
    dp[np.arange(w), np.maximum(xs - plan.shift - plan.gap_penalty, 0)] = 1
    gap = plan.gap_penalty
    for length in range(1, l_max + 1):
        if length > 1:
            cum = np.cumsum(dp, axis=0)
            diag = np.zeros_like(dp)
            acc = np.zeros(gmax, dtype=dtype)
            for z in range(w):
                acc = _shift_up(acc) + dp[z]
                diag[z] = acc
            new = np.zeros_like(dp)
            for y in range(w):
                # previous element x in [y - gap, y - 1]: no excess
                hi = y - 1
                lo = max(y - gap, 0)
                if hi >= lo:
                    new[y] += cum[hi] - (cum[lo - 1] if lo > 0 else 0)
                # previous element x <= y - gap - 1: excess y - x - gap
                z = y - gap - 1
                if z >= 0:
                    new[y] += _shift_up(diag[z])
            dp = new
        dist: dict[int, int] = {}
        rows, gs = np.nonzero(dp)
        for x, g in zip(rows.tolist(), gs.tolist()):
            key = g + int(tails[x])
            dist[key] = dist.get(key, 0) + int(dp[x, g])
        out.append(dist)
    return tuple(out)


def excess_distribution(plan: SlicePlan, l: int) -> ExcessDistribution:
    if l < 0:
        raise ValueError("l must be nonnegative")
    return ExcessDistribution(l, dict(_excess_tables(plan, l)[l]))


# A series is a dict {(m, a, b): c} standing for sum c * z^m * x^a / (1 - x)^b,
# truncated at a maximal z-degree.  x marks positions, z the binomial order.

def _clipped_gap_series(c: int, m_max: int) -> dict:
    """sum over u >= 0 and m of C(max(u - c, 0), m) z^m x^u."""
    out = {(0, 0, 1): 1}
    for m in range(1, m_max + 1):
        if c >= 0:
            out[m, c + m, m + 1] = 1
        else:
            # C(u + h, m) = sum_j C(h, m - j) C(u, j)
            for j in range(m + 1):
                coef = binomial(-c, m - j)
                if coef:
                    out[m, j, j + 1] = out.get((m, j, j + 1), 0) + coef
    return out


def _inner_gap_series(gap: int, m_max: int) -> dict:
    """sum over d >= 1 and m of C(max(d - gap, 0), m) z^m x^d."""
    out = {(0, 1, 1): 1}
    for m in range(1, m_max + 1):
        out[m, gap + m, m + 1] = 1
    return out


def _series_mul(f: dict, g: dict, m_max: int) -> dict:
    out: dict = {}
    for (m1, a1, b1), c1 in f.items():
        for (m2, a2, b2), c2 in g.items():
            if m1 + m2 <= m_max:
                key = (m1 + m2, a1 + a2, b1 + b2)
                out[key] = out.get(key, 0) + c1 * c2
    return out


def _coefficient(series: dict, power: int, m: int) -> int:
    """[z^m x^power] of a series whose every term has b >= 1."""
    total = 0
    for (mm, a, b), c in series.items():
        if mm == m and power >= a:
            total += c * comb(power - a + b - 1, b - 1)
    return total


@lru_cache(maxsize=8192)
def count_I_all(plan: SlicePlan, q_max: int) -> tuple[int, ...]:
    """Independent-set counts I(0..q_max) of the bipartite graph a plan describes.

    I(q) sums C(g, q - l) over all l-subsets of the upper side.  Splitting g
    into its clipped gaps (Vandermonde) turns the sum over positions into a
    coefficient of a product of rational generating functions, so the cost
    does not depend on the width of the window.  Agrees term by term with the
    excess distributions of :func:`excess_distribution`.
    """
    empty = max(plan.tail_offset - plan.shift, 0)
    out = [comb(empty, q) for q in range(q_max + 1)]
    w = plan.width
    if w == 0:
        return tuple(out)
    first = _clipped_gap_series(plan.shift + plan.gap_penalty - plan.lower, q_max)
    tail = _clipped_gap_series(plan.upper - plan.tail_offset, q_max)
    inner = _inner_gap_series(plan.gap_penalty, q_max)
    chain = _series_mul(first, tail, q_max)  # l = 1
    for l in range(1, min(q_max, w) + 1):
        for q in range(l, q_max + 1):
            out[q] += _coefficient(chain, w - 1, q - l)
        chain = _series_mul(chain, inner, q_max - l)
    return tuple(out)


def count_I_from_distributions(plan: SlicePlan, q_max: int) -> list[int]:
    """I(0..q_max) summed directly over the excess distributions (slower)."""
    tables = _excess_tables(plan, q_max)
    return [
        sum(c * binomial(g, q - l) for l in range(q + 1) for g, c in tables[l].items())
        for q in range(q_max + 1)
    ]


def count_I(plan: SlicePlan, q: int) -> int:
    return count_I_all(plan, q)[q]


def surjection_sum(counts: list[int], m: int) -> int:
    """Sum over q of counts[q] * S(m, q) * q!: tuples of length m drawn onto
    independent sets of non-looped vertices."""
    if m < 0:
        return 0
    return sum(counts[q] * stirling2(m, q) * math.factorial(q) for q in range(min(m, len(counts) - 1) + 1))


@dataclass
class CaseBreakdown:
    t: int
    family: Family
    N: int
    N_p_first_clique: list[int]
    N_p_second_clique: list[int]
    N_pairs: list[list[int]]
    zero_case: int = 0
    zero_second_clique: list[int] = field(default_factory=list)

    @property
    def parts(self) -> list[int]:
        out = [self.N, *self.N_p_first_clique, *self.N_p_second_clique]
        out += [v for row in self.N_pairs for v in row]
        return out + [self.zero_case, *self.zero_second_clique]

    @property
    def total(self) -> int:
        return sum(self.parts)


def min_sample_point(k: int) -> int:
    """Smallest odd t at which the case decomposition is exact (r >= k + 1)."""
    return 2 * k + 3


def _check_point(k: int, t: int) -> int:
    if t % 2 == 0 or t < min_sample_point(k):
        raise InvalidSamplePoint(
            f"t={t} must be odd and at least {min_sample_point(k)} for k={k}"
        )
    return (t - 1) // 2


def _require_exact(plans):
    for p in plans:
        if not p.slices_exact:
            raise InvalidSamplePoint(f"modulus too small for slice plan {p}")


def _plan(lower, upper, gap, tail, shift) -> SlicePlan:
    return SlicePlan(lower, max(upper, lower - 1), gap, tail, shift)


def st_plans(k: int, r: int):
    """Slice plans for ST_{n,k} at t = 2r+1.

    Returns (no clique pick, picks p in C1, picks -r+s in C2, pair picks).
    """
    kf, kc = k // 2, (k + 1) // 2
    R = r - kc
    gap = k + 1
    base = _plan(kf + 1, r, gap, R, 0)
    first = [_plan(k - p + 1, r, gap, R, p) for p in range(kf + 1)]
    second = [_plan(kf + 1, r - s - 1, gap, r - k + s, 0) for s in range(kc)]
    pairs = [[_plan(k - p + 1, r - s - 1, gap, r - k + s, p) for s in range(kc)]
             for p in range(kf + 1)]
    return base, first, second, pairs


def case_counts_ST(n: int, k: int, t: int) -> CaseBreakdown:
    """Admissible n-tuples over Z_t for constants 0..k, split by clique picks.

    The cliques are C1 = {0..floor(k/2)} and C2 = {-r..-r+ceil(k/2)-1}; each
    is used at most once and every other coordinate ranges over the
    bipartite remainder.
    """
    r = _check_point(k, t)
    g = SumGraph(t, range(0, k + 1))
    base, first, second, pairs = st_plans(k, r)
    _require_exact([base, *first, *second, *(p for row in pairs for p in row)])

    N = surjection_sum(count_I_all(base, n), n)
    Np1 = [n * surjection_sum(count_I_all(p, n - 1), n - 1) for p in first]
    Np2 = [n * surjection_sum(count_I_all(p, n - 1), n - 1) for p in second]
    Npairs = []
    for p1, row in enumerate(pairs):
        out_row = []
        for s, plan in enumerate(row):
            if n < 2 or g.is_edge(p1, -r + s):
                out_row.append(0)
            else:
                out_row.append(n * (n - 1) * surjection_sum(count_I_all(plan, n - 2), n - 2))
        Npairs.append(out_row)
    return CaseBreakdown(t, Family.ST, N, Np1, Np2, Npairs)


def ct_plans(k: int, r: int):
    """Slice plans for CT_{n,k} at t = 2r+1.

    Returns (no pick, zeros only, p in C1', -r+s in C2', -r+s with zeros,
    pair picks).  The zero vertex is adjacent to 1..k, so any plan that
    admits zeros starts its upper side at k+1.
    """
    kf, kc = k // 2, (k + 1) // 2
    R = r - kc
    gap = k
    base = _plan(kf + 1, r, gap, R + 1, 1)
    zeros = _plan(k + 1, r, gap, R + 1, 1)
    first = [_plan(k - p + 1, r, gap, R + 1, p) for p in range(1, kf + 1)]
    second = [_plan(kf + 1, r - s, gap, r - k + s + 1, 1) for s in range(kc)]
    second_zeros = [_plan(k + 1, r - s, gap, r - k + s + 1, 1) for s in range(kc)]
    pairs = [[_plan(k - p + 1, r - s, gap, r - k + s + 1, p) for s in range(kc)]
             for p in range(1, kf + 1)]
    return base, zeros, first, second, second_zeros, pairs


def _with_zeros(counts: list[int], m: int) -> int:
    """Length-m tuples holding at least one zero, the rest from the plan's graph."""
    return sum(binomial(m, z) * surjection_sum(counts, m - z) for z in range(1, m + 1))


def case_counts_CT(n: int, k: int, t: int) -> CaseBreakdown:
    """Admissible n-tuples over Z_t for constants 1..k in six cases.

    Cliques C1' = {1..floor(k/2)} and C2' = {-r..-r+ceil(k/2)-1}; the zero
    vertex carries no loop and may repeat, but it is adjacent to all of C1'.
    """
    r = _check_point(k, t)
    g = SumGraph(t, range(1, k + 1))
    base, zeros, first, second, second_zeros, pairs = ct_plans(k, r)
    _require_exact([base, zeros, *first, *second, *second_zeros,
                    *(p for row in pairs for p in row)])

    N = surjection_sum(count_I_all(base, n), n)
    Z = _with_zeros(count_I_all(zeros, n), n)
    Np1 = [n * surjection_sum(count_I_all(p, n - 1), n - 1) for p in first]
    Np2 = [n * surjection_sum(count_I_all(p, n - 1), n - 1) for p in second]
    Z2 = [n * _with_zeros(count_I_all(p, n - 1), n - 1) for p in second_zeros]
    Npairs = []
    for i, row in enumerate(pairs):
        p1 = i + 1
        out_row = []
        for s, plan in enumerate(row):
            if n < 2 or g.is_edge(p1, -r + s):
                out_row.append(0)
            else:
                out_row.append(n * (n - 1) * surjection_sum(count_I_all(plan, n - 2), n - 2))
        Npairs.append(out_row)
    return CaseBreakdown(t, Family.CT, N, Np1, Np2, Npairs, Z, Z2)


def case_counts(family: ReducedFamily, t: int) -> CaseBreakdown:
    if family.family is Family.ST:
        return case_counts_ST(family.n, family.k_eff, t)
    return case_counts_CT(family.n, family.k_eff, t)


def validity_bound(n: int, k_eff: int) -> int:
    """T0: first sample point, the smallest odd integer >= 2(n+2)(k_eff+2)+1."""
    b = 2 * (n + 2) * (k_eff + 2) + 1
    return b if b % 2 else b + 1


def sample_points(n: int, k_eff: int) -> list[int]:
    """n+1 interpolation points plus one holdout, consecutive odd from T0."""
    t0 = validity_bound(n, k_eff)
    return [t0 + 2 * i for i in range(n + 2)]


def regions(poly: IntPolynomial, n: int) -> int:
    """Number of regions, (-1)^n chi(-1)."""
    if poly.degree != n:
        raise ValueError(f"expected a degree-{n} polynomial, got degree {poly.degree}")
    value = (-1) ** n * poly(-1)
    if value < 0:
        raise NegativeRegionCount(f"(-1)^n chi(-1) = {value} for {poly}")
    return value


@dataclass(frozen=True)
class CharPolyResult:
    spec: ArrangementSpec
    family: ReducedFamily
    poly: IntPolynomial
    samples: tuple[tuple[int, int], ...]
    regions: int


def check_invariants(poly: IntPolynomial, n: int, hyperplanes: int) -> list[str]:
    """Coefficient constraints on the characteristic polynomial of an
    n-dimensional arrangement with the given number of hyperplanes."""
    problems = []
    if poly.degree != n:
        problems.append(f"degree {poly.degree} != {n}")
    if poly.leading != 1:
        problems.append(f"leading coefficient {poly.leading} != 1")
    want = -hyperplanes
    if poly.coefficient(n - 1) != want:
        problems.append(f"coefficient of t^{n - 1} is {poly.coefficient(n - 1)}, expected {want}")
    if not poly.sign_alternates():
        problems.append("coefficients do not alternate in sign")
    return problems


@lru_cache(maxsize=None)
def family_polynomial(fam: ReducedFamily) -> tuple[IntPolynomial, tuple[tuple[int, int], ...]]:
    """Interpolated characteristic polynomial of a reduced family and its samples.

    The last sample point is held out and must lie on the interpolant.
    """
    points = sample_points(fam.n, fam.k_eff)
    samples = tuple((t, case_counts(fam, t).total) for t in points)
    poly = interpolate(samples[:-1])
    t_hold, v_hold = samples[-1]
    if poly(t_hold) != v_hold:
        raise HoldoutMismatch(
            f"{fam}: interpolant gives {poly(t_hold)} at t={t_hold}, engine counted {v_hold}"
        )
    problems = check_invariants(poly, fam.n, binomial(fam.n, 2) * len(fam.forbidden))
    if problems:
        raise SanityCheckFailed(f"{fam}: " + "; ".join(problems))
    return poly, samples


@lru_cache(maxsize=None)
def characteristic_polynomial(spec: ArrangementSpec) -> CharPolyResult:
    fam = reduce(spec)
    poly, samples = family_polynomial(fam)
    if poly.coefficient(spec.n - 1) != -hyperplane_count(spec):
        raise SanityCheckFailed(f"{spec}: t^{spec.n - 1} coefficient disagrees with the hyperplane count")
    return CharPolyResult(spec, fam, poly, samples, regions(poly, spec.n))
