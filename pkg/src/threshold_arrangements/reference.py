"""Closed-form characteristic polynomials used as independent cross-checks,
the published-table fixture, and adjudication between all sources.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from math import factorial
from pathlib import Path

from .engine import characteristic_polynomial, check_invariants
from .exact import IntPolynomial, binomial, double_falling, falling, interpolate, stirling2
from .model import (
    DEFAULT_BUDGET,
    ArrangementSpec,
    Family,
    ReducedFamily,
    count_admissible_tuples,
    reduce,
)

T = IntPolynomial.t()


def chi_braid(n: int) -> IntPolynomial:
    """x_i - x_j = 0: t(t-1)...(t-n+1)."""
    return falling(T, n)


def chi_shi(n: int) -> IntPolynomial:
    """x_i - x_j = 0, 1: t(t-n)^(n-1)."""
    p = T
    for _ in range(n - 1):
        p = p * (T - n)
    return p


def chi_catalan(n: int) -> IntPolynomial:
    """x_i - x_j = -1, 0, 1: t(t-n-1)(t-n-2)...(t-2n+1)."""
    p = T
    for j in range(n + 1, 2 * n):
        p = p * (T - j)
    return p


def chi_seo_ST(n: int) -> IntPolynomial:
    """Seo's closed form for x_i + x_j = 0, 1 (sums truncated at j <= n)."""
    if n < 2:
        raise ValueError("closed form stated for n >= 2")
    out = IntPolynomial()
    for j in range(n + 1):
        out = out + falling(T - j - 1, j) * stirling2(n, j)
        out = out + 2 * n * falling(T - j - 2, j) * stirling2(n - 1, j)
        out = out + n * (n - 1) * falling(T - j - 3, j) * stirling2(n - 2, j)
    return out


def _s(n: int, k: int) -> Fraction:
    if n < 0 or k < 0:
        return Fraction(0)
    return Fraction(factorial(k), factorial(n)) * stirling2(n, k)


def alpha(n: int, k: int, l: int) -> Fraction:
    """Coefficient alpha_{n,k,l} of Seo's Catalan-threshold formula."""
    if (n, k, l) in ((0, 0, 0), (1, 0, 0)):
        return Fraction(1)
    return (binomial(k - 1, l - 1) * _s(n, k)
            + binomial(k - 2, l - 1) * _s(n - 1, k - 1)
            + 2 * binomial(k - 1, l) * _s(n - 1, k - 1)
            + 2 * binomial(k - 2, l) * _s(n - 2, k - 2))


def seo_ct_value(n: int, t: int) -> Fraction:
    return factorial(n) * sum(
        alpha(n, k, l) * Fraction(double_falling(t - 2 * k - 1, l), factorial(l))
        for k in range(n + 1)
        for l in range(k + 1)
    )


def chi_seo_CT(n: int) -> IntPolynomial:
    """Seo's closed form for x_i + x_j = -1, 0, 1.

    The alpha coefficients are rational, so the formula is evaluated exactly
    at n+1 integers and interpolated; a non-integral result raises
    IntegralityViolation.
    """
    if n < 2:
        raise ValueError("closed form stated for n >= 2")
    return interpolate([(t, seo_ct_value(n, t)) for t in range(n + 1)])


def reference_polynomial(fam: ReducedFamily) -> IntPolynomial | None:
    """Closed form matching a reduced family, when one is known."""
    if fam.n < 2:
        return None
    if fam.family is Family.ST and fam.k_eff == 1:
        return chi_seo_ST(fam.n)
    if fam.family is Family.CT and fam.k_eff == 3:
        return chi_seo_CT(fam.n)
    return None


# -- published table fixture -------------------------------------------------

@dataclass(frozen=True)
class FixtureEntry:
    family: Family
    n: int
    k: int
    poly: IntPolynomial
    source: str
    disputed: bool
    problems: tuple[str, ...] = ()

    @property
    def regions(self) -> int:
        return abs(self.poly(-1))


@dataclass(frozen=True)
class FixtureSequence:
    family: Family
    k: int
    n_from: int
    regions: tuple[int, ...]
    source: str
    disputed: tuple[bool, ...]


@dataclass(frozen=True)
class PublishedTable:
    entries: tuple[FixtureEntry, ...]
    sequences: tuple[FixtureSequence, ...]

    def lookup(self, family: Family, n: int, k: int) -> FixtureEntry | None:
        for e in self.entries:
            if (e.family, e.n, e.k) == (family, n, k):
                return e
        return None

    def to_json(self) -> dict:
        return {
            "entries": [
                {"family": e.family.value, "n": e.n, "k": e.k,
                 "coefficients": list(e.poly.coeffs), "source": e.source,
                 "disputed": e.disputed}
                for e in self.entries
            ],
            "sequences": [
                {"family": s.family.value, "k": s.k, "n_from": s.n_from,
                 "regions": list(s.regions), "source": s.source,
                 "disputed": list(s.disputed)}
                for s in self.sequences
            ],
        }


def fixture_problems(family: Family, n: int, k: int, poly: IntPolynomial) -> list[str]:
    fam = ReducedFamily(family, n, k)
    return check_invariants(poly, n, binomial(n, 2) * len(fam.forbidden))


def parse_table(doc: dict) -> PublishedTable:
    """Build the table, recomputing every disputed flag from the data."""
    entries = []
    for raw in doc["entries"]:
        fam = Family(raw["family"])
        poly = IntPolynomial(tuple(int(c) for c in raw["coefficients"]))
        problems = fixture_problems(fam, raw["n"], raw["k"], poly)
        entries.append(FixtureEntry(fam, raw["n"], raw["k"], poly, raw["source"],
                                    bool(problems), tuple(problems)))
    table = PublishedTable(tuple(entries), ())
    sequences = []
    for raw in doc.get("sequences", []):
        fam = Family(raw["family"])
        flags = []
        for i, value in enumerate(raw["regions"]):
            e = table.lookup(fam, raw["n_from"] + i, raw["k"])
            flags.append(e is None or e.disputed or e.regions != value)
        sequences.append(FixtureSequence(fam, raw["k"], raw["n_from"],
                                         tuple(int(v) for v in raw["regions"]),
                                         raw["source"], tuple(flags)))
    return PublishedTable(table.entries, tuple(sequences))


def fixture_path() -> Path:
    return Path(str(resources.files(__package__) / "fixtures" / "paper_table.json"))


@lru_cache(maxsize=None)
def load_published_table(path: str | None = None) -> PublishedTable:
    with open(path or fixture_path(), encoding="utf-8") as fh:
        return parse_table(json.load(fh))


# -- adjudication ------------------------------------------------------------

class Verdict(str, Enum):
    ALL_AGREE = "AllAgree"
    FIXTURE_DISPUTED = "FixtureDisputed"
    ENGINE_MISMATCH = "EngineMismatch"


@dataclass
class DiffReport:
    spec: ArrangementSpec
    engine_poly: IntPolynomial
    oracle_counts: list[tuple[int, int]]
    reference_poly: IntPolynomial | None
    fixture_poly: IntPolynomial | None
    verdict: Verdict
    notes: list[str] = field(default_factory=list)

    @property
    def reference_agrees(self) -> bool | None:
        if self.reference_poly is None:
            return None
        return self.reference_poly == self.engine_poly


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def odd_primes_from(start: int, count: int) -> list[int]:
    out = []
    p = max(start, 3)
    while len(out) < count:
        if p % 2 and is_prime(p):
            out.append(p)
        p += 1
    return out


def oracle_floor(n: int, k_eff: int) -> int:
    """Smallest odd modulus used for brute-force ground truth in adjudication.

    Consistency of a subsystem x_i + x_j = c_ij over Z_p reduces to integer
    alternating sums of at most about n constants from 0..k_eff; above 2 n k_eff
    none of them can vanish mod p without vanishing over Z.
    """
    return max(3, 2 * n * k_eff + 1)


def adjudicate(spec: ArrangementSpec, budget: int = DEFAULT_BUDGET, n_primes: int = 2,
               table: PublishedTable | None = None) -> DiffReport:
    """Compare engine, brute-force oracle, closed form and published fixture.

    The oracle counts tuples for the original constants -l..k, so the parity
    reduction is checked along the way.
    """
    fam = reduce(spec)
    result = characteristic_polynomial(spec)
    engine = result.poly
    notes = []

    primes = odd_primes_from(oracle_floor(spec.n, fam.k_eff), n_primes)
    oracle = [(p, count_admissible_tuples(spec.n, spec.constants, p, budget)) for p in primes]
    mismatched = [(p, c) for p, c in oracle if engine(p) != c]
    for p, c in mismatched:
        notes.append(f"oracle counts {c} at t={p}, engine polynomial gives {engine(p)}")

    ref = reference_polynomial(fam)
    if ref is not None and ref != engine:
        notes.append(f"closed form {ref} differs from engine {engine}")

    table = table or load_published_table()
    entry = table.lookup(fam.family, fam.n, fam.k_eff) if fam.family is Family.ST else None
    fixture = entry.poly if entry else None

    if mismatched:
        verdict = Verdict.ENGINE_MISMATCH
    elif fixture is not None and fixture != engine:
        verdict = Verdict.FIXTURE_DISPUTED
        notes.append(f"published {fixture} replaced by {engine}")
        notes.extend(f"published entry: {p}" for p in entry.problems)
    else:
        verdict = Verdict.ALL_AGREE
    return DiffReport(spec, engine, oracle, ref, fixture, verdict, notes)
