import json
from fractions import Fraction
from math import comb, factorial

import pytest

from threshold_arrangements.engine import characteristic_polynomial, regions
from threshold_arrangements.exact import IntPolynomial
from threshold_arrangements.model import ArrangementSpec, Family, count_admissible_tuples
from threshold_arrangements.reference import (
    Verdict,
    adjudicate,
    alpha,
    chi_braid,
    chi_catalan,
    chi_seo_CT,
    chi_seo_ST,
    chi_shi,
    fixture_path,
    is_prime,
    load_published_table,
    odd_primes_from,
    oracle_floor,
    parse_table,
    seo_ct_value,
)

T = IntPolynomial.t()


def test_braid_shi_catalan_small_cases():
    assert chi_braid(3) == T * (T - 1) * (T - 2)
    assert chi_shi(2) == T * (T - 2)
    assert chi_catalan(2) == T * (T - 3)
    assert chi_shi(1) == T == chi_catalan(1) == chi_braid(1)


def test_difference_arrangements_by_point_count():
    """chi_braid/shi/catalan against direct counts of x_i - x_j constraints."""
    import itertools

    def count(n, consts, p):
        return sum(
            all((x[i] - x[j]) % p not in consts for i in range(n) for j in range(i + 1, n))
            for x in itertools.product(range(p), repeat=n)
        )

    for n in (2, 3):
        for p in (11, 13):
            assert chi_braid(n)(p) == count(n, {0}, p)
            assert chi_shi(n)(p) == count(n, {0, 1}, p)
            assert chi_catalan(n)(p) == count(n, {0, 1, p - 1}, p)


def test_seo_closed_forms_known_values():
    assert chi_seo_ST(2) == T * T - 2 * T
    assert chi_seo_CT(2) == T * T - 3 * T
    with pytest.raises(ValueError):
        chi_seo_ST(1)
    with pytest.raises(ValueError):
        chi_seo_CT(1)


def test_seo_alpha_is_rational():
    assert isinstance(alpha(3, 2, 1), Fraction)
    assert alpha(0, 0, 0) == alpha(1, 0, 0) == 1
    assert seo_ct_value(2, 5) == 10


@pytest.mark.parametrize("n", range(2, 6))
def test_seo_forms_match_brute_force(n):
    for p in odd_primes_from(oracle_floor(n, 3), 2):
        if p ** n > 10**8:
            continue
        assert chi_seo_ST(n)(p) == count_admissible_tuples(n, range(0, 2), p)
        assert chi_seo_CT(n)(p) == count_admissible_tuples(n, range(-1, 2), p)


def test_primes():
    assert [p for p in range(30) if is_prime(p)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert odd_primes_from(24, 3) == [29, 31, 37]
    assert odd_primes_from(0, 1) == [3]
    assert oracle_floor(1, 0) == 3 and oracle_floor(5, 5) == 51


def test_fixture_flags_are_recomputed():
    table = load_published_table()
    assert len(table.entries) == 9
    exact = [(e.n, e.k) for e in table.entries if not e.disputed]
    assert exact == [(3, 1), (4, 1), (5, 1)]
    assert all(e.source == "Section 6" for e in table.entries)
    k1, k2 = table.sequences
    assert k1.regions == (1, 27, 345, 5513) and k1.disputed == (True, False, False, False)
    assert all(k2.disputed)

    raw = json.loads(open(fixture_path(), encoding="utf-8").read())
    for e in raw["entries"]:
        e["disputed"] = not e["disputed"]
    flipped = parse_table(raw)
    assert [e.disputed for e in flipped.entries] == [e.disputed for e in table.entries]


def test_fixture_json_round_trip():
    table = load_published_table()
    doc = table.to_json()
    assert parse_table(json.loads(json.dumps(doc))) == table


def test_fixture_regions_follow_zaslavsky():
    for e in load_published_table().entries:
        if not e.disputed:
            assert e.regions == regions(e.poly, e.n)


@pytest.mark.parametrize("n, k, verdict", [
    (2, 1, Verdict.FIXTURE_DISPUTED),
    (3, 1, Verdict.ALL_AGREE),
    (4, 2, Verdict.FIXTURE_DISPUTED),
])
def test_adjudicate_table_rows(n, k, verdict):
    report = adjudicate(ArrangementSpec(n, k, 0))
    assert report.verdict is verdict
    assert report.fixture_poly is not None
    assert all(report.engine_poly(p) == c for p, c in report.oracle_counts)
    if verdict is Verdict.FIXTURE_DISPUTED:
        assert any("replaced by" in note for note in report.notes)


def test_adjudicate_without_fixture_entry():
    report = adjudicate(ArrangementSpec(3, 1, 1))
    assert report.verdict is Verdict.ALL_AGREE
    assert report.fixture_poly is None
    assert report.reference_agrees is True


def test_adjudicate_flags_engine_mismatch(monkeypatch):
    import threshold_arrangements.reference as reference

    monkeypatch.setattr(reference, "count_admissible_tuples", lambda n, consts, p, budget: 0)
    report = adjudicate(ArrangementSpec(3, 1, 0))
    assert report.verdict is Verdict.ENGINE_MISMATCH
    assert report.notes


def test_even_l_specs_use_the_st_fixture():
    # T_{3,1,2} reduces to ST_{3,3} (not tabulated), T_{4,1,2} to ST_{4,3} (tabulated)
    assert adjudicate(ArrangementSpec(3, 1, 2)).fixture_poly is None
    assert adjudicate(ArrangementSpec(4, 1, 2)).verdict is Verdict.FIXTURE_DISPUTED


def test_region_formulas():
    for n in range(1, 7):
        assert regions(chi_shi(n), n) == (n + 1) ** (n - 1)
        assert regions(chi_catalan(n), n) == factorial(n) * comb(2 * n, n) // (n + 1)
        assert regions(chi_braid(n), n) == factorial(n)


def test_engine_table_rows_have_region_counts():
    assert [characteristic_polynomial(ArrangementSpec(n, 2, 0)).regions for n in (3, 4, 5)] == [64, 1312, 32724]
