"""Pruebas de certificados de herradura y de la busqueda de cotas inferiores."""

from fractions import Fraction

import pytest

from entrolab_core.errors import DomainError, FormatError
from entrolab_core.horseshoe import (
    HorseshoeCert,
    SearchBudget,
    check_certificate,
    horseshoe_bound,
    search_lower_bounds,
)
from entrolab_core.interval_maps import PWLMap, QuadMap, constant_slope_map
from entrolab_core.numkit import RatInterval

TENT_CERT = {"n": 2, "intervals": [["3/10", "9/20"], ["11/20", "7/10"]]}


def test_certificate_json_round_trip():
    cert = HorseshoeCert.from_json(TENT_CERT)
    assert cert.p == 2 and cert.n == 2
    assert cert.hull == RatInterval(Fraction(3, 10), Fraction(7, 10))
    assert cert.to_json() == TENT_CERT


@pytest.mark.parametrize("data", [
    {"n": 1, "intervals": [["0", "1/2"]]},
    {"n": 1, "intervals": [["0", "1/2"], ["1/2", "1"]]},
    {"n": 0, "intervals": [["0", "1/4"], ["1/2", "1"]]},
    {"intervals": [["0", "1/4"], ["1/2", "1"]]},
    {"n": 1, "intervals": [["0", "1/4"], ["1/2", "3/2"]]},
])
def test_malformed_certificates(data):
    with pytest.raises(FormatError):
        HorseshoeCert.from_json(data)


def test_certificate_validation_on_construction():
    with pytest.raises(DomainError):
        HorseshoeCert((RatInterval(Fraction(0), Fraction(1, 2)),), 1)


def test_tent_certificate_checks():
    tent = PWLMap.tent()
    assert check_certificate(tent, HorseshoeCert.from_json(TENT_CERT))
    bad = HorseshoeCert.from_json({"n": 1, "intervals": [["1/10", "1/5"], ["3/10", "2/5"]]})
    assert not check_certificate(tent, bad)


def test_quadratic_certificate_with_interval_images():
    f = QuadMap(Fraction(4))
    cert = HorseshoeCert((
        RatInterval(Fraction(21, 100), Fraction(21, 50)),
        RatInterval(Fraction(29, 50), Fraction(79, 100)),
    ), 2)
    assert check_certificate(f, cert)


def test_bound_value():
    assert horseshoe_bound(2, 2) == RatInterval(Fraction(1, 2), Fraction(1, 2))
    enc = horseshoe_bound(3, 2)
    assert Fraction("0.7924812503") < enc.lo <= enc.hi < Fraction("0.7924812504")


def test_tent_search_reaches_one_half_by_two():
    records = list(search_lower_bounds(PWLMap.tent(), SearchBudget(max_n=2)))
    assert records
    assert records[-1].bound.lo >= Fraction(1, 2)
    assert records[-1].cert.n == 2


def test_tent_search_is_monotone_sound_and_verified():
    tent = PWLMap.tent()
    records = list(search_lower_bounds(tent, SearchBudget(max_n=6)))
    lows = [record.bound.lo for record in records]
    assert lows == sorted(lows) and len(set(lows)) == len(lows)
    assert all(record.bound.hi <= 1 for record in records)
    assert all(check_certificate(tent, record.cert) for record in records)
    assert lows[-1] > Fraction(9, 10)


def test_slope_two_search_reaches_high_bound():
    f = constant_slope_map(2)
    records = list(search_lower_bounds(f, SearchBudget(max_n=12)))
    assert records
    assert all(record.bound.hi <= 1 for record in records)
    assert check_certificate(f, records[-1].cert)
    assert records[-1].bound.lo >= Fraction(95, 100)


def test_identity_yields_nothing():
    assert list(search_lower_bounds(PWLMap.identity(), SearchBudget(max_n=4))) == []


def test_search_is_deterministic():
    f = constant_slope_map(Fraction(3, 2))
    first = [record.to_dict() for record in search_lower_bounds(f, SearchBudget(max_n=5))]
    second = [record.to_dict() for record in search_lower_bounds(f, SearchBudget(max_n=5))]
    assert first == second


def test_quadratic_search_is_sound():
    f = QuadMap(Fraction(4))
    records = list(search_lower_bounds(f, SearchBudget(max_n=4)))
    assert records
    assert records[-1].bound.lo >= Fraction(1, 2)
    assert all(record.bound.hi <= 1 for record in records)
    assert all(check_certificate(f, record.cert) for record in records)
