"""Pruebas de mapas lineales a trozos, composicion exacta y realizacion de entropias."""

import math
from fractions import Fraction

import pytest

from entrolab_core.errors import DomainError, FormatError, PrecisionError, ResourceLimitError
from entrolab_core.interval_maps import (
    PWLMap,
    QuadMap,
    compose,
    compose_iterate,
    constant_slope_map,
    entropy_via_variation,
    map_from_json,
    realize_computable,
    realize_sigma1,
    realize_slope,
    slope_detect,
    staircase,
    variation,
)
from entrolab_core.numkit import RatInterval, log2_enclosure
from entrolab_core.structures import Provenance


def test_tent_evaluation_and_image():
    tent = PWLMap.tent()
    assert tent(Fraction(1, 4)) == Fraction(1, 2)
    assert tent(Fraction(3, 4)) == Fraction(1, 2)
    assert tent.image(RatInterval(Fraction(1, 4), Fraction(3, 4))) == RatInterval(Fraction(1, 2), Fraction(1))
    with pytest.raises(DomainError):
        tent(Fraction(2))


def test_tent_laps_and_preimage():
    tent = PWLMap.tent()
    laps = tent.laps()
    assert [lap.direction for lap in laps] == [1, -1]
    assert tent.preimage_in_lap(laps[0], Fraction(1, 2)) == Fraction(1, 4)
    assert tent.preimage_in_lap(laps[1], Fraction(1, 2)) == Fraction(3, 4)


def test_flat_pieces_join_the_current_lap():
    f = PWLMap(((0, 0), (Fraction(1, 3), Fraction(1, 2)), (Fraction(2, 3), Fraction(1, 2)), (1, 0)))
    assert f.lap_count() == 2


@pytest.mark.parametrize("nodes", [
    [["0", "0"]],
    [["0", "0"], ["1/2", "1"], ["1/2", "0"], ["1", "1"]],
    [["0", "0"], ["1", "2"]],
    [["1/4", "0"], ["1", "1"]],
])
def test_invalid_maps_are_rejected(nodes):
    with pytest.raises(FormatError):
        PWLMap.from_json({"nodes": nodes})


def test_map_from_json_dispatch():
    assert map_from_json({"nodes": [["0", "0"], ["1", "1"]]}) == PWLMap.identity()
    assert map_from_json({"r": "7/2"}) == QuadMap(Fraction(7, 2))
    assert map_from_json({"r": ["3", "4"]}).r == RatInterval(Fraction(3), Fraction(4))
    with pytest.raises(FormatError):
        map_from_json({"x": 1})


def test_json_round_trip_of_pwl():
    f = constant_slope_map(Fraction(3, 2))
    assert PWLMap.from_json(f.to_json()) == f


def test_composition_is_exact():
    tent = PWLMap.tent()
    assert compose(tent, PWLMap.identity()) == tent
    t3 = compose_iterate(tent, 3)
    assert t3.lap_count() == 8
    assert variation(t3) == 8
    for k in range(9):
        x = Fraction(k, 8)
        assert t3(x) == tent(tent(tent(x)))


def test_compose_iterate_respects_node_cap():
    with pytest.raises(ResourceLimitError):
        compose_iterate(PWLMap.tent(), 20, node_cap=1000)


def test_quad_map_image_encloses():
    f = QuadMap(Fraction(4))
    assert f(Fraction(1, 2)) == 1
    enc = f.image(RatInterval(Fraction(1, 4), Fraction(1, 3)))
    assert f(Fraction(1, 4)) in enc
    assert f(Fraction(1, 3)) in enc


def test_constant_slope_map_shape():
    s = Fraction(3, 2)
    f = constant_slope_map(s)
    assert f(0) == 0 and f(1) == 1
    assert slope_detect(f) == s
    assert f.lap_count() == 3
    assert constant_slope_map(1) == PWLMap.identity()
    with pytest.raises(DomainError):
        constant_slope_map(Fraction(7, 2))


def test_variation_certified_for_constant_slope():
    tent = entropy_via_variation(PWLMap.tent(), 3)
    assert (tent.lo, tent.hi) == (1, 1)
    assert tent.certified and tent.provenance is Provenance.VARIATION

    ident = entropy_via_variation(PWLMap.identity(), 3)
    assert (ident.lo, ident.hi) == (0, 0)

    bound = entropy_via_variation(constant_slope_map(Fraction(3, 2)), 2)
    assert bound.certified
    assert bound.lo <= Fraction(math.log2(1.5)) + Fraction(1, 2**40)
    assert Fraction(math.log2(1.5)) - Fraction(1, 2**40) <= bound.hi


def test_realize_slope_hits_window():
    h = Fraction("0.5849625")
    s = realize_slope(h)
    enc = log2_enclosure(s, 24)
    tolerance = Fraction(1, 2**20)
    assert RatInterval(h - tolerance, h + tolerance).intersects(enc)
    assert abs(float(s) - 1.5) < 1e-5


def test_realize_slope_boundaries():
    assert realize_slope(0) == 1
    assert realize_slope(1) == 2
    assert realize_computable(0) == PWLMap.identity()
    with pytest.raises(DomainError):
        realize_slope(Fraction(3, 2))


def test_realize_slope_rejects_wide_target():
    with pytest.raises(PrecisionError):
        realize_slope(RatInterval(Fraction(1, 4), Fraction(1, 4) + Fraction(1, 2**10)), bits=20)


def test_realize_computable_round_trip():
    f = realize_computable(Fraction(1, 3))
    bound = entropy_via_variation(f, 1)
    assert bound.certified
    assert bound.lo - Fraction(1, 2**19) <= Fraction(1, 3) <= bound.hi + Fraction(1, 2**19)


def test_staircase_requires_fixed_endpoints():
    with pytest.raises(DomainError):
        staircase([PWLMap.tent()])
    assert staircase([]) == PWLMap.identity()


def test_staircase_places_blocks():
    g = staircase([constant_slope_map(2), constant_slope_map(2)])
    # bloque 0 en [0, 1/2], bloque 1 en [1/2, 3/4], identidad en [3/4, 1]
    assert g(Fraction(1, 2)) == Fraction(1, 2)
    assert g(Fraction(3, 4)) == Fraction(3, 4)
    assert g(Fraction(7, 8)) == Fraction(7, 8)
    assert g.image(RatInterval(Fraction(0), Fraction(1, 2))) == RatInterval(Fraction(0), Fraction(1, 2))


def test_sigma1_staircase_estimates_increase():
    g = realize_sigma1(["0.5849625", "1"])
    estimates = [entropy_via_variation(g, n) for n in range(1, 7)]
    assert not any(bound.certified for bound in estimates)
    mids = [bound.midpoint for bound in estimates]
    assert all(a <= b for a, b in zip(mids, mids[1:]))
    assert 0.55 < float(mids[0]) < 0.62
    assert 0.6 < float(mids[-1]) <= 1


def test_realize_sigma1_validation():
    with pytest.raises(DomainError):
        realize_sigma1(["1/2", "1/4"])
    with pytest.raises(DomainError):
        realize_sigma1(["1/2"], depth=0)
    g = realize_sigma1(["1/4", "1/2", "3/4"], depth=2)
    assert g(Fraction(7, 8)) == Fraction(7, 8)


@pytest.mark.parametrize("h", [
    Fraction(1, 2),
    log2_enclosure(RatInterval(Fraction(3, 2), Fraction(3, 2)), 40),
    Fraction(1),
], ids=["1/2", "log2(3/2)", "1"])
def test_realize_computable_hits_target_within_tolerance(h):
    target = h if isinstance(h, RatInterval) else RatInterval(h, h)
    tolerance = Fraction(1, 2**20)
    bound = entropy_via_variation(realize_computable(h), 1)
    assert bound.certified
    assert RatInterval(target.lo - tolerance, target.hi + tolerance).intersects(RatInterval(bound.lo, bound.hi))


def test_variation_of_iterates_is_power_of_slope():
    f = realize_computable(Fraction(1, 2))
    s = slope_detect(f)
    assert s is not None
    g = f
    for n in range(1, 11):
        assert variation(g) == s**n
        g = compose(f, g)
    assert variation(compose_iterate(f, 10)) == s**10


@pytest.mark.parametrize("s", [Fraction(3, 2), Fraction(2)])
def test_entropy_of_iterate_scales_with_n(s):
    h = math.log2(s)
    f = constant_slope_map(s)
    for n in range(1, 7):
        bound = entropy_via_variation(compose_iterate(f, n), 1)
        assert bound.certified
        assert bound.lo <= Fraction(n * h) + Fraction(1, 2**40)
        assert Fraction(n * h) - Fraction(1, 2**40) <= bound.hi


def test_iterate_of_constant_slope_map_is_exact():
    f = constant_slope_map(Fraction(3, 2))
    f3 = compose_iterate(f, 3)
    assert slope_detect(f3) == Fraction(27, 8)
    for k in range(17):
        x = Fraction(k, 16)
        assert f3(x) == f(f(f(x)))


def test_sigma1_staircase_value_at_six_iterates():
    g = realize_sigma1(["0.5849625", "0.5849625", "1"])
    mids = [entropy_via_variation(g, n).midpoint for n in range(1, 7)]
    assert all(a <= b for a, b in zip(mids, mids[1:]))
    # V(g^6) = 3/4 s^6 + 2^6/8 + 1/8 con s ~ 3/2, log2(V)/6 ~ 0.6765
    assert Fraction(676, 1000) <= mids[-1] <= Fraction(677, 1000)
    # el bloque de peso 1/8 da V(g^n) >= 2^-3 2^n, luego la estimacion es >= 1 - 3/n
    assert Fraction(1, 2) <= mids[-1] < 1 - Fraction(15, 100)
