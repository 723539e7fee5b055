"""Bisectors, law of sines, isosceles/reflection characterizations,
sine-conformal maps."""
import math

import numpy as np
import pytest

from minktrig import (LinearMap2, Triangle, Vec2, busemann_bisector,
                      equal_sines_equal_sides, glogovskii_bisector,
                      is_sine_conformal, isosceles_sine_characterization,
                      law_of_sines, parallelogram_area_check,
                      point_to_ray_distance, reflection_roberts_check, sine)

SQRT3 = math.sqrt(3.0)


def test_bisectors_square_example(square):
    x, y = Vec2(1.0, 0.0), Vec2(1.0, 1.0)
    zb = busemann_bisector(square, x, y)
    assert (zb.x, zb.y) == pytest.approx((1.0, 0.5), abs=1e-12)
    zg = glogovskii_bisector(square, x, y)
    assert (zg.x, zg.y) == pytest.approx((1.0, 1.0 / 3.0), abs=1e-12)


def test_bisectors_coincide_on_euclid(euclid):
    rng = np.random.default_rng(2)
    for t1 in rng.uniform(0, 2 * math.pi, 50):
        t2 = t1 + rng.uniform(0.2, math.pi - 0.2)
        x = Vec2(math.cos(t1), math.sin(t1))
        y = Vec2(math.cos(t2), math.sin(t2))
        zb = busemann_bisector(euclid, x, y)
        zg = glogovskii_bisector(euclid, x, y)
        assert (zb.x, zb.y) == pytest.approx((zg.x, zg.y), abs=1e-12)


def test_bisector_duality(square, octagon):
    # measuring lengths with the antinorm swaps the two constructions
    x, y = Vec2(1.0, 0.2), Vec2(-0.4, 1.0)
    for spec in (square, octagon):
        a = busemann_bisector(spec, x, y, plane="antinorm")
        b = glogovskii_bisector(spec, x, y)
        assert (a.x, a.y) == pytest.approx((b.x, b.y), rel=1e-12)


def test_bisector_characterizations(hexagon):
    x, y = Vec2(1.0, 0.3), Vec2(-0.2, 0.9)
    zb = busemann_bisector(hexagon, x, y)
    assert sine(hexagon, x, zb).value == pytest.approx(
        sine(hexagon, y, zb).value, abs=1e-12)
    zg = glogovskii_bisector(hexagon, x, y)
    assert sine(hexagon, zg, x).value == pytest.approx(
        sine(hexagon, zg, y).value, abs=1e-12)


def test_bisector_rejects_degenerate(euclid):
    with pytest.raises(ValueError):
        busemann_bisector(euclid, Vec2(1, 0), Vec2(-2, 0))
    with pytest.raises(ValueError):
        glogovskii_bisector(euclid, Vec2(0, 0), Vec2(1, 0))


def test_point_to_ray_distance(euclid, square):
    assert point_to_ray_distance(euclid, Vec2(1, 1), Vec2(1, 0)) == \
        pytest.approx(1.0)
    # ray pointing away: the infimum sits at the ray's origin
    assert point_to_ray_distance(euclid, Vec2(1, 1), Vec2(-1, 0)) == \
        pytest.approx(math.sqrt(2.0))
    assert point_to_ray_distance(square, Vec2(1.0, 1.0 / 3.0), Vec2(1, 0)) \
        == pytest.approx(1.0 / 3.0, abs=1e-12)


def test_glogovskii_equidistant_from_legs(square):
    x, y = Vec2(1.0, 0.0), Vec2(1.0, 1.0)
    zg = glogovskii_bisector(square, x, y)
    d1 = point_to_ray_distance(square, zg, x)
    d2 = point_to_ray_distance(square, zg, y)
    assert d1 == pytest.approx(d2, abs=1e-12)
    assert d1 == pytest.approx(1.0 / 3.0, abs=1e-12)


def test_law_of_sines_euclid_circumdiameter(euclid):
    a, b, c = Vec2(0, 0), Vec2(2, 0), Vec2(1, SQRT3)  # equilateral, side 2
    rep = law_of_sines(euclid, Triangle(a, b, c))
    want = 2.0 / math.sin(math.pi / 3)
    for r in rep.ratios:
        assert r == pytest.approx(want, rel=1e-12)
    assert rep.max_spread <= 1e-12
    assert max(rep.weak_residuals) <= 1e-12


def test_law_of_sines_radon_vs_not(hexagon, square):
    tri = Triangle(Vec2(0.3, 0.1), Vec2(-0.9, 0.5), Vec2(0.2, -1.1))
    rep = law_of_sines(hexagon, tri)
    assert rep.max_spread <= 1e-9
    rep = law_of_sines(square, tri)
    assert rep.max_spread > 1e-3
    assert max(rep.weak_residuals) <= 1e-9


def test_triangle_rejects_collinear():
    with pytest.raises(ValueError):
        Triangle(Vec2(0, 0), Vec2(1, 1), Vec2(2, 2))


def test_equal_sines_equal_sides(euclid, hexagon):
    iso = Triangle(Vec2(0, 0), Vec2(2, 1), Vec2(-1, 2))  # |ab| = |ac|
    for spec in (euclid, hexagon):
        s_eq, l_eq = equal_sines_equal_sides(spec, iso)
        assert s_eq == l_eq
    scalene = Triangle(Vec2(0, 0), Vec2(3, 0), Vec2(0.5, 1.5))
    s_eq, l_eq = equal_sines_equal_sides(euclid, scalene)
    assert not s_eq and not l_eq


def test_isosceles_characterization(euclid, square):
    t = isosceles_sine_characterization(euclid, Vec2(1, 0), Vec2(0, 1))
    assert t == (True, True, True)
    t = isosceles_sine_characterization(euclid, Vec2(1, 0), Vec2(1, 1))
    assert t == (False, False, False)
    t = isosceles_sine_characterization(square, Vec2(1, 0), Vec2(0, 1))
    assert t == (True, True, True)
    with pytest.raises(ValueError):
        isosceles_sine_characterization(square, Vec2(1, 1), Vec2(-2, -2))


def test_parallelogram_area_examples(euclid, hexagon):
    area, product, ratio = parallelogram_area_check(
        euclid, Vec2(0, 0), Vec2(1, 0), Vec2(0, 1))
    assert (area, product, ratio) == pytest.approx((1.0, 1.0, 1.0))
    area, product, ratio = parallelogram_area_check(
        hexagon, Vec2(0, 0), Vec2(1, 0), Vec2(0, 1))
    assert area == pytest.approx(1.0)
    assert ratio == pytest.approx(SQRT3 / 2)


def test_parallelogram_ratio_constant_iff_radon(hexagon, square):
    rng = np.random.default_rng(3)
    ratios_hex = []
    ratios_sq = []
    for t1 in rng.uniform(0, 2 * math.pi, 40):
        t2 = t1 + rng.uniform(0.3, math.pi - 0.3)
        b = Vec2(math.cos(t1), math.sin(t1))
        d = Vec2(math.cos(t2), math.sin(t2))
        ratios_hex.append(parallelogram_area_check(hexagon, Vec2(0, 0), b, d)[2])
        ratios_sq.append(parallelogram_area_check(square, Vec2(0, 0), b, d)[2])
    assert max(ratios_hex) - min(ratios_hex) <= 1e-9
    assert max(ratios_sq) - min(ratios_sq) > 0.1


def test_parallelogram_rejects_degenerate(euclid):
    with pytest.raises(ValueError):
        parallelogram_area_check(euclid, Vec2(0, 0), Vec2(1, 0), Vec2(2, 0))


def test_linear_map_basics():
    m = LinearMap2.rotation(0.7)
    assert m.det == pytest.approx(1.0)
    r = LinearMap2.reflection(Vec2(1, 0), Vec2(0, 1))
    assert (r(Vec2(1, 0)).x, r(Vec2(1, 0)).y) == pytest.approx((1.0, 0.0))
    assert (r(Vec2(0, 1)).x, r(Vec2(0, 1)).y) == pytest.approx((0.0, -1.0))
    with pytest.raises(ValueError):
        LinearMap2.reflection(Vec2(1, 1), Vec2(2, 2))


def test_reflection_fixes_axis_negates_other(square):
    r = LinearMap2.reflection(Vec2(1.0, 0.4), Vec2(-0.3, 1.0))
    x, y = Vec2(1.0, 0.4), Vec2(-0.3, 1.0)
    assert (r(x).x, r(x).y) == pytest.approx((x.x, x.y))
    assert (r(y).x, r(y).y) == pytest.approx((-y.x, -y.y))
    rr = lambda v: r(r(v))
    v = Vec2(0.7, -1.2)
    assert (rr(v).x, rr(v).y) == pytest.approx((v.x, v.y))


def test_sine_conformal_maps(euclid, hexagon):
    assert is_sine_conformal(euclid, LinearMap2.rotation(1.1))
    assert is_sine_conformal(euclid, LinearMap2(2.0, 0.0, 0.0, 2.0))
    assert not is_sine_conformal(euclid, LinearMap2(2.0, 0.0, 0.0, 1.0))
    # rotation by the hexagon's own symmetry angle preserves the ball
    assert is_sine_conformal(hexagon, LinearMap2.rotation(math.pi / 3))
    assert not is_sine_conformal(hexagon, LinearMap2.rotation(0.3))


def test_sine_conformal_validation(euclid):
    with pytest.raises(ValueError):
        is_sine_conformal(euclid, LinearMap2(1.0, 0.0, 0.0, 0.0))
    with pytest.raises(ValueError):
        is_sine_conformal(euclid, LinearMap2.rotation(0.1), n_samples=10)


def test_reflection_roberts_agreement(euclid, square, hexagon):
    for spec in (euclid, square, hexagon):
        conf, rob = reflection_roberts_check(spec, Vec2(1, 0), Vec2(0, 1),
                                             n_samples=100)
        assert conf and rob
    conf, rob = reflection_roberts_check(square, Vec2(1, 1), Vec2(1, -1),
                                         n_samples=100)
    assert conf and rob
    conf, rob = reflection_roberts_check(hexagon, Vec2(1, 0), Vec2(1, 1),
                                         n_samples=100)
    assert not conf and not rob
