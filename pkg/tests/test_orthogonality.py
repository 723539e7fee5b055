"""Birkhoff/isosceles/Roberts relations, conjugate pairs, Benitez alpha."""
import math

import numpy as np
import pytest

from minktrig import (Vec2, benitez_alpha, birkhoff_defect, conjugate_pairs,
                      find_orthogonal_diagonals, is_birkhoff, is_isosceles,
                      is_roberts, sine)

SQRT3 = math.sqrt(3.0)


def _angle_mod_pi(v: Vec2) -> float:
    return math.atan2(v.y, v.x) % math.pi


def _pair_angle_sets(pairs):
    out = []
    for p in pairs:
        out.append(tuple(sorted((_angle_mod_pi(p.x), _angle_mod_pi(p.y)))))
    return sorted(out)


def test_defect_euclid_closed_form(euclid):
    d = birkhoff_defect(euclid, Vec2(1, 0), Vec2(0, 1))
    assert d.t_star == pytest.approx(0.0, abs=1e-12)
    assert d.min_value == pytest.approx(1.0)
    d = birkhoff_defect(euclid, Vec2(1, 0), Vec2(1, 1))
    assert d.t_star == pytest.approx(-0.5)
    assert d.min_value == pytest.approx(math.sqrt(0.5))


def test_defect_square_flat_minimum(square):
    d = birkhoff_defect(square, Vec2(1.0, 0.5), Vec2(0.0, 1.0))
    assert d.min_value == pytest.approx(1.0)
    # the minimizing set is t in [-1.5, 0.5]; ties resolve to its midpoint
    assert d.t_star == pytest.approx(-0.5)


def test_defect_tracks_grid(p3):
    rng = np.random.default_rng(2)
    ts = np.linspace(-4.0, 4.0, 2001)
    for tx, ty in rng.uniform(0.0, 2 * math.pi, size=(10, 2)):
        x, y = p3.unit_point(tx), p3.unit_point(ty)
        if abs(x.x * y.y - x.y * y.x) < 1e-3:
            continue
        d = birkhoff_defect(p3, x, y)
        grid = min(p3.gauge_xy(x.x + t * y.x, x.y + t * y.y) for t in ts)
        assert d.min_value <= grid + 1e-9


def test_birkhoff_examples(euclid, square):
    assert is_birkhoff(euclid, Vec2(1, 0), Vec2(0, 1))
    assert not is_birkhoff(euclid, Vec2(1, 0), Vec2(1, 1))
    assert is_birkhoff(square, Vec2(1, 1), Vec2(0, 1))
    assert is_birkhoff(square, Vec2(1, 1), Vec2(1, 0))
    assert not is_birkhoff(square, Vec2(1, 0), Vec2(1, 1))
    # scale invariance of the relation
    assert is_birkhoff(square, Vec2(3, 3), Vec2(0, -2))


def test_isosceles_examples(euclid, square):
    assert is_isosceles(euclid, Vec2(1, 0), Vec2(0, 1))
    assert not is_isosceles(euclid, Vec2(1, 0), Vec2(1, 1))
    assert is_isosceles(square, Vec2(1, 0), Vec2(0, 1))
    assert not is_isosceles(square, Vec2(1, 0), Vec2(1, 1))


def test_roberts_examples(square, hexagon):
    assert is_roberts(square, Vec2(1, 0), Vec2(0, 1))
    assert is_roberts(square, Vec2(1, 1), Vec2(1, -1))
    assert is_roberts(hexagon, Vec2(1, 0), Vec2(0, 1))
    assert not is_roberts(hexagon, Vec2(1, 0), Vec2(1, 1))


def test_roberts_implies_birkhoff_both_ways(all_specs):
    for spec in all_specs:
        x, y = Vec2(1, 0), Vec2(0, 1)
        if is_roberts(spec, x, y):
            assert is_birkhoff(spec, x, y)
            assert is_birkhoff(spec, y, x)


def test_conjugates_square_exactly_two(square):
    pairs = conjugate_pairs(square)
    assert len(pairs) == 2
    assert all(p.degenerate for p in pairs)
    got = _pair_angle_sets(pairs)
    want = [(0.0, math.pi / 2), (math.pi / 4, 3 * math.pi / 4)]
    for (a, b), (wa, wb) in zip(got, sorted(want)):
        assert a == pytest.approx(wa, abs=1e-6)
        assert b == pytest.approx(wb, abs=1e-6)


def test_conjugates_hexagon_three_classes(hexagon):
    pairs = conjugate_pairs(hexagon)
    assert len(pairs) == 3
    assert all(p.degenerate for p in pairs)
    got = _pair_angle_sets(pairs)
    want = sorted([(0.0, math.pi / 3), (0.0, 2 * math.pi / 3),
                   (math.pi / 3, 2 * math.pi / 3)])
    for (a, b), (wa, wb) in zip(got, want):
        assert a == pytest.approx(wa, abs=1e-6)
        assert b == pytest.approx(wb, abs=1e-6)


def test_conjugates_octagon_vertex_and_midpoint_classes(octagon):
    pairs = conjugate_pairs(octagon)
    assert len(pairs) == 4
    got = _pair_angle_sets(pairs)
    d = math.pi / 8
    want = sorted([(0.0, 4 * d), (2 * d, 6 * d), (d, 5 * d), (3 * d, 7 * d)])
    for (a, b), (wa, wb) in zip(got, want):
        assert a == pytest.approx(wa, abs=1e-6)
        assert b == pytest.approx(wb, abs=1e-6)


def test_conjugates_smooth_planes(euclid, p15):
    pairs = conjugate_pairs(euclid)
    assert len(pairs) >= 1
    for p in pairs:
        assert not p.degenerate
        dot = p.x.x * p.y.x + p.x.y * p.y.y
        assert dot == pytest.approx(0.0, abs=1e-9)
    pairs = conjugate_pairs(p15)
    got = _pair_angle_sets(pairs)
    assert len(got) == 2
    assert got[0][0] == pytest.approx(0.0, abs=1e-9)
    assert got[0][1] == pytest.approx(math.pi / 2, abs=1e-9)
    assert got[1][0] == pytest.approx(math.pi / 4, abs=1e-9)
    assert got[1][1] == pytest.approx(3 * math.pi / 4, abs=1e-9)


def test_conjugate_pairs_are_mutual_unit(all_specs):
    for spec in all_specs:
        for p in conjugate_pairs(spec):
            assert spec.gauge(p.x) == pytest.approx(1.0, abs=1e-9)
            assert spec.gauge(p.y) == pytest.approx(1.0, abs=1e-9)
            assert sine(spec, p.x, p.y).value == pytest.approx(1.0, abs=1e-7)
            assert sine(spec, p.y, p.x).value == pytest.approx(1.0, abs=1e-7)


def test_conjugates_scan_validation(euclid):
    with pytest.raises(ValueError):
        conjugate_pairs(euclid, 32)


def test_alpha_examples(euclid):
    assert benitez_alpha(euclid, Vec2(1, 0), Vec2(0, 1)) == pytest.approx(1.0, abs=1e-9)
    a = benitez_alpha(euclid, Vec2(1, 0), Vec2(1, 1))
    assert a == pytest.approx(math.sqrt(0.5), abs=1e-9)


def test_alpha_scale_covariance(hexagon):
    x, y = Vec2(1.0, 0.2), Vec2(-0.3, 1.0)
    a = benitez_alpha(hexagon, x, y)
    assert benitez_alpha(hexagon, x * 2.0, y) == pytest.approx(2.0 * a, rel=1e-7)
    assert benitez_alpha(hexagon, x, y * 2.0) == pytest.approx(a / 2.0, rel=1e-7)


def test_alpha_defining_relation(all_specs):
    x, y = Vec2(0.9, 0.1), Vec2(-0.2, 1.1)
    for spec in all_specs:
        a = benitez_alpha(spec, x, y)
        assert a > 0.0
        assert is_birkhoff(spec, x + y * a, x - y * a, 1e-7)


def test_orthogonal_diagonals(euclid, hexagon, square):
    for spec in (euclid, hexagon):
        v, w = find_orthogonal_diagonals(spec)
        assert benitez_alpha(spec, v, w) == pytest.approx(1.0, abs=1e-7)
        assert is_birkhoff(spec, v + w, v - w, 1e-7)
        assert is_birkhoff(spec, w - v, v + w, 1e-7)
    with pytest.raises(ValueError):
        find_orthogonal_diagonals(square)
