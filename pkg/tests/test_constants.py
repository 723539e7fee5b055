"""The plane constants c_E, c_R, D and their invariances."""
import math

import numpy as np
import pytest

from minktrig import (Vec2, c_e, c_e_pair, c_r, d_constant, lp, polygon,
                      regular_polygon, sine)

SQRT3 = math.sqrt(3.0)


def test_c_e_pair_hexagon_example(hexagon):
    pair = (Vec2(1.0, 0.0), Vec2(-0.5, SQRT3 / 2))
    rep = c_e_pair(hexagon, pair)
    assert rep.name == "c_E_pair"
    assert rep.value == pytest.approx(1.5, abs=1e-9)


def test_c_e_pair_grid_validation(hexagon):
    with pytest.raises(ValueError):
        c_e_pair(hexagon, (Vec2(1, 0), Vec2(0, 1)), grid=128)


def test_c_e_extremes(euclid, hexagon, square):
    assert c_e(euclid).value == pytest.approx(0.0, abs=1e-8)
    assert c_e(hexagon).value == pytest.approx(1.5, abs=1e-6)
    assert c_e(square).value == pytest.approx(1.0, abs=1e-6)


def test_c_e_range(all_specs):
    for spec in all_specs:
        rep = c_e(spec)
        assert -1e-9 <= rep.value <= 1.5 + 1e-9
        assert rep.refined


def test_c_r_four_n_gons():
    for n in (1, 2, 3):
        rep = c_r(regular_polygon(4 * n))
        assert rep.value == pytest.approx(math.sin(math.pi / (4 * n)) ** 2,
                                          abs=1e-7)


def test_c_r_zero_on_radon(euclid, hexagon):
    assert c_r(euclid).value == pytest.approx(0.0, abs=1e-9)
    assert c_r(hexagon).value == pytest.approx(0.0, abs=1e-9)


def test_c_r_witness_reproduces_value(octagon, square):
    for spec in (octagon, square):
        rep = c_r(spec)
        x, y = rep.witness
        again = abs(sine(spec, x, y).value - sine(spec, y, x).value)
        assert again == pytest.approx(rep.value, abs=1e-7)


def test_c_r_antinorm_plane_invariance(octagon, square):
    for spec in (octagon, square):
        direct = c_r(spec).value
        dual = c_r(spec, antinorm_plane=True).value
        assert dual == pytest.approx(direct, abs=1e-6)


def test_c_r_affine_invariance(octagon):
    base = c_r(octagon).value
    m = np.array([[1.0, 0.3], [0.1, 1.2]])
    verts = [v.as_tuple() for v in octagon.polygon_vertices()]
    half = verts[:len(verts) // 2]
    mapped = polygon([tuple(m @ np.array(v)) for v in half])
    assert c_r(mapped).value == pytest.approx(base, abs=1e-6)


def test_d_examples(euclid, square):
    rep = d_constant(euclid)
    assert rep.value == pytest.approx(1.0, abs=1e-9)
    rep = d_constant(square)
    assert rep.value == pytest.approx(2.0 * math.sqrt(2.0) - 2.0, abs=1e-6)


def test_d_witness_is_isosceles_with_min_sine(square):
    rep = d_constant(square)
    x, y = rep.witness
    assert square.gauge(x + y) == pytest.approx(square.gauge(x - y), abs=1e-6)
    assert sine(square, x, y).value == pytest.approx(rep.value, abs=1e-7)


def test_d_range(all_specs):
    for spec in all_specs:
        rep = d_constant(spec, 256)
        assert 0.0 < rep.value <= 1.0 + 1e-12


def test_lp_constants_monotone_toward_euclid():
    # l_p planes approach the Euclidean one as p -> 2, so both deviation
    # constants should shrink
    c3 = c_r(lp(3.0)).value
    c8 = c_r(lp(8.0)).value
    assert c3 < c8
    d3 = d_constant(lp(3.0), 256).value
    d8 = d_constant(lp(8.0), 256).value
    assert d3 > d8
