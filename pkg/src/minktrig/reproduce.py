"""The reproduction table: twelve numbered checks, each pinning one of the
library's headline identities or constants to an independent reference at a
fixed tolerance.

Every check is deterministic (seeded sampling) and returns a
CriterionResult; run_all executes any subset in order. Details never
contain commas so results stay CSV-friendly.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .constants import c_e, c_r, d_constant
from .orthogonality import (benitez_alpha, conjugate_pairs,
                            find_orthogonal_diagonals, is_birkhoff)
from .plane import NormSpec, Vec2, euclidean, lp, regular_polygon, symplectic
from .sine import conjugate_range, sine, sine_direct
from .trig import (Triangle, busemann_bisector, equal_sines_equal_sides,
                   glogovskii_bisector, isosceles_sine_characterization,
                   law_of_sines, point_to_ray_distance,
                   reflection_roberts_check)

TAU = 2.0 * math.pi


@dataclass(frozen=True, slots=True)
class CriterionResult:
    index: int
    name: str
    passed: bool
    detail: str


def roster() -> list[tuple[str, NormSpec]]:
    """The planes every multi-spec check runs over."""
    return [("euclidean", euclidean()), ("lp-1", lp(1.0)), ("lp-1.5", lp(1.5)),
            ("lp-3", lp(3.0)), ("lp-inf", lp(math.inf)),
            ("hexagon", regular_polygon(6)), ("octagon", regular_polygon(8))]


def _dir(theta: float) -> Vec2:
    return Vec2(math.cos(theta), math.sin(theta))


def _sep_angles(rng, count: int, parts: int, min_sep: float) -> np.ndarray:
    """count rows of `parts` angles whose pairwise circular gaps (mod pi)
    exceed min_sep, drawn by rejection."""
    rows = []
    while len(rows) < count:
        t = rng.uniform(0.0, TAU, parts)
        ok = True
        for i in range(parts):
            for j in range(i + 1, parts):
                d = abs(t[i] - t[j]) % math.pi
                if min(d, math.pi - d) < min_sep:
                    ok = False
        if ok:
            rows.append(t)
    return np.array(rows)


def _unit_triangle(spec: NormSpec, rng, min_sep: float) -> Triangle:
    """A non-degenerate triangle inscribed in the unit circle. Separated
    angles are not enough: on a polygon circle three points can share one
    straight edge, so reject until the area is real."""
    while True:
        t = rng.uniform(0.0, TAU, 3)
        ok = True
        for i in range(3):
            for j in range(i + 1, 3):
                d = abs(t[i] - t[j]) % math.pi
                if min(d, math.pi - d) < min_sep:
                    ok = False
        if not ok:
            continue
        a, b, c = (spec.unit_point(v) for v in t)
        if abs(symplectic(b - a, c - a)) > 1e-6:
            return Triangle(a, b, c)


def _iso_partners(spec: NormSpec, theta: float, htol: float,
                  segments: int = 32) -> list[float]:
    """Angles phi with unit(theta) isosceles-orthogonal to unit(phi),
    located by sign changes of ||x+y|| - ||x-y|| and bisected to |h| <= htol."""
    x = spec.unit_point(theta)
    xa = np.array([x.x, x.y])

    def h_at(phi: float) -> float:
        yx, yy = spec.unit_xy(phi)
        return (spec.gauge_xy(x.x + yx, x.y + yy)
                - spec.gauge_xy(x.x - yx, x.y - yy))

    phis = theta + math.pi * np.arange(segments + 1) / segments
    ys = spec.unit_points(phis)
    hs = spec.gauge_many(ys + xa) - spec.gauge_many(xa - ys)
    hs[0] = 2.0
    hs[-1] = -2.0
    roots: list[float] = []
    for k in range(segments):
        a, fa = float(phis[k]), float(hs[k])
        b, fb = float(phis[k + 1]), float(hs[k + 1])
        if abs(fa) <= htol:
            roots.append(a)
            continue
        if fa * fb >= 0.0:
            continue
        for _ in range(80):
            mid = 0.5 * (a + b)
            fm = h_at(mid)
            if abs(fm) <= htol or b - a <= 1e-15:
                break
            if (fm > 0.0) == (fa > 0.0):
                a, fa = mid, fm
            else:
                b = mid
        roots.append(0.5 * (a + b))
    return roots


# ---------------------------------------------------------------------------
# Criteria
# ---------------------------------------------------------------------------


def _criterion_1(seed: int) -> CriterionResult:
    spec = euclidean()
    rng = np.random.default_rng(seed)
    worst = 0.0
    for t1, t2 in rng.uniform(0.0, TAU, size=(10_000, 2)):
        x, y = _dir(t1), _dir(t2)
        dot = x.x * y.x + x.y * y.y
        ref = math.sqrt(max(0.0, 1.0 - dot * dot))
        worst = max(worst, abs(sine(spec, x, y).value - ref))
    return CriterionResult(1, "euclidean sine closed form", worst <= 1e-10,
                           f"max |s - sqrt(1-<x.y>^2)| = {worst:.3g} on 10000 pairs")


def _criterion_2(seed: int) -> CriterionResult:
    rng = np.random.default_rng(seed)
    per_spec = 10_000 // 7 + 1
    worst = 0.0
    for _, spec in roster():
        for t1, t2 in rng.uniform(0.0, TAU, size=(per_spec, 2)):
            x, y = _dir(t1), _dir(t2)
            d = abs(sine(spec, x, y).value - sine_direct(spec, x, y).value)
            worst = max(worst, d)
    return CriterionResult(2, "formula vs direct minimization", worst <= 1e-8,
                           f"max |formula - direct| = {worst:.3g} on "
                           f"{7 * per_spec} triples")


def _criterion_3(seed: int) -> CriterionResult:
    rng = np.random.default_rng(seed)
    tol = 1e-8
    mism_birkhoff = 0
    mism_parallel = 0
    out_of_range = 0
    total = 0
    for _, spec in roster():
        pairs: list[tuple[Vec2, Vec2]] = []
        for t1, t2 in rng.uniform(0.0, TAU, size=(5000, 2)):
            pairs.append((_dir(t1), _dir(t2)))
        scales = (-2.0, -1.0, -0.5, 0.5, 1.0, 2.0)
        for k, t in enumerate(rng.uniform(0.0, TAU, 24)):
            x = _dir(t)
            pairs.append((x, x * scales[k % len(scales)]))
        for t in rng.uniform(0.0, TAU, 24):
            x = _dir(t)
            pairs.append((spec.antinorm(x).witness, x))
        for x, y in pairs:
            s = sine(spec, x, y).value
            total += 1
            if not 0.0 <= s <= 1.0:
                out_of_range += 1
            if (s >= 1.0 - tol) != is_birkhoff(spec, x, y, tol):
                mism_birkhoff += 1
            xe = math.hypot(x.x, x.y)
            ye = math.hypot(y.x, y.y)
            parallel = abs(symplectic(x, y)) <= tol * xe * ye
            if (s <= tol) != parallel:
                mism_parallel += 1
    ok = out_of_range == 0 and mism_birkhoff == 0 and mism_parallel == 0
    return CriterionResult(3, "sine range and degeneracy", ok,
                           f"{total} pairs; range violations {out_of_range}; "
                           f"birkhoff mismatches {mism_birkhoff}; "
                           f"parallel mismatches {mism_parallel}")


def _criterion_4(seed: int) -> CriterionResult:
    rng = np.random.default_rng(seed)
    hexagon = regular_polygon(6)
    worst_hex = 0.0
    for t1, t2 in rng.uniform(0.0, TAU, size=(1000, 2)):
        x, y = _dir(t1), _dir(t2)
        worst_hex = max(worst_hex,
                        abs(sine(hexagon, x, y).value - sine(hexagon, y, x).value))
    square = lp(math.inf)
    angles = list(square.special_angles()) + list(rng.uniform(0.0, TAU, 200))
    best_sq = 0.0
    for t1 in angles:
        for t2 in angles[:16]:
            x, y = square.unit_point(t1), square.unit_point(t2)
            best_sq = max(best_sq,
                          abs(sine(square, x, y).value - sine(square, y, x).value))
    ok = worst_hex <= 1e-9 and best_sq >= 0.499
    return CriterionResult(4, "radon symmetry dichotomy", ok,
                           f"hexagon max asymmetry {worst_hex:.3g}; "
                           f"max-norm peak asymmetry {best_sq:.6g}")


def _criterion_5(seed: int) -> CriterionResult:
    worst = 0.0
    values = []
    for n in range(1, 7):
        rep = c_r(regular_polygon(4 * n), grid=512)
        target = math.sin(math.pi / (4 * n)) ** 2
        worst = max(worst, abs(rep.value - target))
        values.append(f"{4 * n}-gon {rep.value:.9g}")
    return CriterionResult(5, "c_R of regular 4n-gons", worst <= 1e-6,
                           f"max |c_R - sin^2(pi/4n)| = {worst:.3g}; "
                           + "; ".join(values))


def _criterion_6(seed: int) -> CriterionResult:
    val_euc = c_e(euclidean(), 1024).value
    val_hex = c_e(regular_polygon(6), 1024).value
    bounds_ok = True
    worst_bound = 0.0
    for _, spec in roster():
        v = c_e(spec, 1024).value
        worst_bound = max(worst_bound, v)
        if not -1e-9 <= v <= 1.5 + 1e-9:
            bounds_ok = False
    ok = val_euc <= 1e-8 and abs(val_hex - 1.5) <= 1e-6 and bounds_ok
    return CriterionResult(6, "c_E extremes", ok,
                           f"euclidean {val_euc:.3g}; hexagon {val_hex:.9g}; "
                           f"roster max {worst_bound:.6g}")


def _criterion_7(seed: int) -> CriterionResult:
    rng = np.random.default_rng(seed)
    lo = math.inf
    hi = -math.inf
    for _, spec in roster():
        for pair in conjugate_pairs(spec):
            for t in rng.uniform(0.0, TAU, 2000):
                g = conjugate_range(spec, pair, spec.unit_point(t))
                lo = min(lo, g)
                hi = max(hi, g)
    hexagon = regular_polygon(6)
    x = Vec2(1.0, 0.0)
    y = Vec2(-0.5, math.sqrt(3.0) / 2.0)
    hi_err = abs(conjugate_range(hexagon, (x, y), x + y) - 2.0)
    lo_err = abs(conjugate_range(hexagon, (x, y), (y - x) / 2.0) - 0.5)
    ok = (lo >= 0.5 - 1e-9 and hi <= 2.0 + 1e-9
          and hi_err <= 1e-7 and lo_err <= 1e-7)
    return CriterionResult(7, "conjugate range bounds", ok,
                           f"observed range [{lo:.9g}; {hi:.9g}]; hexagon "
                           f"extremal errors {hi_err:.3g} and {lo_err:.3g}")


def _criterion_8(seed: int) -> CriterionResult:
    rng = np.random.default_rng(seed)
    hexagon = regular_polygon(6)
    spread_hex = 0.0
    for _ in range(200):
        tri = _unit_triangle(hexagon, rng, 0.15)
        spread_hex = max(spread_hex, law_of_sines(hexagon, tri).max_spread)

    euc = euclidean()
    worst_diam = 0.0
    for t1, t2 in _sep_angles(rng, 50, 2, 0.1):
        x, y = _dir(t1), _dir(t2)
        rep = law_of_sines(euc, Triangle(x, y, -x))
        worst_diam = max(worst_diam, max(abs(r - 2.0) for r in rep.ratios))

    dx, dy = find_orthogonal_diagonals(hexagon)
    rep = law_of_sines(hexagon, Triangle(dx, dy, -dx))
    hex_diam = max(abs(r - 2.0) for r in rep.ratios)

    square = lp(math.inf)
    weak = max(law_of_sines(square, Triangle(Vec2(0, 0), Vec2(1, 0),
                                             Vec2(1, 1))).weak_residuals)
    for _ in range(100):
        tri = _unit_triangle(square, rng, 0.15)
        weak = max(weak, max(law_of_sines(square, tri).weak_residuals))

    ok = (spread_hex <= 1e-8 and worst_diam <= 1e-9 and hex_diam <= 1e-7
          and weak <= 1e-9)
    return CriterionResult(8, "law of sines", ok,
                           f"hexagon spread {spread_hex:.3g}; euclidean "
                           f"diameter ratio error {worst_diam:.3g}; hexagon "
                           f"diameter ratio error {hex_diam:.3g}; max-norm "
                           f"weak residual {weak:.3g}")


def _criterion_9(seed: int) -> CriterionResult:
    rng = np.random.default_rng(seed)
    hexagon = regular_polygon(6)
    worst_coincide = 0.0
    for t1 in rng.uniform(0.0, TAU, 500):
        t2 = t1 + rng.uniform(0.2, math.pi - 0.2)
        x, y = _dir(t1), _dir(t2)
        zb = busemann_bisector(hexagon, x, y)
        zg = glogovskii_bisector(hexagon, x, y)
        worst_coincide = max(worst_coincide, abs(zb.x - zg.x), abs(zb.y - zg.y))

    square = lp(math.inf)
    x, y = Vec2(1.0, 0.0), Vec2(1.0, 1.0)
    zb = busemann_bisector(square, x, y)
    zg = glogovskii_bisector(square, x, y)
    err_b = max(abs(zb.x - 1.0), abs(zb.y - 0.5))
    err_g = max(abs(zg.x - 1.0), abs(zg.y - 1.0 / 3.0))
    char_b = abs(sine(square, x, zb).value - sine(square, y, zb).value)
    char_g = abs(sine(square, zg, x).value - sine(square, zg, y).value)
    d1 = point_to_ray_distance(square, zg, x)
    d2 = point_to_ray_distance(square, zg, y)
    equi = abs(d1 - d2)
    distinct = max(abs(zb.x - zg.x), abs(zb.y - zg.y))

    ok = (worst_coincide <= 1e-8 and err_b <= 1e-12 and err_g <= 1e-12
          and char_b <= 1e-9 and char_g <= 1e-9 and equi <= 1e-9
          and abs(d1 - 1.0 / 3.0) <= 1e-9 and distinct >= 0.1)
    return CriterionResult(9, "angular bisectors", ok,
                           f"hexagon coincidence {worst_coincide:.3g}; max-norm "
                           f"bisectors (1;0.5) and (1;1/3) errors {err_b:.3g} "
                           f"{err_g:.3g}; sine characterizations {char_b:.3g} "
                           f"{char_g:.3g}; ray equidistance gap {equi:.3g}")


def _criterion_10(seed: int) -> CriterionResult:
    rng = np.random.default_rng(seed)
    mism_sides = 0
    mism_iso = 0
    mism_refl = 0
    for _, spec in roster():
        for _ in range(900):
            pts = rng.uniform(-2.0, 2.0, size=(3, 2))
            a, b, c = (Vec2(*p) for p in pts)
            if abs(symplectic(b - a, c - a)) <= 1e-3:
                continue
            s_eq, l_eq = equal_sines_equal_sides(spec, Triangle(a, b, c))
            mism_sides += s_eq != l_eq
        for t1, t2 in _sep_angles(rng, 100, 2, 0.1):
            r = rng.uniform(0.3, 2.0)
            a = Vec2(*rng.uniform(-1.0, 1.0, 2))
            b = a + spec.unit_point(t1) * r
            c = a + spec.unit_point(t2) * r
            s_eq, l_eq = equal_sines_equal_sides(spec, Triangle(a, b, c))
            mism_sides += s_eq != l_eq or not (s_eq and l_eq)

        for t1, t2 in _sep_angles(rng, 950, 2, 1e-3):
            x = _dir(t1) * rng.uniform(0.5, 2.0)
            y = _dir(t2) * rng.uniform(0.5, 2.0)
            triple = isosceles_sine_characterization(spec, x, y)
            mism_iso += len(set(triple)) != 1
        for t in rng.uniform(0.0, TAU, 50):
            x = spec.unit_point(t)
            for phi in _iso_partners(spec, t, 1e-12)[:1]:
                triple = isosceles_sine_characterization(spec, x,
                                                         spec.unit_point(phi))
                mism_iso += len(set(triple)) != 1 or not all(triple)

        axes = [(Vec2(1, 0), Vec2(0, 1))]
        if isinstance(spec.polygon_vertices(), tuple) and \
                len(spec.polygon_vertices() or ()) == 4:
            axes.append((Vec2(1, 1), Vec2(1, -1)))
        checks = list(axes)
        for t1, t2 in _sep_angles(rng, 500 - len(axes), 2, 1e-2):
            checks.append((_dir(t1), _dir(t2)))
        for x, y in checks:
            conf, rob = reflection_roberts_check(spec, x, y, n_samples=100,
                                                 seed=seed)
            mism_refl += conf != rob
    ok = mism_sides == 0 and mism_iso == 0 and mism_refl == 0
    return CriterionResult(10, "equivalence suites", ok,
                           f"equal-sides mismatches {mism_sides}; isosceles "
                           f"triple mismatches {mism_iso}; reflection/roberts "
                           f"mismatches {mism_refl}")


def _criterion_11(seed: int) -> CriterionResult:
    rng = np.random.default_rng(seed)
    worst_defect = 0
    worst_recip = 0.0
    for name, spec in roster():
        radon = name in ("euclidean", "hexagon")
        for t1, t2 in _sep_angles(rng, 1000, 2, 1e-2):
            x = _dir(t1) * rng.uniform(0.25, 4.0)
            y = _dir(t2) * rng.uniform(0.25, 4.0)
            alpha = benitez_alpha(spec, x, y)
            if not is_birkhoff(spec, x + y * alpha, x - y * alpha, 1e-8):
                worst_defect += 1
            if radon:
                recip = alpha * benitez_alpha(spec, y, -x)
                worst_recip = max(worst_recip, abs(recip - 1.0))
    ok = worst_defect == 0 and worst_recip <= 1e-7
    return CriterionResult(11, "benitez alpha", ok,
                           f"defining-relation failures {worst_defect} of 7000; "
                           f"max radon reciprocity error {worst_recip:.3g}")


def _d_oracle(spec: NormSpec, n_dirs: int = 2048, htol: float = 1e-6) -> float:
    best = math.inf
    for k in range(n_dirs):
        theta = math.pi * k / n_dirs
        x = spec.unit_point(theta)
        for phi in _iso_partners(spec, theta, htol):
            best = min(best, sine(spec, x, spec.unit_point(phi)).value)
    return best


def _criterion_12(seed: int) -> CriterionResult:
    specs = [("euclidean", euclidean()), ("lp-inf", lp(math.inf)),
             ("hexagon", regular_polygon(6))]
    worst_gap = 0.0
    details = []
    for name, spec in specs:
        rep = d_constant(spec, 1024)
        oracle = _d_oracle(spec)
        gap = abs(rep.value - oracle)
        worst_gap = max(worst_gap, gap)
        details.append(f"{name} {rep.value:.6g} (oracle {oracle:.6g})")
        if name == "euclidean":
            euc_err = abs(rep.value - 1.0)
    ok = worst_gap <= 2e-3 and euc_err <= 1e-9
    return CriterionResult(12, "isosceles orthogonality gap D", ok,
                           f"max |D - oracle| = {worst_gap:.3g}; "
                           + "; ".join(details))


_CRITERIA = {1: _criterion_1, 2: _criterion_2, 3: _criterion_3,
             4: _criterion_4, 5: _criterion_5, 6: _criterion_6,
             7: _criterion_7, 8: _criterion_8, 9: _criterion_9,
             10: _criterion_10, 11: _criterion_11, 12: _criterion_12}


def run_criterion(index: int, seed: int = 0) -> CriterionResult:
    if index not in _CRITERIA:
        raise ValueError(f"criterion index must be 1..12, got {index}")
    return _CRITERIA[index](seed)


def run_all(rows: tuple[int, ...] | None = None,
            seed: int = 0) -> list[CriterionResult]:
    indices = sorted(set(rows)) if rows else list(range(1, 13))
    return [run_criterion(i, seed) for i in indices]
