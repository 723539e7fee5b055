"""Geometric constants of a normed plane built from the generalized sine.

c_E measures how far s(z,x)^2 + s(z,y)^2 can swing over conjugate pairs
(0 in the Euclidean plane, at most 3/2); c_R is the worst asymmetry
|s(x,y) - s(y,x)| (0 exactly on Radon planes, at most 1/2); D is the
smallest sine an isosceles-orthogonal pair can have.

All searches are grid scans with local derivative-free refinement, and
every refinement only moves the report toward the true optimum: maxima
never decrease, minima never increase. Reductions run in index order, so
reports are deterministic.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .optimize import golden_min, pattern_search_min
from .orthogonality import ConjugatePair, conjugate_pairs, _dir_angle, _mutual
from .plane import NormSpec, Vec2, symplectic
from .sine import sine

# Rays used to fill the inside of a degenerate conjugate cone.
CONE_RAYS = 17


@dataclass(frozen=True, slots=True)
class ConstantReport:
    """A computed constant with the vectors that achieve it."""

    name: str
    value: float
    witness: tuple[Vec2, ...]
    grid: int
    refined: bool


def _theta_grid(spec: NormSpec, grid: int) -> list[float]:
    ts = {math.pi * k / grid for k in range(grid)}
    ts.update(a % math.pi for a in spec.special_angles())
    return sorted(ts)


# ---------------------------------------------------------------------------
# c_E
# ---------------------------------------------------------------------------


def c_e_pair(spec: NormSpec, pair: ConjugatePair | tuple, grid: int = 1024) -> ConstantReport:
    """sup - inf of s(z,x)^2 + s(z,y)^2 over unit z, for one conjugate pair."""
    if grid < 256:
        raise ValueError("c_e_pair needs grid >= 256")
    if isinstance(pair, ConjugatePair):
        x, y = pair.x, pair.y
    else:
        x, y = pair
    ax = spec.antinorm_mag(x)
    ay = spec.antinorm_mag(y)

    def g_at(theta: float) -> float:
        zx, zy = spec.unit_xy(theta)
        sx = abs(zx * x.y - zy * x.x) / ax
        sy = abs(zx * y.y - zy * y.x) / ay
        return sx * sx + sy * sy

    thetas = _theta_grid(spec, grid)
    vals = [g_at(t) for t in thetas]
    i_hi = max(range(len(vals)), key=vals.__getitem__)
    i_lo = min(range(len(vals)), key=vals.__getitem__)
    step = math.pi / grid

    th_hi, neg_hi = golden_min(lambda t: -g_at(t),
                               thetas[i_hi] - step, thetas[i_hi] + step)
    hi = max(vals[i_hi], -neg_hi)
    if -neg_hi > vals[i_hi]:
        best_hi = th_hi
    else:
        best_hi = thetas[i_hi]

    th_lo, lo_ref = golden_min(g_at, thetas[i_lo] - step, thetas[i_lo] + step)
    lo = min(vals[i_lo], lo_ref)
    best_lo = th_lo if lo_ref < vals[i_lo] else thetas[i_lo]

    witness = (spec.unit_point(best_hi), spec.unit_point(best_lo))
    return ConstantReport("c_E_pair", hi - lo, witness, grid, True)


def _cone_fill(spec: NormSpec, pairs: list[ConjugatePair]) -> list[tuple[Vec2, Vec2]]:
    """Interior rays for anchors that own more than one conjugate partner."""
    groups: dict[int, tuple[Vec2, list[float]]] = {}

    def anchor_key(v: Vec2) -> int:
        return round((_dir_angle(v) % math.pi) / 1e-9)

    for p in pairs:
        if not p.degenerate:
            continue
        for a, b in ((p.x, p.y), (p.y, p.x)):
            k = anchor_key(a)
            groups.setdefault(k, (a, []))[1].append(_dir_angle(b) % math.pi)

    extra: list[tuple[Vec2, Vec2]] = []
    for anchor, angs in groups.values():
        if len(angs) < 2:
            continue
        best = None
        for i in range(len(angs)):
            for j in range(i + 1, len(angs)):
                a, b = angs[i], angs[j]
                width = (b - a) % math.pi
                lo, w = (a, width) if width <= math.pi - width else (b, math.pi - width)
                if w <= 1e-9:
                    continue
                if best is None or w > best[1]:
                    best = (lo, w)
        if best is None:
            continue
        lo, w = best
        for k in range(1, CONE_RAYS - 1):
            ray = spec.unit_point(lo + w * k / (CONE_RAYS - 1))
            if _mutual(spec, anchor, ray):
                extra.append((anchor, ray))
    return extra


def c_e(spec: NormSpec, grid: int = 1024) -> ConstantReport:
    """Maximum of c_e_pair over every conjugate pair, cones included."""
    if grid < 256:
        raise ValueError("c_e needs grid >= 256")
    pairs = conjugate_pairs(spec)
    cands: list[tuple[Vec2, Vec2]] = [(p.x, p.y) for p in pairs]
    cands.extend(_cone_fill(spec, pairs))
    best_val = -1.0
    best_pair = cands[0]
    for x, y in cands:
        rep = c_e_pair(spec, (x, y), grid)
        if rep.value > best_val:
            best_val = rep.value
            best_pair = (x, y)
    return ConstantReport("c_E", best_val, best_pair, grid, True)


# ---------------------------------------------------------------------------
# c_R
# ---------------------------------------------------------------------------


def _asym_objective(spec: NormSpec, antinorm_plane: bool):
    """Pointwise |s(x,y) - s(y,x)| (or its antinorm-plane twin) on directions."""
    if not antinorm_plane:
        def f(t1: float, t2: float) -> float:
            x1, y1 = spec.unit_xy(t1)
            x2, y2 = spec.unit_xy(t2)
            cr = abs(x1 * y2 - y1 * x2)
            return cr * abs(1.0 / spec.antinorm_mag_xy(x2, y2)
                            - 1.0 / spec.antinorm_mag_xy(x1, y1))
    else:
        def f(t1: float, t2: float) -> float:
            c1, s1 = math.cos(t1), math.sin(t1)
            c2, s2 = math.cos(t2), math.sin(t2)
            a1 = spec.antinorm_mag_xy(c1, s1)
            a2 = spec.antinorm_mag_xy(c2, s2)
            x1, y1 = c1 / a1, s1 / a1
            x2, y2 = c2 / a2, s2 / a2
            cr = abs(x1 * y2 - y1 * x2)
            return cr * abs(1.0 / spec.gauge_xy(x2, y2) - 1.0 / spec.gauge_xy(x1, y1))
    return f


def c_r(spec: NormSpec, grid: int = 512, antinorm_plane: bool = False) -> ConstantReport:
    """sup |s(x,y) - s(y,x)| over direction pairs.

    On unit vectors the difference reduces to |[x,y]| * |1/||y||_a - 1/||x||_a|,
    so a double grid is two outer products; the best cell is polished by
    pattern search. antinorm_plane swaps the roles of gauge and antinorm,
    which must not change the value.
    """
    if grid < 256:
        raise ValueError("c_r needs grid >= 256")
    thetas = np.array(_theta_grid(spec, grid))
    if not antinorm_plane:
        pts = spec.unit_points(thetas)
        weights = 1.0 / np.array([spec.antinorm_mag_xy(px, py) for px, py in pts])
    else:
        raw = np.stack([np.cos(thetas), np.sin(thetas)], axis=-1)
        anti = np.array([spec.antinorm_mag_xy(px, py) for px, py in raw])
        pts = raw / anti[:, None]
        weights = 1.0 / spec.gauge_many(pts)
    cross = np.abs(pts[:, 0][:, None] * pts[:, 1][None, :]
                   - pts[:, 1][:, None] * pts[:, 0][None, :])
    diff = np.abs(weights[None, :] - weights[:, None])
    table = cross * diff
    i, j = np.unravel_index(int(table.argmax()), table.shape)
    coarse = float(table[i, j])

    f = _asym_objective(spec, antinorm_plane)
    (t1, t2), neg = pattern_search_min(lambda a, b: -f(a, b),
                                       (float(thetas[i]), float(thetas[j])),
                                       step=math.pi / grid)
    value = max(coarse, -neg)
    if -neg >= coarse:
        w1, w2 = t1, t2
    else:
        w1, w2 = float(thetas[i]), float(thetas[j])
    witness = (spec.unit_point(w1), spec.unit_point(w2))
    return ConstantReport("c_R", value, witness, grid, True)


# ---------------------------------------------------------------------------
# D
# ---------------------------------------------------------------------------

_PARTNER_SWEEP = 64


def _isosceles_partners(spec: NormSpec, theta: float) -> list[float]:
    """Angles phi with x(theta) isosceles-orthogonal to y(phi), by sign
    changes of ||x+y|| - ||x-y|| over a half turn."""
    x = spec.unit_point(theta)
    phis = theta + math.pi * (np.arange(_PARTNER_SWEEP) + 0.5) / _PARTNER_SWEEP
    ys = spec.unit_points(phis)
    h = (spec.gauge_many(ys + np.array([x.x, x.y]))
         - spec.gauge_many(np.array([x.x, x.y]) - ys))

    def h_at(phi: float) -> float:
        yx, yy = spec.unit_xy(phi)
        return (spec.gauge_xy(x.x + yx, x.y + yy)
                - spec.gauge_xy(x.x - yx, x.y - yy))

    # The sweep starts just inside y ~ x (h > 0) and ends near y ~ -x (h < 0).
    grid_phis = [theta] + list(phis) + [theta + math.pi]
    grid_h = [2.0] + list(h) + [-2.0]
    roots = []
    for k in range(len(grid_h) - 1):
        a, fa = grid_phis[k], grid_h[k]
        b, fb = grid_phis[k + 1], grid_h[k + 1]
        if fa == 0.0:
            roots.append(a)
            continue
        if fa * fb >= 0.0:
            continue
        for _ in range(64):
            mid = 0.5 * (a + b)
            fm = h_at(mid)
            if fm == 0.0 or b - a <= 1e-13:
                break
            if (fm > 0.0) == (fa > 0.0):
                a, fa = mid, fm
            else:
                b = mid
        roots.append(0.5 * (a + b))
    return roots


def _min_sine_at(spec: NormSpec, theta: float) -> tuple[float, float]:
    """Smallest sine over the isosceles partners of direction theta."""
    best = (math.inf, theta)
    x = spec.unit_point(theta)
    for phi in _isosceles_partners(spec, theta):
        s = sine(spec, x, spec.unit_point(phi)).value
        if s < best[0]:
            best = (s, phi)
    return best


def d_constant(spec: NormSpec, grid: int = 1024) -> ConstantReport:
    """inf s(x, y) over isosceles-orthogonal unit pairs."""
    if grid < 256:
        raise ValueError("d_constant needs grid >= 256")
    best_v = math.inf
    best_theta = 0.0
    best_phi = 0.0
    for theta in _theta_grid(spec, grid):
        v, phi = _min_sine_at(spec, theta)
        if v < best_v:
            best_v, best_theta, best_phi = v, theta, phi

    def d_at(theta: float) -> float:
        return _min_sine_at(spec, theta)[0]

    (t_ref,), v_ref = pattern_search_min(d_at, (best_theta,), step=math.pi / grid)
    refined = min(best_v, v_ref)
    if v_ref < best_v:
        best_theta = t_ref
        best_phi = _min_sine_at(spec, t_ref)[1]
    witness = (spec.unit_point(best_theta), spec.unit_point(best_phi))
    return ConstantReport("D", refined, witness, grid, True)
