"""Orthogonality relations of a normed plane.

Birkhoff orthogonality is a minimization statement: x is Birkhoff
orthogonal to y when ||x + t*y|| >= ||x|| for every t, i.e. the line
through x with direction y supports the ball of radius ||x||. The defect
of that minimization doubles as the generalized sine once the inputs are
normalized. Isosceles and Roberts orthogonality are norm equalities.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .optimize import golden_min
from .plane import (
    TWO_PI,
    NormSpec,
    Vec2,
    VecLike,
    as_vec,
    dot,
    is_parallel,
    symplectic,
    _hyp,
)

# Angular slack when classifying directions against polygon support cones.
_ANG_EPS = 1e-9

# Pairs of conjugate directions closer than this (radians, per member,
# directions taken mod pi) are considered the same pair.
DEDUP_ANGLE = 1e-6


@dataclass(frozen=True, slots=True)
class BirkhoffDefect:
    """Minimizer and minimum of t -> ||x + t*y||."""

    t_star: float
    min_value: float


@dataclass(frozen=True, slots=True)
class ConjugatePair:
    """Unit directions orthogonal to each other in the Birkhoff sense,
    both ways round. degenerate marks pairs living on polygon vertices or
    edge-parallel flats, where a whole cone of partners may exist."""

    x: Vec2
    y: Vec2
    degenerate: bool = False


def _zero_check(*vecs: Vec2) -> None:
    for v in vecs:
        if v.x == 0.0 and v.y == 0.0:
            raise ValueError("direction-taking operation got the zero vector")


def _polygon_breakpoints(verts: tuple[Vec2, ...], x: Vec2, y: Vec2) -> list[tuple[float, float]]:
    """Breakpoints of the piecewise-linear map t -> gauge(x + t*y).

    Kinks happen exactly when x + t*y crosses a vertex ray; there the
    point is c * vertex with gauge |c|, since polygon vertices have gauge 1.
    Returns (t, value) pairs.
    """
    out = []
    hy = _hyp(y)
    for v in verts:
        dy = symplectic(y, v)
        if abs(dy) <= 1e-15 * hy * _hyp(v):
            continue
        t = -symplectic(x, v) / dy
        wx = x.x + t * y.x
        wy = x.y + t * y.y
        c = (wx * v.x + wy * v.y) / (v.x * v.x + v.y * v.y)
        out.append((t, abs(c)))
    return out


def birkhoff_defect(spec: NormSpec, x: VecLike, y: VecLike) -> BirkhoffDefect:
    """Minimize ||x + t*y|| over all real t.

    Exact for polygonal balls (the minimum of a convex piecewise-linear
    function sits on a breakpoint; flat stretches report their midpoint),
    closed-form for the Euclidean plane, golden-section otherwise.
    Parallel inputs are fine and give min_value 0 at the cancelling t.
    """
    x = as_vec(x)
    y = as_vec(y)
    _zero_check(x, y)

    if is_parallel(x, y, 1e-15):
        t = -dot(x, y) / dot(y, y)
        return BirkhoffDefect(t, spec.gauge(x + t * y))

    verts = spec.polygon_vertices()
    if verts is not None:
        cands = _polygon_breakpoints(verts, x, y)
        if cands:
            m = min(val for _, val in cands)
            tol = 1e-12 * (1.0 + m)
            tied = [t for t, val in cands if val <= m + tol]
            # Convexity: equal minima bound a flat stretch; report its middle.
            return BirkhoffDefect(0.5 * (min(tied) + max(tied)), m)

    if spec.kind == "euclidean":
        t = -dot(x, y) / dot(y, y)
        return BirkhoffDefect(t, spec.gauge(x + t * y))

    gx, gy = spec.gauge(x), spec.gauge(y)
    reach = 2.0 * gx / gy + 1.0

    def g(t: float) -> float:
        return spec.gauge_xy(x.x + t * y.x, x.y + t * y.y)

    t_star, m = golden_min(g, -reach, reach, tol=1e-12 * (1.0 + reach))
    return BirkhoffDefect(t_star, m)


def is_birkhoff(spec: NormSpec, x: VecLike, y: VecLike, tol: float = 1e-9) -> bool:
    """||x + t*y|| >= ||x|| for all t, tested on gauge-normalized inputs."""
    x = as_vec(x)
    y = as_vec(y)
    _zero_check(x, y)
    xn = x / spec.gauge(x)
    yn = y / spec.gauge(y)
    return birkhoff_defect(spec, xn, yn).min_value >= 1.0 - tol


def is_isosceles(spec: NormSpec, x: VecLike, y: VecLike, tol: float = 1e-9) -> bool:
    """||x + y|| == ||x - y|| within tol."""
    x = as_vec(x)
    y = as_vec(y)
    _zero_check(x, y)
    return abs(spec.gauge(x + y) - spec.gauge(x - y)) <= tol


def is_roberts(spec: NormSpec, x: VecLike, y: VecLike, tol: float = 1e-9) -> bool:
    """||x + t*y|| == ||x - t*y|| for all t, within tol.

    Checked on a log-spaced grid plus t = 1; for polygonal balls the
    kink parameters of both sides (and the stretches between and beyond
    them) are added, which makes the piecewise-linear comparison exact.
    """
    x = as_vec(x)
    y = as_vec(y)
    _zero_check(x, y)
    ts = {1.0}
    for k in range(64):
        ts.add(10.0 ** (-3.0 + 6.0 * k / 63.0))
    verts = spec.polygon_vertices()
    if verts is not None:
        bps = sorted({abs(t) for t, _ in _polygon_breakpoints(verts, x, y) if t != 0.0})
        ts.update(bps)
        for a, b in zip(bps, bps[1:]):
            ts.add(0.5 * (a + b))
        if bps:
            ts.add(2.0 * bps[-1] + 1.0)
    for t in ts:
        d = spec.gauge(x + t * y) - spec.gauge(x - t * y)
        if abs(d) > tol:
            return False
    return True


# ---------------------------------------------------------------------------
# conjugate directions
# ---------------------------------------------------------------------------


def _dir_angle(v: Vec2) -> float:
    return math.atan2(v.y, v.x) % TWO_PI


def _ccw_span(a: float, b: float) -> float:
    return (b - a) % TWO_PI


def _pair_key(x: Vec2, y: Vec2) -> tuple[float, float]:
    def fold(v: Vec2) -> float:
        a = _dir_angle(v) % math.pi
        # an angle a hair under pi is the same direction class as 0
        return 0.0 if a >= math.pi - DEDUP_ANGLE else a

    a, b = fold(x), fold(y)
    return (a, b) if a <= b else (b, a)


def _dedupe(pairs: list[ConjugatePair]) -> list[ConjugatePair]:
    kept: list[tuple[tuple[float, float], ConjugatePair]] = []

    def close(a: float, b: float) -> bool:
        d = abs(a - b) % math.pi
        return min(d, math.pi - d) <= DEDUP_ANGLE

    for p in sorted(pairs, key=lambda p: _pair_key(p.x, p.y)):
        k = _pair_key(p.x, p.y)
        if any(close(k[0], k0) and close(k[1], k1) for (k0, k1), _ in kept):
            continue
        kept.append((k, p))
    return [p for _, p in kept]


def _mutual(spec: NormSpec, x: Vec2, y: Vec2, tol: float = 1e-7) -> bool:
    xn = x / spec.gauge(x)
    yn = y / spec.gauge(y)
    return (birkhoff_defect(spec, xn, yn).min_value >= 1.0 - tol
            and birkhoff_defect(spec, yn, xn).min_value >= 1.0 - tol)


def _polygon_conjugates(spec: NormSpec) -> list[ConjugatePair]:
    verts = spec.polygon_vertices()
    assert verts is not None
    n = len(verts)
    vang = [_dir_angle(v) for v in verts]
    edges = [verts[(i + 1) % n] - verts[i] for i in range(n)]
    eang = [_dir_angle(e) for e in edges]
    # Supporting line directions at vertex i sweep CCW from the incoming
    # edge direction to the outgoing one.
    cones = [(eang[i - 1], _ccw_span(eang[i - 1], eang[i])) for i in range(n)]

    def in_cone(i: int, ang: float) -> bool:
        start, width = cones[i]
        for a in (ang, ang + math.pi):
            if (a - start) % TWO_PI <= width + _ANG_EPS:
                return True
        return False

    def distinct_dirs(a: float, b: float) -> bool:
        d = abs(a - b) % math.pi
        return min(d, math.pi - d) > _ANG_EPS

    found: list[tuple[Vec2, Vec2]] = []

    # vertex / vertex
    for i in range(n):
        for j in range(n):
            if i == j or not distinct_dirs(vang[i], vang[j]):
                continue
            if in_cone(i, vang[j]) and in_cone(j, vang[i]):
                found.append((verts[i], verts[j]))

    # vertex / parallel edge: every point of an edge parallel to a vertex
    # direction is Birkhoff orthogonal to that vertex, so the conjugates
    # form an arc; keep its extreme rays.
    for i in range(n):
        vi = verts[i]
        for m in range(n):
            if not is_parallel(edges[m], vi, 1e-12):
                continue
            arc_start = vang[m]
            arc_width = _ccw_span(vang[m], vang[(m + 1) % n])
            cand_angles: list[float] = []
            for a in (arc_start, arc_start + arc_width):
                if in_cone(i, a):
                    cand_angles.append(a % TWO_PI)
            c_start, c_width = cones[i]
            for b in (c_start, c_start + c_width):
                for shift in (0.0, math.pi, -math.pi):
                    a = (b + shift) % TWO_PI
                    if (a - arc_start) % TWO_PI <= arc_width + _ANG_EPS:
                        cand_angles.append(a)
            if not cand_angles:
                continue
            pos = sorted(cand_angles, key=lambda a: (a - arc_start) % TWO_PI)
            for a in (pos[0], pos[-1]):
                found.append((vi, spec.unit_point(a)))

    # edge / edge: both members are boundary points in the direction of the
    # other's edge (flat Birkhoff minima both ways).
    def on_edge(p: Vec2, i: int) -> Vec2 | None:
        for q in (p, -p):
            a, b = verts[i], verts[(i + 1) % n]
            e = b - a
            s = dot(q - a, e) / dot(e, e)
            if -1e-9 <= s <= 1.0 + 1e-9 and abs(symplectic(q - a, e)) <= 1e-9:
                return q
        return None

    for i in range(n):
        for m in range(n):
            if i == m:
                continue
            xq = on_edge(spec.unit_point(eang[m]), i)
            yq = on_edge(spec.unit_point(eang[i]), m)
            if xq is not None and yq is not None and distinct_dirs(_dir_angle(xq), _dir_angle(yq)):
                found.append((xq, yq))

    pairs = [ConjugatePair(x, y, degenerate=True) for x, y in found
             if _mutual(spec, x, y)]
    return _dedupe(pairs)


def _scan_conjugates(spec: NormSpec, n_scan: int) -> list[ConjugatePair]:
    def partner(theta: float) -> tuple[Vec2, Vec2]:
        x = spec.unit_point(theta)
        w = spec.antinorm(x).witness  # w is Birkhoff orthogonal to x
        return x, w

    # Symmetric gauge difference around t = 0: zero exactly when the defect
    # minimizes at the anchor, and far less noisy than locating t_star of a
    # flat golden-section minimum.
    probe = 1e-6

    def resid(theta: float) -> float:
        x, w = partner(theta)
        return (spec.gauge_xy(x.x + probe * w.x, x.y + probe * w.y)
                - spec.gauge_xy(x.x - probe * w.x, x.y - probe * w.y))

    step = math.pi / n_scan
    rs = [resid(k * step) for k in range(n_scan)]
    hits: list[float] = []
    for k in range(n_scan):
        r0, r1 = rs[k], rs[(k + 1) % n_scan]
        if abs(r0) <= 1e-13:
            hits.append(k * step)
        elif r0 * r1 < 0.0:
            lo, hi = k * step, (k + 1) * step
            flo = r0
            for _ in range(80):
                mid = 0.5 * (lo + hi)
                fm = resid(mid)
                if fm == 0.0 or hi - lo <= 1e-12:
                    break
                if (fm > 0.0) == (flo > 0.0):
                    lo, flo = mid, fm
                else:
                    hi = mid
            hits.append(0.5 * (lo + hi))
    pairs = []
    for theta in hits:
        x, w = partner(theta)
        if _mutual(spec, x, w):
            pairs.append(ConjugatePair(x, w, degenerate=False))
    return _dedupe(pairs)


def conjugate_pairs(spec: NormSpec, n_scan: int = 64) -> list[ConjugatePair]:
    """All mutually Birkhoff-orthogonal unit direction pairs found.

    Polygonal balls are enumerated exactly from vertex support cones and
    edge parallels (n_scan is only validated there); smooth balls are
    scanned at n_scan directions with sign-change refinement on the
    reverse defect. At least one pair always exists.
    """
    if n_scan < 64:
        raise ValueError("conjugate_pairs needs n_scan >= 64")
    if spec.polygon_vertices() is not None:
        pairs = _polygon_conjugates(spec)
    else:
        pairs = _scan_conjugates(spec, n_scan)
    if not pairs:
        raise RuntimeError("no conjugate pair found; this contradicts the "
                           "existence guarantee and signals an accuracy bug")
    return pairs


# ---------------------------------------------------------------------------
# Benitez functional and orthogonal diagonals
# ---------------------------------------------------------------------------


def benitez_alpha(spec: NormSpec, x: VecLike, y: VecLike) -> float:
    """The unique a > 0 with (x + a*y) Birkhoff orthogonal to (x - a*y).

    Found by sign bisection (geometric midpoints) on the minimizer of
    t -> ||(x + a*y) + t(x - a*y)||, which runs from about -1 for tiny a
    to about +1 for huge a. Collinear inputs are rejected.
    """
    x = as_vec(x)
    y = as_vec(y)
    _zero_check(x, y)
    if is_parallel(x, y):
        raise ValueError("benitez_alpha needs linearly independent inputs")

    def h(a: float) -> float:
        return birkhoff_defect(spec, x + a * y, x - a * y).t_star

    lo, hi = 1e-9, 1e9
    hlo, hhi = h(lo), h(hi)
    grow = 0
    while (hlo > 0.0) == (hhi > 0.0) and grow < 4:
        lo /= 1e3
        hi *= 1e3
        hlo, hhi = h(lo), h(hi)
        grow += 1
    if hlo == 0.0:
        return lo
    if hhi == 0.0:
        return hi
    if (hlo > 0.0) == (hhi > 0.0):
        raise RuntimeError("benitez_alpha could not bracket a sign change")
    for _ in range(200):
        if hi / lo - 1.0 <= 1e-10:
            break
        mid = math.sqrt(lo * hi)
        hm = h(mid)
        if hm == 0.0:
            return mid
        if (hm > 0.0) == (hlo > 0.0):
            lo, hlo = mid, hm
        else:
            hi = mid
    return math.sqrt(lo * hi)


def find_orthogonal_diagonals(spec: NormSpec, v: VecLike | None = None,
                              w: VecLike | None = None) -> tuple[Vec2, Vec2]:
    """Unit x, y with (x + y) Birkhoff orthogonal to (x - y).

    Only guaranteed (and only attempted) on Radon planes: there the
    Benitez values at the ends of the blend below are reciprocal, so a
    value 1 sits in between; bisection finds it.
    """
    rep = spec.is_radon()
    if not rep.is_radon:
        raise ValueError("find_orthogonal_diagonals requires a Radon plane "
                         f"(ratio spread {rep.spread:.3g})")
    v = spec.unit_point(0.0) if v is None else as_vec(v)
    w = spec.unit_point(math.pi / 2.0) if w is None else as_vec(w)
    if is_parallel(v, w):
        raise ValueError("seed directions must be linearly independent")

    def blend(lam: float) -> tuple[Vec2, Vec2]:
        a = (1.0 - lam) * v + lam * w
        b = (1.0 - lam) * w - lam * v
        return a / spec.gauge(a), b / spec.gauge(b)

    def g(lam: float) -> float:
        a, b = blend(lam)
        return benitez_alpha(spec, a, b) - 1.0

    g0 = g(0.0)
    if abs(g0) <= 1e-12:
        return blend(0.0)
    g1 = g(1.0)
    if abs(g1) <= 1e-12:
        return blend(1.0)
    if (g0 > 0.0) == (g1 > 0.0):
        raise RuntimeError("reciprocal endpoints failed; the plane is not "
                           "Radon to working accuracy")
    lo, hi, flo = 0.0, 1.0, g0
    for _ in range(80):
        mid = 0.5 * (lo + hi)
        fm = g(mid)
        if abs(fm) <= 1e-12 or hi - lo <= 1e-12:
            lo = hi = mid
            break
        if (fm > 0.0) == (flo > 0.0):
            lo, flo = mid, fm
        else:
            hi = mid
    return blend(0.5 * (lo + hi))
