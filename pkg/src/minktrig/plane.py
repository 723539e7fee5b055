"""Two-dimensional normed (Minkowski) planes.

A plane is fixed by its unit ball: the Euclidean disc, an l_p ball, or a
centrally symmetric convex polygon. The gauge (Minkowski functional) of
that ball is the norm. The fixed area form [x, y] = x1*y2 - x2*y1 induces
the antinorm

    ||x||_a = sup { |[x, y]| : ||y|| = 1 },

whose constancy relative to the gauge along boundary directions is what
makes a plane a Radon plane.

All norm objects are immutable; evaluation never mutates shared state, so
instances may be shared freely across threads.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .optimize import golden_min

TWO_PI = 2.0 * math.pi

# Default sample count for the generic (sampled) antinorm fallback.
ANTINORM_FALLBACK_SAMPLES = 4096

# Relative cutoff below which two directions count as parallel.
PARALLEL_EPS = 1e-12


@dataclass(frozen=True, slots=True)
class Vec2:
    """A plane vector. Supports +, -, unary -, and scalar *."""

    x: float
    y: float

    def __add__(self, other: "Vec2") -> "Vec2":
        return Vec2(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "Vec2") -> "Vec2":
        return Vec2(self.x - other.x, self.y - other.y)

    def __neg__(self) -> "Vec2":
        return Vec2(-self.x, -self.y)

    def __mul__(self, s: float) -> "Vec2":
        return Vec2(self.x * s, self.y * s)

    __rmul__ = __mul__

    def __truediv__(self, s: float) -> "Vec2":
        return Vec2(self.x / s, self.y / s)

    def __iter__(self):
        yield self.x
        yield self.y

    def as_tuple(self) -> tuple[float, float]:
        return (self.x, self.y)


VecLike = Vec2 | Sequence[float]


def as_vec(v: VecLike) -> Vec2:
    """Coerce a Vec2 or any two-element sequence to Vec2."""
    if isinstance(v, Vec2):
        return v
    t = tuple(v)
    if len(t) != 2:
        raise ValueError(f"expected a 2-vector, got {v!r}")
    return Vec2(float(t[0]), float(t[1]))


def symplectic(a: VecLike, b: VecLike) -> float:
    """The fixed area form [a, b] = a1*b2 - a2*b1."""
    a = as_vec(a)
    b = as_vec(b)
    return a.x * b.y - a.y * b.x


def dot(a: VecLike, b: VecLike) -> float:
    a = as_vec(a)
    b = as_vec(b)
    return a.x * b.x + a.y * b.y


def _hyp(v: Vec2) -> float:
    return math.hypot(v.x, v.y)


def is_parallel(a: VecLike, b: VecLike, eps: float = PARALLEL_EPS) -> bool:
    """True when the directions of a and b coincide up to sign."""
    a = as_vec(a)
    b = as_vec(b)
    return abs(symplectic(a, b)) <= eps * _hyp(a) * _hyp(b)


@dataclass(frozen=True, slots=True)
class AntinormValue:
    """Antinorm magnitude together with a maximizing boundary direction.

    The witness z has gauge 1, attains |[x, z]| = value, and the line
    through z with direction x supports the unit ball at z.
    """

    value: float
    witness: Vec2


@dataclass(frozen=True, slots=True)
class RadonReport:
    """Result of sampling the antinorm/gauge ratio over boundary directions."""

    is_radon: bool
    lam: float
    spread: float


class NormSpec:
    """Base class for plane norms. Subclasses implement gauge_xy."""

    kind: str = "abstract"

    # -- gauge ---------------------------------------------------------

    def gauge_xy(self, x: float, y: float) -> float:
        raise NotImplementedError

    def gauge(self, v: VecLike) -> float:
        v = as_vec(v)
        return self.gauge_xy(v.x, v.y)

    def gauge_many(self, pts: np.ndarray) -> np.ndarray:
        """Vectorized gauge over an (..., 2) array of points."""
        pts = np.asarray(pts, dtype=float)
        flat = pts.reshape(-1, 2)
        out = np.array([self.gauge_xy(px, py) for px, py in flat])
        return out.reshape(pts.shape[:-1])

    # -- antinorm ------------------------------------------------------

    def antinorm_xy(self, x: float, y: float) -> tuple[float, float, float]:
        """Return (value, witness_x, witness_y).

        Generic fallback: sample |[v, u(theta)]| on a dense boundary grid
        and refine the best cell by golden-section search. Concrete kinds
        override this with exact formulas.
        """
        n = ANTINORM_FALLBACK_SAMPLES

        def neg_mag(theta: float) -> float:
            ux, uy = self.unit_xy(theta)
            return -abs(x * uy - y * ux)

        best_k = min(range(n), key=lambda k: neg_mag(TWO_PI * k / n))
        step = TWO_PI / n
        t0 = TWO_PI * best_k / n
        theta, neg = golden_min(neg_mag, t0 - step, t0 + step, tol=1e-13)
        wx, wy = self.unit_xy(theta)
        if x * wy - y * wx < 0.0:
            wx, wy = -wx, -wy
        return -neg, wx, wy

    def antinorm(self, v: VecLike) -> AntinormValue:
        v = as_vec(v)
        if v.x == 0.0 and v.y == 0.0:
            raise ValueError("antinorm of the zero vector is undefined")
        value, wx, wy = self.antinorm_xy(v.x, v.y)
        return AntinormValue(value, Vec2(wx, wy))

    def antinorm_mag_xy(self, x: float, y: float) -> float:
        return self.antinorm_xy(x, y)[0]

    def antinorm_mag(self, v: VecLike) -> float:
        v = as_vec(v)
        return self.antinorm_mag_xy(v.x, v.y)

    # -- boundary ------------------------------------------------------

    def unit_xy(self, theta: float) -> tuple[float, float]:
        c, s = math.cos(theta), math.sin(theta)
        g = self.gauge_xy(c, s)
        return c / g, s / g

    def unit_point(self, theta: float) -> Vec2:
        """Boundary point of the unit ball in direction theta."""
        ux, uy = self.unit_xy(theta)
        return Vec2(ux, uy)

    def unit_points(self, thetas: np.ndarray) -> np.ndarray:
        """Vectorized unit_point: returns an (n, 2) array."""
        thetas = np.asarray(thetas, dtype=float)
        raw = np.stack([np.cos(thetas), np.sin(thetas)], axis=-1)
        g = self.gauge_many(raw)
        return raw / g[..., None]

    def anticircle_point(self, theta: float) -> Vec2:
        """Point with antinorm 1 in direction theta."""
        c, s = math.cos(theta), math.sin(theta)
        a = self.antinorm_mag_xy(c, s)
        return Vec2(c / a, s / a)

    # -- structure hooks ------------------------------------------------

    def polygon_vertices(self) -> tuple[Vec2, ...] | None:
        """Full CCW vertex cycle when the unit ball is a polygon, else None."""
        return None

    def special_angles(self) -> tuple[float, ...]:
        """Boundary directions where polygonal data has kinks.

        Covers vertices, edge midpoints, and edge directions; exact
        extremes of piecewise-linear boundary quantities live here.
        """
        verts = self.polygon_vertices()
        if verts is None:
            return ()
        n = len(verts)
        angles: list[float] = []
        for i, v in enumerate(verts):
            w = verts[(i + 1) % n]
            angles.append(math.atan2(v.y, v.x) % TWO_PI)
            mid = Vec2(0.5 * (v.x + w.x), 0.5 * (v.y + w.y))
            angles.append(math.atan2(mid.y, mid.x) % TWO_PI)
            angles.append(math.atan2(w.y - v.y, w.x - v.x) % TWO_PI)
        return tuple(sorted(set(angles)))

    # -- derived reports -------------------------------------------------

    def is_radon(self, n_samples: int = 256, tol: float = 1e-9) -> RadonReport:
        """Sample antinorm/gauge over boundary directions and test constancy."""
        if n_samples < 8:
            raise ValueError("is_radon needs n_samples >= 8")
        thetas = [math.pi * k / n_samples for k in range(n_samples)]
        thetas += [a % math.pi for a in self.special_angles()]
        lo = math.inf
        hi = -math.inf
        for t in thetas:
            c, s = math.cos(t), math.sin(t)
            r = self.antinorm_mag_xy(c, s) / self.gauge_xy(c, s)
            if r < lo:
                lo = r
            if r > hi:
                hi = r
        spread = hi - lo
        return RadonReport(spread <= tol, 0.5 * (lo + hi), spread)

    def emit_circle(self, which: str = "unit", n: int = 360) -> list[Vec2]:
        """n boundary points of the unit circle or the anticircle, CCW."""
        if n < 3:
            raise ValueError("emit_circle needs n >= 3")
        if which not in ("unit", "anticircle"):
            raise ValueError(f"unknown circle {which!r}; use 'unit' or 'anticircle'")
        pts = []
        for k in range(n):
            theta = TWO_PI * k / n
            if which == "unit":
                pts.append(self.unit_point(theta))
            else:
                pts.append(self.anticircle_point(theta))
        return pts


@dataclass(frozen=True, slots=True)
class EuclideanNorm(NormSpec):
    """The round plane; gauge and antinorm coincide."""

    kind: str = "euclidean"

    def gauge_xy(self, x: float, y: float) -> float:
        return math.hypot(x, y)

    def gauge_many(self, pts: np.ndarray) -> np.ndarray:
        pts = np.asarray(pts, dtype=float)
        return np.hypot(pts[..., 0], pts[..., 1])

    def antinorm_xy(self, x: float, y: float) -> tuple[float, float, float]:
        n = math.hypot(x, y)
        return n, -y / n, x / n

    def antinorm_mag_xy(self, x: float, y: float) -> float:
        return math.hypot(x, y)


def _p_gauge(p: float, x: float, y: float) -> float:
    """Scalar l_p length, stable for large p via max-factoring."""
    ax, ay = abs(x), abs(y)
    if math.isinf(p):
        return ax if ax > ay else ay
    if p == 1.0:
        return ax + ay
    if p == 2.0:
        return math.hypot(x, y)
    m = ax if ax > ay else ay
    if m == 0.0:
        return 0.0
    return m * ((ax / m) ** p + (ay / m) ** p) ** (1.0 / p)


@dataclass(frozen=True, slots=True)
class LpNorm(NormSpec):
    """The l_p plane for 1 <= p <= inf; the antinorm is the dual norm of the
    quarter-turned vector."""

    p: float
    kind: str = "lp"

    def __post_init__(self) -> None:
        if not (self.p >= 1.0):
            raise ValueError(f"p must be >= 1, got {self.p}")

    def gauge_xy(self, x: float, y: float) -> float:
        return _p_gauge(self.p, x, y)

    def gauge_many(self, pts: np.ndarray) -> np.ndarray:
        pts = np.abs(np.asarray(pts, dtype=float))
        ax, ay = pts[..., 0], pts[..., 1]
        if math.isinf(self.p):
            return np.maximum(ax, ay)
        if self.p == 1.0:
            return ax + ay
        if self.p == 2.0:
            return np.hypot(ax, ay)
        m = np.maximum(ax, ay)
        safe = np.where(m == 0.0, 1.0, m)
        out = safe * ((ax / safe) ** self.p + (ay / safe) ** self.p) ** (1.0 / self.p)
        return np.where(m == 0.0, 0.0, out)

    def _dual_p(self) -> float:
        if math.isinf(self.p):
            return 1.0
        if self.p == 1.0:
            return math.inf
        return self.p / (self.p - 1.0)

    def antinorm_xy(self, x: float, y: float) -> tuple[float, float, float]:
        # [v, u] = <Jv, u> with Jv = (-y, x); the supremum over the unit
        # ball is the dual norm, attained at the Hoelder equality point.
        ux, uy = -y, x
        q = self._dual_p()
        if math.isinf(q):
            # p = 1: maximize over the cross-polytope vertices.
            if abs(ux) >= abs(uy):
                val = abs(ux)
                wx, wy = math.copysign(1.0, ux), 0.0
            else:
                val = abs(uy)
                wx, wy = 0.0, math.copysign(1.0, uy)
            return val, wx, wy
        if q == 1.0:
            # p = inf: the whole square face; use its midpoint-free corner.
            val = abs(ux) + abs(uy)
            wx = math.copysign(1.0, ux) if ux != 0.0 else 0.0
            wy = math.copysign(1.0, uy) if uy != 0.0 else 0.0
            return val, wx, wy
        val = _p_gauge(q, ux, uy)
        wx = math.copysign(abs(ux) ** (q - 1.0), ux) / val ** (q - 1.0)
        wy = math.copysign(abs(uy) ** (q - 1.0), uy) / val ** (q - 1.0)
        return val, wx, wy

    def antinorm_mag_xy(self, x: float, y: float) -> float:
        return _p_gauge(self._dual_p(), -y, x)

    def polygon_vertices(self) -> tuple[Vec2, ...] | None:
        if math.isinf(self.p):
            return (Vec2(1, 1), Vec2(-1, 1), Vec2(-1, -1), Vec2(1, -1))
        if self.p == 1.0:
            return (Vec2(1, 0), Vec2(0, 1), Vec2(-1, 0), Vec2(0, -1))
        return None


def _canonical_polygon(half_vertices: Iterable[VecLike]) -> tuple[Vec2, ...]:
    pts = [as_vec(p) for p in half_vertices]
    if len(pts) < 2:
        raise ValueError("polygon needs at least 2 half vertices")
    full = pts + [-p for p in pts]
    scale = max(max(abs(p.x), abs(p.y)) for p in full)
    if scale == 0.0:
        raise ValueError("polygon vertices are all zero")
    eps = 1e-12 * scale * scale

    # Merge consecutive collinear (or duplicate) vertices; reject reflex turns.
    changed = True
    while changed:
        changed = False
        m = len(full)
        if m < 3:
            break
        for i in range(m):
            a = full[(i - 1) % m]
            b = full[i]
            c = full[(i + 1) % m]
            turn = symplectic(b - a, c - b)
            if turn < -eps:
                raise ValueError("half vertices do not describe a convex "
                                 "counterclockwise polygon")
            if abs(turn) <= eps:
                del full[i]
                changed = True
                break

    m = len(full)
    if m < 4 or m % 2 != 0:
        raise ValueError("polygon degenerates to fewer than 2 distinct "
                         "half vertices")
    for i in range(m // 2):
        d = full[i] + full[i + m // 2]
        if math.hypot(d.x, d.y) > 1e-9 * scale:
            raise ValueError("half vertices must cover exactly a half turn "
                             "(mirror symmetry through the origin failed)")
    for i in range(m):
        if symplectic(full[i], full[(i + 1) % m]) <= eps:
            raise ValueError("origin is not strictly inside the polygon")
    return tuple(full)


class PolygonNorm(NormSpec):
    """Gauge of a centrally symmetric convex polygon.

    Constructed from the half list of vertices; the mirror image through
    the origin is appended and the cycle canonicalized. Evaluation is
    exact: the gauge is the max of the edge functionals, the antinorm the
    max of |[x, vertex]|.
    """

    kind = "polygon"

    def __init__(self, half_vertices: Iterable[VecLike]):
        self.vertices: tuple[Vec2, ...] = _canonical_polygon(half_vertices)
        funcs = []
        n = len(self.vertices)
        for i in range(n):
            a = self.vertices[i]
            b = self.vertices[(i + 1) % n]
            d = symplectic(a, b)
            # Functional equal to 1 along the edge a -> b.
            funcs.append(((b.y - a.y) / d, -(b.x - a.x) / d))
        self._funcs: tuple[tuple[float, float], ...] = tuple(funcs)
        arr_v = np.array([(v.x, v.y) for v in self.vertices])
        arr_f = np.array(funcs)
        arr_v.flags.writeable = False
        arr_f.flags.writeable = False
        self._verts_arr = arr_v
        self._funcs_arr = arr_f

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PolygonNorm) and self.vertices == other.vertices

    def __hash__(self) -> int:
        return hash(self.vertices)

    def __repr__(self) -> str:
        return f"PolygonNorm({len(self.vertices)} vertices)"

    def gauge_xy(self, x: float, y: float) -> float:
        best = 0.0
        for fx, fy in self._funcs:
            v = fx * x + fy * y
            if v > best:
                best = v
        return best

    def gauge_many(self, pts: np.ndarray) -> np.ndarray:
        pts = np.asarray(pts, dtype=float)
        vals = pts @ self._funcs_arr.T
        return vals.max(axis=-1)

    def antinorm_xy(self, x: float, y: float) -> tuple[float, float, float]:
        best = -1.0
        bw: Vec2 | None = None
        for v in self.vertices:
            c = x * v.y - y * v.x
            a = abs(c)
            if a > best:
                best = a
                bw = v if c >= 0.0 else -v
        assert bw is not None
        return best, bw.x, bw.y

    def antinorm_mag_xy(self, x: float, y: float) -> float:
        best = 0.0
        for v in self.vertices:
            a = abs(x * v.y - y * v.x)
            if a > best:
                best = a
        return best

    def polygon_vertices(self) -> tuple[Vec2, ...]:
        return self.vertices


def euclidean() -> EuclideanNorm:
    """The Euclidean plane."""
    return EuclideanNorm()


def lp(p: float) -> LpNorm:
    """The l_p plane, 1 <= p <= inf."""
    return LpNorm(float(p))


def polygon(half_vertices: Iterable[VecLike]) -> PolygonNorm:
    """Plane whose unit ball is the symmetric hull of the given half vertices."""
    return PolygonNorm(half_vertices)


def regular_polygon(n_vertices: int) -> PolygonNorm:
    """Regular polygon ball with circumradius 1 and a vertex at (1, 0).

    n_vertices must be even so the polygon is centrally symmetric.
    """
    if n_vertices < 4 or n_vertices % 2 != 0:
        raise ValueError("regular_polygon needs an even vertex count >= 4")
    half = [Vec2(math.cos(TWO_PI * k / n_vertices), math.sin(TWO_PI * k / n_vertices))
            for k in range(n_vertices // 2)]
    return PolygonNorm(half)
