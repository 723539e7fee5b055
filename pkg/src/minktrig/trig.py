"""Triangle trigonometry on a normed plane: angular bisectors, the Law of
Sines, the isosceles characterizations, parallelogram areas, and
sine-conformal linear maps.

Everything reduces to the sine and antinorm machinery; the only state any
function keeps is its RNG, seeded explicitly for reproducible sampling.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .optimize import golden_min
from .orthogonality import birkhoff_defect, is_isosceles, is_roberts
from .plane import NormSpec, Vec2, VecLike, as_vec, symplectic
from .sine import sine

COLLINEAR_EPS = 1e-12


@dataclass(frozen=True, slots=True)
class Triangle:
    """Three non-collinear points."""

    a: Vec2
    b: Vec2
    c: Vec2

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", as_vec(self.a))
        object.__setattr__(self, "b", as_vec(self.b))
        object.__setattr__(self, "c", as_vec(self.c))
        if abs(symplectic(self.b - self.a, self.c - self.a)) <= COLLINEAR_EPS:
            raise ValueError("triangle vertices are collinear")


@dataclass(frozen=True, slots=True)
class LinearMap2:
    """A 2x2 linear map, row-major."""

    m11: float
    m12: float
    m21: float
    m22: float

    @property
    def det(self) -> float:
        return self.m11 * self.m22 - self.m12 * self.m21

    def __call__(self, v: VecLike) -> Vec2:
        v = as_vec(v)
        return Vec2(self.m11 * v.x + self.m12 * v.y,
                    self.m21 * v.x + self.m22 * v.y)

    @classmethod
    def identity(cls) -> "LinearMap2":
        return cls(1.0, 0.0, 0.0, 1.0)

    @classmethod
    def rotation(cls, angle: float) -> "LinearMap2":
        c, s = math.cos(angle), math.sin(angle)
        return cls(c, -s, s, c)

    @classmethod
    def reflection(cls, x: VecLike, y: VecLike) -> "LinearMap2":
        """The map fixing x and negating y: P diag(1, -1) P^-1 for P = [x y]."""
        x = as_vec(x)
        y = as_vec(y)
        d = symplectic(x, y)
        if abs(d) <= COLLINEAR_EPS:
            raise ValueError("reflection eigenvectors are collinear")
        return cls((x.x * y.y + x.y * y.x) / d, -2.0 * x.x * y.x / d,
                   2.0 * x.y * y.y / d, -(x.y * y.x + x.x * y.y) / d)


@dataclass(frozen=True, slots=True)
class LawOfSinesReport:
    """Side/sine ratios of a triangle and how far they spread.

    weak_residuals are the three pairwise identities that hold in every
    plane (same sine denominator direction on both sides); they stay at
    rounding level whether or not the plane is Radon.
    """

    r1: float
    r2: float
    r3: float
    max_spread: float
    weak_residuals: tuple[float, float, float]

    @property
    def ratios(self) -> tuple[float, float, float]:
        return (self.r1, self.r2, self.r3)


# ---------------------------------------------------------------------------
# Bisectors
# ---------------------------------------------------------------------------


def _anti_antinorm(spec: NormSpec, v: Vec2) -> float:
    """sup |[v, u]| over the anticircle: the antinorm of the antinorm.

    Exact for polygons (the anticircle's vertices sit on the unit ball's
    edge directions); sampled with golden refinement otherwise.
    """
    verts = spec.polygon_vertices()
    if verts is not None:
        best = 0.0
        n = len(verts)
        for i in range(n):
            e = verts[(i + 1) % n] - verts[i]
            u = e / abs(symplectic(e, verts[i]))
            best = max(best, abs(symplectic(v, u)))
        return best

    def neg(theta: float) -> float:
        u = spec.anticircle_point(theta)
        return -abs(symplectic(v, u))

    n_grid = 1024
    vals = [neg(math.pi * k / n_grid) for k in range(n_grid)]
    k0 = min(range(n_grid), key=vals.__getitem__)
    step = math.pi / n_grid
    _, refined = golden_min(neg, math.pi * k0 / n_grid - step,
                            math.pi * k0 / n_grid + step)
    return -min(vals[k0], refined)


def _weights(spec: NormSpec, plane: str):
    if plane == "norm":
        return spec.gauge, spec.antinorm_mag
    if plane == "antinorm":
        return spec.antinorm_mag, lambda v: _anti_antinorm(spec, as_vec(v))
    raise ValueError(f"unknown plane {plane!r}; use 'norm' or 'antinorm'")


def _bisector(spec: NormSpec, x: VecLike, y: VecLike, weight) -> Vec2:
    x = as_vec(x)
    y = as_vec(y)
    if x.x == 0.0 and x.y == 0.0 or y.x == 0.0 and y.y == 0.0:
        raise ValueError("bisector legs must be nonzero")
    if abs(symplectic(x, y)) <= COLLINEAR_EPS * max(1.0, abs(x.x), abs(x.y)) \
            * max(1.0, abs(y.x), abs(y.y)):
        raise ValueError("bisector legs are parallel")
    z = x / weight(x) + y / weight(y)
    return z / spec.gauge(z)


def busemann_bisector(spec: NormSpec, x: VecLike, y: VecLike,
                      plane: str = "norm") -> Vec2:
    """Unit direction of x/||x|| + y/||y||; satisfies s(x,z) = s(y,z).

    plane="antinorm" computes the same bisector for the antinorm plane
    (weights swap to antinorms), which coincides with the Glogovskii
    bisector of the original norm.
    """
    return _bisector(spec, x, y, _weights(spec, plane)[0])


def glogovskii_bisector(spec: NormSpec, x: VecLike, y: VecLike,
                        plane: str = "norm") -> Vec2:
    """Unit direction of x/||x||_a + y/||y||_a; equidistant from both rays
    and satisfies s(z,x) = s(z,y)."""
    return _bisector(spec, x, y, _weights(spec, plane)[1])


def point_to_ray_distance(spec: NormSpec, p: VecLike, direction: VecLike) -> float:
    """inf ||p - tau*d|| over tau >= 0, for the ray from the origin along d."""
    p = as_vec(p)
    d = as_vec(direction)
    if d.x == 0.0 and d.y == 0.0:
        raise ValueError("ray direction must be nonzero")
    free = birkhoff_defect(spec, p, -d)
    if free.t_star >= 0.0:
        return free.min_value
    return spec.gauge(p)


# ---------------------------------------------------------------------------
# Triangles
# ---------------------------------------------------------------------------


def law_of_sines(spec: NormSpec, tri: Triangle) -> LawOfSinesReport:
    """Side length over sine of the opposite angle, for all three sides.

    The three ratios agree exactly when the plane is Radon. The weak
    residuals compare the two ratio forms that share a sine direction,
    which agree in any plane.
    """
    a, b, c = tri.a, tri.b, tri.c
    r1 = spec.gauge(a - b) / sine(spec, a - c, b - c).value
    r2 = spec.gauge(b - c) / sine(spec, b - a, c - a).value
    r3 = spec.gauge(c - a) / sine(spec, c - b, a - b).value
    ratios = (r1, r2, r3)
    spread = max(ratios) - min(ratios)

    def weak(p: Vec2, q: Vec2, r: Vec2) -> float:
        lhs = spec.gauge(r - p) / sine(spec, q - p, r - q).value
        rhs = spec.gauge(q - p) / sine(spec, r - p, r - q).value
        return abs(lhs - rhs)

    residuals = (weak(a, b, c), weak(b, c, a), weak(c, a, b))
    return LawOfSinesReport(r1, r2, r3, spread, residuals)


def equal_sines_equal_sides(spec: NormSpec, tri: Triangle,
                            tol: float = 1e-9) -> tuple[bool, bool]:
    """(the two base sines at a are equal, the two sides from a are equal).

    The booleans agree on every triangle: both sines share the direction
    c - b, so their equality is exactly the equality of ||b-a|| and ||c-a||.
    """
    a, b, c = tri.a, tri.b, tri.c
    s1 = sine(spec, b - a, c - b).value
    s2 = sine(spec, c - a, c - b).value
    return (abs(s1 - s2) <= tol,
            abs(spec.gauge(b - a) - spec.gauge(c - a)) <= tol)


def isosceles_sine_characterization(spec: NormSpec, x: VecLike, y: VecLike,
                                    tol: float = 1e-9) -> tuple[bool, bool, bool]:
    """(x isosceles-orthogonal to y, s(x+y,y)=s(x-y,y), s(x+y,x)=s(x-y,x)).

    All three are equivalent, so the triple is always all-true or all-false.
    """
    x = as_vec(x)
    y = as_vec(y)
    if abs(symplectic(x, y)) <= COLLINEAR_EPS:
        raise ValueError("arguments are collinear")
    iso = is_isosceles(spec, x, y, tol)
    second = abs(sine(spec, x + y, y).value - sine(spec, x - y, y).value) <= tol
    third = abs(sine(spec, x + y, x).value - sine(spec, x - y, x).value) <= tol
    return (iso, second, third)


def parallelogram_area_check(spec: NormSpec, a: VecLike, b: VecLike,
                             d: VecLike) -> tuple[float, float, float]:
    """(area, ||a-b||*||a-d||*s(v,w), their ratio) for parallelogram a,b,.,d.

    The ratio is the antinorm of the unit direction of d-a, so it is the
    same constant lambda for every parallelogram exactly when the plane
    is Radon.
    """
    a = as_vec(a)
    v = as_vec(b) - a
    w = as_vec(d) - a
    area = abs(symplectic(v, w))
    if area <= COLLINEAR_EPS:
        raise ValueError("degenerate parallelogram")
    s = sine(spec, v, w).value
    product = spec.gauge(v) * spec.gauge(w) * s
    return (area, product, area / product)


# ---------------------------------------------------------------------------
# Sine-conformal maps
# ---------------------------------------------------------------------------


def is_sine_conformal(spec: NormSpec, f: LinearMap2, n_samples: int = 256,
                      tol: float = 1e-8, seed: int = 0) -> bool:
    """Whether s(f x, f y) = s(x, y) on sampled direction pairs.

    Sampled with a seeded RNG plus, for polygonal balls, every pair of
    vertex directions; a sampled check, not a certificate.
    """
    if n_samples < 100:
        raise ValueError("is_sine_conformal needs n_samples >= 100")
    if abs(f.det) <= COLLINEAR_EPS:
        raise ValueError("map is singular")
    rng = np.random.default_rng(seed)
    pairs: list[tuple[Vec2, Vec2]] = []
    for t1, t2 in rng.uniform(0.0, 2.0 * math.pi, size=(n_samples, 2)):
        pairs.append((Vec2(math.cos(t1), math.sin(t1)),
                      Vec2(math.cos(t2), math.sin(t2))))
    verts = spec.polygon_vertices()
    if verts is not None:
        for i in range(len(verts)):
            for j in range(i + 1, len(verts)):
                pairs.append((verts[i], verts[j]))
    for x, y in pairs:
        if abs(symplectic(x, y)) <= COLLINEAR_EPS:
            continue
        if abs(sine(spec, f(x), f(y)).value - sine(spec, x, y).value) > tol:
            return False
    return True


def reflection_roberts_check(spec: NormSpec, x: VecLike, y: VecLike,
                             n_samples: int = 256, tol: float = 1e-8,
                             seed: int = 0) -> tuple[bool, bool]:
    """(reflection fixing x / negating y is sine conformal, x Roberts-orth y).

    The two answers agree: that reflection preserves the sine exactly when
    gauge(x + t*y) = gauge(x - t*y) for every t.
    """
    x = as_vec(x)
    y = as_vec(y)
    f = LinearMap2.reflection(x, y)
    return (is_sine_conformal(spec, f, n_samples, tol, seed),
            is_roberts(spec, x, y))
