"""The generalized sine of a normed plane.

For unit x, y the sine is s(x, y) = inf_t ||x + t*y||: the distance from
the origin to the line through x with direction y. It equals
|[x, y]| / ||y||_a on unit vectors, which is the cheap route; the direct
minimization stays available as an independent check. The companion
s_a(x, y) built from the antinorm equals s(y, x), so asymmetry of s is
exactly the gap between norm and antinorm.
"""
from __future__ import annotations

from dataclasses import dataclass

from .orthogonality import ConjugatePair, birkhoff_defect, conjugate_pairs
from .plane import NormSpec, Vec2, VecLike, as_vec, symplectic

METHOD_DIRECT = "direct"
METHOD_FORMULA = "antinorm-formula"

# Gauge-normalized area below which a pair counts as parallel (sine 0).
PARALLEL_TOL = 1e-12


@dataclass(frozen=True, slots=True)
class SineValue:
    """A sine evaluation; t_star is only set by the direct method."""

    value: float
    t_star: float | None
    method: str


@dataclass(frozen=True, slots=True)
class PolarCoords:
    """Coefficients of z in a conjugate basis."""

    alpha: float
    beta: float


def _clip01(v: float) -> float:
    if v < 0.0:
        return 0.0
    if v > 1.0:
        return 1.0
    return v


def _checked(x: VecLike, y: VecLike) -> tuple[Vec2, Vec2]:
    x = as_vec(x)
    y = as_vec(y)
    for v in (x, y):
        if v.x == 0.0 and v.y == 0.0:
            raise ValueError("sine of the zero vector is undefined")
    return x, y


def sine_direct(spec: NormSpec, x: VecLike, y: VecLike) -> SineValue:
    """s(x, y) by minimizing ||x/||x|| + t * y/||y|| || over t."""
    x, y = _checked(x, y)
    xn = x / spec.gauge(x)
    yn = y / spec.gauge(y)
    d = birkhoff_defect(spec, xn, yn)
    return SineValue(_clip01(d.min_value), d.t_star, METHOD_DIRECT)


def sine(spec: NormSpec, x: VecLike, y: VecLike) -> SineValue:
    """s(x, y) via the antinorm: |[x, y]| / (||y||_a * ||x||), scale-free."""
    x, y = _checked(x, y)
    gx = spec.gauge(x)
    gy = spec.gauge(y)
    area = symplectic(x, y)
    if abs(area) <= PARALLEL_TOL * gx * gy:
        return SineValue(0.0, None, METHOD_FORMULA)
    val = abs(area) / (spec.antinorm_mag(y) * gx)
    return SineValue(_clip01(val), None, METHOD_FORMULA)


def sine_antinorm(spec: NormSpec, x: VecLike, y: VecLike) -> SineValue:
    """The antinorm-plane sine s_a(x, y), which equals s(y, x)."""
    x, y = _checked(x, y)
    inner = sine(spec, y, x)
    return SineValue(inner.value, None, METHOD_FORMULA)


def _pair_vecs(pair: ConjugatePair | tuple[VecLike, VecLike]) -> tuple[Vec2, Vec2]:
    if isinstance(pair, ConjugatePair):
        return pair.x, pair.y
    a, b = pair
    return as_vec(a), as_vec(b)


def polar_coords(spec: NormSpec, pair: ConjugatePair | tuple[VecLike, VecLike],
                 z: VecLike) -> PolarCoords:
    """Write z = alpha*x + beta*y over a conjugate pair (x, y).

    Conjugacy makes |alpha| = ||z|| * s(z, y) and |beta| = ||z|| * s(z, x);
    both identities are verified to 1e-8 and a failure (meaning the pair
    is not conjugate, or is numerically dependent) raises ValueError.
    """
    x, y = _pair_vecs(pair)
    z = as_vec(z)
    if z.x == 0.0 and z.y == 0.0:
        raise ValueError("polar coordinates of the zero vector are undefined")
    det = symplectic(x, y)
    if abs(det) <= 1e-12:
        raise ValueError("conjugate pair is numerically dependent")
    alpha = symplectic(z, y) / det
    beta = symplectic(x, z) / det
    gz = spec.gauge(z)
    slack = 1e-8 * max(1.0, gz)
    if (abs(abs(alpha) - gz * sine(spec, z, y).value) > slack
            or abs(abs(beta) - gz * sine(spec, z, x).value) > slack):
        raise ValueError("polar identity failed; the basis is not a "
                         "conjugate pair of this plane")
    return PolarCoords(alpha, beta)


def conjugate_range(spec: NormSpec, pair: ConjugatePair | tuple[VecLike, VecLike],
                    z: VecLike) -> float:
    """s(z, x)^2 + s(z, y)^2 for a conjugate pair; lands in [1/2, 2]."""
    x, y = _pair_vecs(pair)
    sx = sine(spec, z, x).value
    sy = sine(spec, z, y).value
    return sx * sx + sy * sy


def find_pair_with_sine(spec: NormSpec, eps: float,
                        pair: ConjugatePair | tuple[VecLike, VecLike] | None = None,
                        ) -> tuple[Vec2, Vec2]:
    """Construct unit (z, y) with s(z, y) = eps, for any eps in [0, 1].

    Slides from a conjugate pair (x, y): the line through eps*x with
    direction y stays at distance exactly eps from the origin, so its
    intersection z with the unit circle gives s(z, y) = eps.
    """
    if not 0.0 <= eps <= 1.0:
        raise ValueError("eps must lie in [0, 1]")
    if pair is None:
        pair = conjugate_pairs(spec)[0]
    x, y = _pair_vecs(pair)
    x = x / spec.gauge(x)
    y = y / spec.gauge(y)
    if eps == 0.0:
        return (y, y)

    def on_circle(tau: float) -> float:
        return spec.gauge_xy(eps * x.x + tau * y.x, eps * x.y + tau * y.y) - 1.0

    if on_circle(0.0) >= -1e-15:
        return (x, y)
    lo, hi = 0.0, 2.5
    flo = on_circle(lo)
    for _ in range(120):
        mid = 0.5 * (lo + hi)
        fm = on_circle(mid)
        if abs(fm) <= 1e-14 or hi - lo <= 1e-14:
            lo = hi = mid
            break
        if (fm > 0.0) == (flo > 0.0):
            lo, flo = mid, fm
        else:
            hi = mid
    tau = 0.5 * (lo + hi)
    z = Vec2(eps * x.x + tau * y.x, eps * x.y + tau * y.y)
    return (z, y)
