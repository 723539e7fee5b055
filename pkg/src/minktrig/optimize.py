"""Small derivative-free search routines shared across the package.

Everything here works on plain callables returning floats, so callers can
close over whatever geometry they need.
"""
from __future__ import annotations

import math
from typing import Callable

INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0


def golden_min(f: Callable[[float], float], lo: float, hi: float,
               tol: float = 1e-12, max_iter: int = 200) -> tuple[float, float]:
    """Minimize a unimodal function on [lo, hi] by golden-section search.

    Returns (argmin, min). The bracket shrinks by the inverse golden ratio
    each step, so convexity of f is enough for convergence.
    """
    if hi < lo:
        lo, hi = hi, lo
    a, b = lo, hi
    c = b - INV_PHI * (b - a)
    d = a + INV_PHI * (b - a)
    fc, fd = f(c), f(d)
    best_x, best_f = (c, fc) if fc <= fd else (d, fd)
    for _ in range(max_iter):
        if b - a <= tol:
            break
        if fc <= fd:
            b, d, fd = d, c, fc
            c = b - INV_PHI * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + INV_PHI * (b - a)
            fd = f(d)
        if fc < best_f:
            best_x, best_f = c, fc
        if fd < best_f:
            best_x, best_f = d, fd
    mid = 0.5 * (a + b)
    fmid = f(mid)
    if fmid < best_f:
        best_x, best_f = mid, fmid
    return best_x, best_f


def bisect_root(f: Callable[[float], float], lo: float, hi: float,
                xtol: float = 1e-13, ftol: float = 0.0,
                max_iter: int = 200) -> float:
    """Find a root of f on [lo, hi] by bisection; f(lo) and f(hi) must differ in sign."""
    flo, fhi = f(lo), f(hi)
    if flo == 0.0:
        return lo
    if fhi == 0.0:
        return hi
    if (flo > 0.0) == (fhi > 0.0):
        raise ValueError("bisect_root: no sign change on the bracket")
    for _ in range(max_iter):
        mid = 0.5 * (lo + hi)
        fmid = f(mid)
        if fmid == 0.0 or abs(fmid) <= ftol or (hi - lo) <= xtol:
            return mid
        if (fmid > 0.0) == (flo > 0.0):
            lo, flo = mid, fmid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def pattern_search_min(f: Callable[..., float], x0: tuple[float, ...],
                       step: float, shrink: float = 0.5,
                       iters: int = 60) -> tuple[tuple[float, ...], float]:
    """Coordinate pattern search: poll +/- step on each axis, shrink on failure.

    Deterministic: axes are polled in index order and the first improvement
    wins, so results do not depend on evaluation order elsewhere.
    """
    x = list(x0)
    fx = f(*x)
    h = step
    for _ in range(iters):
        improved = False
        for i in range(len(x)):
            for delta in (h, -h):
                trial = list(x)
                trial[i] += delta
                ft = f(*trial)
                if ft < fx:
                    x, fx = trial, ft
                    improved = True
                    break
            if improved:
                break
        if not improved:
            h *= shrink
    return tuple(x), fx
