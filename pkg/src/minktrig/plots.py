"""Figure rendering for the CLI: unit/anticircle overlays, the Radon ratio
profile, and constant-report bars. Uses the Agg backend so runs never need
a display."""
from __future__ import annotations

import math

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .constants import ConstantReport
from .plane import NormSpec


def _closed(points) -> tuple[list[float], list[float]]:
    xs = [p.x for p in points] + [points[0].x]
    ys = [p.y for p in points] + [points[0].y]
    return xs, ys


def plot_circles(spec: NormSpec, path: str, n: int = 720) -> str:
    """Unit circle and anticircle on shared axes."""
    fig, ax = plt.subplots(figsize=(5.0, 5.0))
    for which, style in (("unit", "-"), ("anticircle", "--")):
        xs, ys = _closed(spec.emit_circle(which, n))
        ax.plot(xs, ys, style, label=which)
    ax.set_aspect("equal")
    ax.set_xlim(-2, 2)
    ax.set_ylim(-2, 2)
    ax.grid(alpha=0.3)
    ax.legend(loc="upper right")
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)
    return path


def plot_radon_profile(spec: NormSpec, path: str, n: int = 512) -> str:
    """antinorm/gauge ratio against direction, with the fitted constant."""
    report = spec.is_radon(max(8, n))
    thetas = np.linspace(0.0, math.pi, n, endpoint=False)
    ratios = [spec.antinorm_mag(spec.unit_point(t)) for t in thetas]
    fig, ax = plt.subplots(figsize=(6.0, 3.5))
    ax.plot(thetas, ratios, lw=1.2)
    ax.axhline(report.lam, ls="--", color="gray",
               label=f"lambda = {report.lam:.6g}")
    ax.set_xlabel("direction (rad)")
    ax.set_ylabel("antinorm / gauge")
    ax.set_title(f"radon = {str(report.is_radon).lower()}, "
                 f"spread = {report.spread:.3g}")
    ax.legend(loc="best")
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)
    return path


def plot_constants(reports: list[ConstantReport], path: str) -> str:
    """One bar per computed constant, annotated with its value."""
    names = [r.name for r in reports]
    values = [r.value for r in reports]
    fig, ax = plt.subplots(figsize=(5.0, 3.5))
    bars = ax.bar(names, values, color="steelblue")
    for bar, value in zip(bars, values):
        ax.annotate(f"{value:.6g}", (bar.get_x() + bar.get_width() / 2, value),
                    ha="center", va="bottom", fontsize=9)
    ax.set_ylabel("value")
    ax.set_ylim(0, max(1.6, max(values) * 1.15))
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)
    return path
