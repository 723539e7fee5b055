"""Command-line front end.

Usage:  minktrig [options] [command] [key=value ...]

The norm and run parameters come from --config and/or key=value tokens
(command-line wins). Numeric output is CSV with 12 significant digits,
written to stdout or --output. `emit-circle` can additionally write an SVG
polyline; `radon`, `constants`, and `emit-circle` render a diagnostic PNG
next to the CSV when an output path or an explicit figure path is given.

Exit codes: 0 success, 1 bad config or failed precondition, 2 at least one
failed reproduction row.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .config import ConfigError, RunConfig, build_config
from .orthogonality import benitez_alpha, birkhoff_defect, conjugate_pairs, \
    is_birkhoff, is_isosceles, is_roberts
from .plane import Vec2
from .reproduce import run_all
from .sine import sine, sine_direct
from .trig import (Triangle, busemann_bisector, glogovskii_bisector,
                   is_sine_conformal, law_of_sines)

SVG_TEMPLATE = ('<svg xmlns="http://www.w3.org/2000/svg" '
                'viewBox="-2 -2 4 4">\n'
                '  <polygon points="{points}" fill="none" stroke="black" '
                'stroke-width="0.02" />\n'
                '</svg>\n')


def _fmt(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    f = float(value)
    if f == 0.0:
        f = 0.0
    return f"{f:.12g}"


def _vec_fields(v: Vec2) -> str:
    return f"{_fmt(v.x)},{_fmt(v.y)}"


def _figure_path(cfg: RunConfig) -> str | None:
    if "figure" in cfg.params:
        return cfg.params["figure"]
    if cfg.output is not None:
        return str(Path(cfg.output).with_suffix(".png"))
    return None


# ---------------------------------------------------------------------------
# Command handlers: each returns (rows, exit_code)
# ---------------------------------------------------------------------------


def _cmd_sine(cfg: RunConfig) -> list[str]:
    x, y = cfg.params["x"], cfg.params["y"]
    if cfg.params.get("method", "formula") == "direct":
        sv = sine_direct(cfg.norm, x, y)
    else:
        sv = sine(cfg.norm, x, y)
    t_field = "" if sv.t_star is None else _fmt(sv.t_star)
    return [f"{_fmt(sv.value)},{t_field},{sv.method}"]


def _cmd_antinorm(cfg: RunConfig) -> list[str]:
    rep = cfg.norm.antinorm(cfg.params["x"])
    return [f"{_fmt(rep.value)},{_vec_fields(rep.witness)}"]


def _cmd_birkhoff(cfg: RunConfig) -> list[str]:
    x, y = cfg.params["x"], cfg.params["y"]
    tol = cfg.params.get("tol", 1e-9)
    gx, gy = cfg.norm.gauge(x), cfg.norm.gauge(y)
    if gx == 0.0 or gy == 0.0:
        raise ValueError("birkhoff needs nonzero vectors")
    defect = birkhoff_defect(cfg.norm, x / gx, y / gy)
    flag = is_birkhoff(cfg.norm, x, y, tol)
    return [f"{_fmt(flag)},{_fmt(defect.t_star)},{_fmt(defect.min_value)}"]


def _cmd_isosceles(cfg: RunConfig) -> list[str]:
    flag = is_isosceles(cfg.norm, cfg.params["x"], cfg.params["y"],
                        cfg.params.get("tol", 1e-9))
    return [_fmt(flag)]


def _cmd_roberts(cfg: RunConfig) -> list[str]:
    flag = is_roberts(cfg.norm, cfg.params["x"], cfg.params["y"],
                      cfg.params.get("tol", 1e-9))
    return [_fmt(flag)]


def _cmd_conjugates(cfg: RunConfig) -> list[str]:
    pairs = conjugate_pairs(cfg.norm, cfg.params.get("scan", 64))
    return [f"{_vec_fields(p.x)},{_vec_fields(p.y)},{_fmt(p.degenerate)}"
            for p in pairs]


def _cmd_alpha(cfg: RunConfig) -> list[str]:
    return [_fmt(benitez_alpha(cfg.norm, cfg.params["x"], cfg.params["y"]))]


def _cmd_radon(cfg: RunConfig) -> list[str]:
    rep = cfg.norm.is_radon(cfg.params.get("samples", 256),
                            cfg.params.get("tol", 1e-9))
    return [f"radon,{_fmt(rep.is_radon)},{_fmt(rep.lam)},{_fmt(rep.spread)}"]


def _cmd_constants(cfg: RunConfig) -> list[str]:
    from .constants import c_e, c_r, d_constant
    grid = cfg.params.get("grid")
    reports = [c_e(cfg.norm, grid or 1024), c_r(cfg.norm, grid or 512),
               d_constant(cfg.norm, grid or 1024)]
    cfg.params["_constant_reports"] = reports
    rows = []
    for rep in reports:
        coords = ",".join(_vec_fields(w) for w in rep.witness)
        rows.append(f"{rep.name},{_fmt(rep.value)},{coords},"
                    f"{rep.grid},{_fmt(rep.refined)}")
    return rows


def _cmd_bisect(cfg: RunConfig) -> list[str]:
    x, y = cfg.params["x"], cfg.params["y"]
    which = cfg.params.get("which", "both")
    rows = []
    if which in ("busemann", "both"):
        z = busemann_bisector(cfg.norm, x, y)
        rows.append(f"busemann,{_vec_fields(z)}")
    if which in ("glogovskii", "both"):
        z = glogovskii_bisector(cfg.norm, x, y)
        rows.append(f"glogovskii,{_vec_fields(z)}")
    return rows


def _cmd_lawsines(cfg: RunConfig) -> list[str]:
    tri = Triangle(cfg.params["a"], cfg.params["b"], cfg.params["c"])
    rep = law_of_sines(cfg.norm, tri)
    fields = [rep.r1, rep.r2, rep.r3, rep.max_spread, *rep.weak_residuals]
    return [",".join(_fmt(v) for v in fields)]


def _cmd_conformal(cfg: RunConfig) -> list[str]:
    flag = is_sine_conformal(cfg.norm, cfg.params["map"],
                             cfg.params.get("samples", 256),
                             cfg.params.get("tol", 1e-8), seed=cfg.seed)
    return [_fmt(flag)]


def _cmd_emit_circle(cfg: RunConfig) -> list[str]:
    which = cfg.params.get("which", "unit")
    points = cfg.norm.emit_circle(which, cfg.params.get("n", 360))
    if "svg" in cfg.params:
        joined = " ".join(f"{_fmt(p.x)},{_fmt(-p.y)}" for p in points)
        Path(cfg.params["svg"]).write_text(
            SVG_TEMPLATE.format(points=joined), encoding="utf-8")
    return ["x,y"] + [_vec_fields(p) for p in points]


def _cmd_reproduce(cfg: RunConfig) -> list[str]:
    results = run_all(cfg.params.get("rows"), seed=cfg.seed)
    cfg.params["_reproduce_failed"] = any(not r.passed for r in results)
    return [f"{r.index},{'pass' if r.passed else 'fail'},{r.name},{r.detail}"
            for r in results]


_HANDLERS = {"sine": _cmd_sine, "antinorm": _cmd_antinorm,
             "birkhoff": _cmd_birkhoff, "isosceles": _cmd_isosceles,
             "roberts": _cmd_roberts, "conjugates": _cmd_conjugates,
             "alpha": _cmd_alpha, "radon": _cmd_radon,
             "constants": _cmd_constants, "bisect": _cmd_bisect,
             "lawsines": _cmd_lawsines, "conformal": _cmd_conformal,
             "emit-circle": _cmd_emit_circle, "reproduce": _cmd_reproduce}


def _render_figure(cfg: RunConfig, path: str) -> None:
    from . import plots
    if cfg.command == "radon":
        plots.plot_radon_profile(cfg.norm, path)
    elif cfg.command == "constants":
        plots.plot_constants(cfg.params["_constant_reports"], path)
    elif cfg.command == "emit-circle":
        plots.plot_circles(cfg.norm, path)


def run(cfg: RunConfig) -> int:
    rows = _HANDLERS[cfg.command](cfg)
    text = "\n".join(rows) + "\n"
    if cfg.output is not None:
        Path(cfg.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    if cfg.command in ("radon", "constants", "emit-circle"):
        figure = _figure_path(cfg)
        if figure is not None:
            _render_figure(cfg, figure)
    if cfg.params.pop("_reproduce_failed", False):
        return 2
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="minktrig",
        description="Trigonometry of two-dimensional normed planes: "
                    "generalized sine, orthogonality, bisectors, and the "
                    "constants c_E, c_R, D.")
    parser.add_argument("tokens", nargs="*", metavar="command|key=value",
                        help="subcommand followed by key=value overrides")
    parser.add_argument("--config", help="read a [norm]/[run] config file")
    parser.add_argument("--output", help="write CSV to this path")
    parser.add_argument("--svg", help="for emit-circle: also write an SVG")
    parser.add_argument("--figure", help="write a PNG figure to this path")
    parser.add_argument("--seed", type=int, help="seed for sampled checks")
    args = parser.parse_args(argv)

    try:
        command = None
        assignments: list[str] = []
        for token in args.tokens:
            if "=" in token:
                assignments.append(token)
            elif command is None:
                command = token
            else:
                raise ConfigError(0, f"unexpected extra token {token!r}")
        file_text = None
        if args.config is not None:
            try:
                file_text = Path(args.config).read_text(encoding="utf-8")
            except OSError as exc:
                raise ConfigError(None, f"cannot read config: {exc}") from exc
        cfg = build_config(file_text, command, assignments, args.output,
                           args.svg, args.figure, args.seed)
        return run(cfg)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
