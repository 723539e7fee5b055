"""Textual run configuration: a [norm] section picking the plane and a
[run] section picking the command and its parameters.

The format is line oriented: `[section]` headers, `key = value` lines,
full-line `#` comments, case-insensitive keys. Every diagnostic carries the
line it came from (line 0 = a command-line assignment). serialize_config
emits a canonical form that parses back to an equivalent config.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

from .plane import (EuclideanNorm, LpNorm, NormSpec, PolygonNorm, Vec2,
                    euclidean, lp, polygon)
from .trig import LinearMap2

COMMANDS = ("sine", "antinorm", "birkhoff", "isosceles", "roberts",
            "conjugates", "alpha", "radon", "constants", "bisect",
            "lawsines", "conformal", "emit-circle", "reproduce")

# Which [run] keys each command accepts (besides command/output/seed).
COMMAND_KEYS: dict[str, tuple[str, ...]] = {
    "sine": ("x", "y", "method"),
    "antinorm": ("x",),
    "birkhoff": ("x", "y", "tol"),
    "isosceles": ("x", "y", "tol"),
    "roberts": ("x", "y", "tol"),
    "conjugates": ("scan",),
    "alpha": ("x", "y"),
    "radon": ("samples", "tol", "figure"),
    "constants": ("grid", "figure"),
    "bisect": ("x", "y", "which"),
    "lawsines": ("a", "b", "c"),
    "conformal": ("map", "samples", "tol"),
    "emit-circle": ("which", "n", "svg", "figure"),
    "reproduce": ("rows",),
}

REQUIRED_KEYS: dict[str, tuple[str, ...]] = {
    "sine": ("x", "y"),
    "antinorm": ("x",),
    "birkhoff": ("x", "y"),
    "isosceles": ("x", "y"),
    "roberts": ("x", "y"),
    "alpha": ("x", "y"),
    "bisect": ("x", "y"),
    "lawsines": ("a", "b", "c"),
    "conformal": ("map",),
}

_VEC_KEYS = ("x", "y", "a", "b", "c")
_INT_KEYS = ("scan", "samples", "grid", "n")
_FLOAT_KEYS = ("tol",)
_PATH_KEYS = ("svg", "figure")


class ConfigError(ValueError):
    """A config problem, tagged with the offending line (0 = command line)."""

    def __init__(self, lineno: int | None, message: str):
        self.lineno = lineno
        if lineno is None:
            super().__init__(message)
        elif lineno == 0:
            super().__init__(f"command line: {message}")
        else:
            super().__init__(f"line {lineno}: {message}")


@dataclass
class RunConfig:
    """A validated norm + command + typed parameters."""

    norm: NormSpec
    command: str
    params: dict = field(default_factory=dict)
    output: str | None = None
    seed: int = 0


# ---------------------------------------------------------------------------
# Raw scan
# ---------------------------------------------------------------------------

# (section, key, value, lineno)
RawEntry = tuple[str, str, str, int]


def scan_lines(text: str) -> list[RawEntry]:
    entries: list[RawEntry] = []
    section: str | None = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("[") and line.endswith("]"):
            section = line[1:-1].strip().lower()
            if section not in ("norm", "run"):
                raise ConfigError(lineno, f"unknown section [{section}]")
            continue
        if "=" not in line:
            raise ConfigError(lineno, "expected 'key = value'")
        if section is None:
            raise ConfigError(lineno, "key before any [norm] or [run] section")
        key, value = line.split("=", 1)
        entries.append((section, key.strip().lower(), value.strip(), lineno))
    return entries


# ---------------------------------------------------------------------------
# Value parsers
# ---------------------------------------------------------------------------


def _parse_float(value: str, lineno: int, key: str) -> float:
    try:
        out = float(value)
    except ValueError:
        raise ConfigError(lineno, f"bad number {value!r} for {key}") from None
    if not math.isfinite(out):
        raise ConfigError(lineno, f"{key} must be finite")
    return out


def _parse_int(value: str, lineno: int, key: str) -> int:
    try:
        return int(value)
    except ValueError:
        raise ConfigError(lineno, f"bad integer {value!r} for {key}") from None


def _parse_vec(value: str, lineno: int, key: str) -> Vec2:
    parts = value.split(",")
    if len(parts) != 2:
        raise ConfigError(lineno, f"{key} must be 'x,y', got {value!r}")
    return Vec2(_parse_float(parts[0].strip(), lineno, key),
                _parse_float(parts[1].strip(), lineno, key))


def _parse_map(value: str, lineno: int) -> LinearMap2:
    parts = [p.strip() for p in value.split(",")]
    if len(parts) != 4:
        raise ConfigError(lineno, "map must be 'm11,m12,m21,m22'")
    return LinearMap2(*(_parse_float(p, lineno, "map") for p in parts))


def _parse_param(command: str, key: str, value: str, lineno: int):
    if key in _VEC_KEYS:
        return _parse_vec(value, lineno, key)
    if key in _INT_KEYS:
        out = _parse_int(value, lineno, key)
        if out <= 0:
            raise ConfigError(lineno, f"{key} must be positive")
        return out
    if key in _FLOAT_KEYS:
        out = _parse_float(value, lineno, key)
        if out <= 0.0:
            raise ConfigError(lineno, f"{key} must be positive")
        return out
    if key in _PATH_KEYS:
        return value
    if key == "method":
        low = value.lower()
        if low in ("formula", "antinorm-formula"):
            return "formula"
        if low == "direct":
            return "direct"
        raise ConfigError(lineno, f"method must be 'formula' or 'direct', got {value!r}")
    if key == "which":
        low = value.lower()
        allowed = (("busemann", "glogovskii", "both") if command == "bisect"
                   else ("unit", "anticircle"))
        if low not in allowed:
            raise ConfigError(lineno, f"which must be one of {'/'.join(allowed)}")
        return low
    if key == "rows":
        rows = tuple(_parse_int(p.strip(), lineno, "rows") for p in value.split(","))
        for r in rows:
            if not 1 <= r <= 12:
                raise ConfigError(lineno, f"rows entries must be 1..12, got {r}")
        return rows
    if key == "map":
        return _parse_map(value, lineno)
    raise ConfigError(lineno, f"unhandled key {key!r}")  # pragma: no cover


# ---------------------------------------------------------------------------
# Semantic validation
# ---------------------------------------------------------------------------


def _build_norm(norm_kv: dict[str, tuple[str, int]]) -> NormSpec:
    known = {"kind", "p", "vertices"}
    for key, (_, lineno) in norm_kv.items():
        if key not in known:
            raise ConfigError(lineno, f"unknown [norm] key {key!r}")
    if not norm_kv:
        return euclidean()
    if "kind" not in norm_kv:
        _, lineno = next(iter(norm_kv.values()))
        raise ConfigError(lineno, "[norm] section needs kind = euclidean | lp | polygon")
    kind, kind_line = norm_kv["kind"]
    kind = kind.lower()
    if kind == "euclidean":
        for key in ("p", "vertices"):
            if key in norm_kv:
                raise ConfigError(norm_kv[key][1], f"{key} does not apply to kind=euclidean")
        return euclidean()
    if kind == "lp":
        if "vertices" in norm_kv:
            raise ConfigError(norm_kv["vertices"][1], "vertices does not apply to kind=lp")
        if "p" not in norm_kv:
            raise ConfigError(kind_line, "kind=lp needs p")
        value, lineno = norm_kv["p"]
        p = math.inf if value.lower() in ("inf", "infinity") \
            else _parse_float(value, lineno, "p")
        if p < 1.0:
            raise ConfigError(lineno, "p must be >= 1")
        return lp(p)
    if kind == "polygon":
        if "p" in norm_kv:
            raise ConfigError(norm_kv["p"][1], "p does not apply to kind=polygon")
        if "vertices" not in norm_kv:
            raise ConfigError(kind_line, "kind=polygon needs vertices")
        value, lineno = norm_kv["vertices"]
        half = [_parse_vec(part.strip(), lineno, "vertices")
                for part in value.split(";") if part.strip()]
        try:
            return polygon(half)
        except ValueError as exc:
            raise ConfigError(lineno, str(exc)) from None
    raise ConfigError(kind_line, f"unknown kind {kind!r}")


def validate(entries: list[RawEntry]) -> RunConfig:
    norm_kv: dict[str, tuple[str, int]] = {}
    run_kv: dict[str, tuple[str, int]] = {}
    for section, key, value, lineno in entries:
        (norm_kv if section == "norm" else run_kv)[key] = (value, lineno)

    spec = _build_norm(norm_kv)

    if "command" not in run_kv:
        raise ConfigError(None, "no command given")
    command, cmd_line = run_kv.pop("command")
    command = command.lower()
    if command not in COMMANDS:
        raise ConfigError(cmd_line, f"unknown command {command!r}")

    output = run_kv.pop("output", (None, 0))[0]
    seed = 0
    if "seed" in run_kv:
        value, lineno = run_kv.pop("seed")
        seed = _parse_int(value, lineno, "seed")
        if seed < 0:
            raise ConfigError(lineno, "seed must be >= 0")

    allowed = COMMAND_KEYS[command]
    params: dict = {}
    for key, (value, lineno) in run_kv.items():
        if key not in allowed:
            raise ConfigError(lineno, f"key {key!r} is not valid for command {command!r}")
        params[key] = _parse_param(command, key, value, lineno)
    for key in REQUIRED_KEYS.get(command, ()):
        if key not in params:
            raise ConfigError(cmd_line, f"command {command!r} needs key {key!r}")
    return RunConfig(spec, command, params, output, seed)


def parse_config(text: str) -> RunConfig:
    return validate(scan_lines(text))


# ---------------------------------------------------------------------------
# Serialization
# ---------------------------------------------------------------------------


def _format_value(value) -> str:
    if isinstance(value, Vec2):
        return f"{value.x!r},{value.y!r}"
    if isinstance(value, LinearMap2):
        return ",".join(repr(v) for v in (value.m11, value.m12, value.m21, value.m22))
    if isinstance(value, tuple):
        return ",".join(str(v) for v in value)
    if isinstance(value, float):
        return repr(value)
    return str(value)


def serialize_config(cfg: RunConfig) -> str:
    lines = ["[norm]"]
    if isinstance(cfg.norm, EuclideanNorm):
        lines.append("kind = euclidean")
    elif isinstance(cfg.norm, LpNorm):
        lines.append("kind = lp")
        lines.append("p = inf" if math.isinf(cfg.norm.p) else f"p = {cfg.norm.p!r}")
    elif isinstance(cfg.norm, PolygonNorm):
        lines.append("kind = polygon")
        half = cfg.norm.vertices[:len(cfg.norm.vertices) // 2]
        lines.append("vertices = " + "; ".join(f"{v.x!r},{v.y!r}" for v in half))
    else:  # pragma: no cover - only reachable with out-of-tree NormSpecs
        raise ValueError(f"cannot serialize norm {cfg.norm!r}")
    lines += ["", "[run]", f"command = {cfg.command}"]
    if cfg.output is not None:
        lines.append(f"output = {cfg.output}")
    lines.append(f"seed = {cfg.seed}")
    for key in sorted(cfg.params):
        lines.append(f"{key} = {_format_value(cfg.params[key])}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# CLI merge
# ---------------------------------------------------------------------------

_NORM_KEYS = ("kind", "p", "vertices")


def build_config(file_text: str | None = None, command: str | None = None,
                 assignments: list[str] | None = None,
                 output: str | None = None, svg: str | None = None,
                 figure: str | None = None, seed: int | None = None) -> RunConfig:
    """Merge a config file with command-line overrides.

    Assignments are `key=value` tokens; norm keys route to [norm], the rest
    to [run]. Command-line entries win over file entries.
    """
    entries = scan_lines(file_text) if file_text else []
    for token in assignments or []:
        if "=" not in token:
            raise ConfigError(0, f"expected key=value, got {token!r}")
        key, value = token.split("=", 1)
        key = key.strip().lower()
        section = "norm" if key in _NORM_KEYS else "run"
        entries.append((section, key, value.strip(), 0))
    if command is not None:
        entries.append(("run", "command", command, 0))
    if output is not None:
        entries.append(("run", "output", output, 0))
    if svg is not None:
        entries.append(("run", "svg", svg, 0))
    if figure is not None:
        entries.append(("run", "figure", figure, 0))
    if seed is not None:
        entries.append(("run", "seed", str(seed), 0))
    return validate(entries)
