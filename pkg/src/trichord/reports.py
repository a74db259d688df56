"""Run configuration, result reports, density profiles, and serialization.

Every float is rendered with 17 significant digits, enough for a lossless
round trip through text, and reports use a fixed key order, so two runs with
the same configuration serialize byte-identically apart from timing fields.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Any, Mapping

from .directions import ChordProblem, direction_set, is_unit_configuration
from .geometry import IsoscelesTriangle, limit_angle
from .montecarlo import ProbabilityEstimate

_METHODS = ("exact", "quadrature", "montecarlo", "all")
_FORMATS = ("json", "csv")


def format_float(value: float) -> str:
    """Render a float with 17 significant digits (lossless text round trip)."""
    if not math.isfinite(value):
        raise ValueError(f"cannot serialize non-finite number {value!r}")
    return format(value, ".17g")


def _encode(value: Any, level: int, indent: int) -> str:
    pad = " " * (indent * level)
    child = " " * (indent * (level + 1))
    if value is None:
        return "null"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return format_float(value)
    if isinstance(value, str):
        return json.dumps(value)
    if isinstance(value, (list, tuple)):
        if not value:
            return "[]"
        body = ",\n".join(child + _encode(item, level + 1, indent) for item in value)
        return "[\n" + body + "\n" + pad + "]"
    if isinstance(value, Mapping):
        if not value:
            return "{}"
        body = ",\n".join(
            f"{child}{json.dumps(str(key))}: {_encode(item, level + 1, indent)}"
            for key, item in value.items()
        )
        return "{\n" + body + "\n" + pad + "}"
    raise TypeError(f"cannot serialize {type(value).__name__}")


def dumps(payload: Any, indent: int = 2) -> str:
    """Serialize to JSON with 17-significant-digit floats and stable key order."""
    return _encode(payload, 0, indent)


@dataclass(frozen=True)
class ExperimentConfig:
    """Full configuration of a run, echoing the command line defaults."""

    triangle: IsoscelesTriangle = IsoscelesTriangle(1.0, 1.0)
    threshold: float = 1.0
    method: str = "all"
    samples: int = 1_000_000
    seed: int = 0
    tolerance: float = 1e-12
    density_points: int = 201
    output_format: str = "json"
    output_path: str | None = None

    def __post_init__(self) -> None:
        if not (math.isfinite(self.threshold) and self.threshold >= 0.0):
            raise ValueError(f"threshold must be nonnegative, got {self.threshold}")
        if self.method not in _METHODS:
            raise ValueError(f"method must be one of {_METHODS}, got {self.method!r}")
        if not isinstance(self.samples, int) or self.samples < 1:
            raise ValueError(f"samples must be a positive integer, got {self.samples!r}")
        if not isinstance(self.seed, int) or self.seed < 0:
            raise ValueError(f"seed must be a nonnegative integer, got {self.seed!r}")
        if not (math.isfinite(self.tolerance) and self.tolerance > 0.0):
            raise ValueError(f"tolerance must be positive, got {self.tolerance}")
        if not isinstance(self.density_points, int) or self.density_points < 2:
            raise ValueError(
                f"density_points must be an integer of at least 2, got {self.density_points!r}"
            )
        if self.output_format not in _FORMATS:
            raise ValueError(
                f"output_format must be one of {_FORMATS}, got {self.output_format!r}"
            )

    def to_dict(self) -> dict[str, Any]:
        """JSON-shaped view with the documented field names."""
        return {
            "triangle": {"base": self.triangle.base, "height": self.triangle.height},
            "threshold": self.threshold,
            "method": self.method,
            "samples": self.samples,
            "seed": self.seed,
            "tolerance": self.tolerance,
            "density_points": self.density_points,
            "output_format": self.output_format,
            "output_path": self.output_path,
        }


def _as_int(name: str, value: Any) -> int:
    # JSON files may carry integers written as 1e6; accept exact ones.
    if isinstance(value, bool):
        raise ValueError(f"{name} must be an integer, got {value!r}")
    if isinstance(value, int):
        return value
    if isinstance(value, float) and value.is_integer():
        return int(value)
    raise ValueError(f"{name} must be an integer, got {value!r}")


def config_from_sources(
    file_data: Mapping[str, Any] | None, overrides: Mapping[str, Any]
) -> ExperimentConfig:
    """Merge config file values and flag overrides over the defaults.

    ``overrides`` uses flat keys (base, height, threshold, method, samples,
    seed, tolerance, density_points, output_format, output_path); entries set
    to None are ignored.  Unknown file keys are rejected.
    """
    data = dict(file_data or {})
    known = {
        "triangle",
        "threshold",
        "method",
        "samples",
        "seed",
        "tolerance",
        "density_points",
        "output_format",
        "output_path",
    }
    unknown = set(data) - known
    if unknown:
        raise ValueError(f"unknown config fields: {sorted(unknown)}")
    triangle_data = data.get("triangle", {})
    if not isinstance(triangle_data, Mapping):
        raise ValueError("triangle must be an object with base and height")
    tri_unknown = set(triangle_data) - {"base", "height"}
    if tri_unknown:
        raise ValueError(f"unknown triangle fields: {sorted(tri_unknown)}")

    def pick(flat_key: str, file_value: Any, default: Any) -> Any:
        override = overrides.get(flat_key)
        if override is not None:
            return override
        return default if file_value is None else file_value

    base = float(pick("base", triangle_data.get("base"), 1.0))
    height = float(pick("height", triangle_data.get("height"), 1.0))
    samples = _as_int("samples", pick("samples", data.get("samples"), 1_000_000))
    seed = _as_int("seed", pick("seed", data.get("seed"), 0))
    points = _as_int(
        "density_points", pick("density_points", data.get("density_points"), 201)
    )
    output_path = overrides.get("output_path")
    if output_path is None:
        output_path = data.get("output_path")
    return ExperimentConfig(
        triangle=IsoscelesTriangle(base, height),
        threshold=float(pick("threshold", data.get("threshold"), 1.0)),
        method=str(pick("method", data.get("method"), "all")),
        samples=samples,
        seed=seed,
        tolerance=float(pick("tolerance", data.get("tolerance"), 1e-12)),
        density_points=points,
        output_format=str(pick("output_format", data.get("output_format"), "json")),
        output_path=None if output_path is None else str(output_path),
    )


@dataclass(frozen=True)
class Agreement:
    """Cross-method consistency summary."""

    max_abs_difference: float
    within_tolerance: bool


@dataclass(frozen=True)
class ExperimentReport:
    """Everything a run produced: config echo, per-method estimates, agreement."""

    config: ExperimentConfig
    estimates: Mapping[str, ProbabilityEstimate]
    agreement: Agreement
    timing_ms: Mapping[str, float]
    tool_version: str
    details: Mapping[str, Any] = field(default_factory=dict)

    def to_dict(self) -> dict[str, Any]:
        """JSON-shaped view: dicts, lists, and scalars only."""
        doc: dict[str, Any] = {
            "config": self.config.to_dict(),
            "estimates": {
                name: {
                    "method": est.method.value,
                    "p_hat": est.p_hat,
                    "samples": est.samples,
                    "successes": est.successes,
                    "std_error": est.std_error,
                    "ci95": [est.ci95[0], est.ci95[1]],
                    "seed": est.seed,
                }
                for name, est in self.estimates.items()
            },
            "agreement": {
                "max_abs_difference": self.agreement.max_abs_difference,
                "within_tolerance": self.agreement.within_tolerance,
            },
            "timing_ms": {name: float(ms) for name, ms in self.timing_ms.items()},
            "tool_version": self.tool_version,
        }
        if self.details:
            doc["details"] = dict(self.details)
        return doc

    def to_json(self) -> str:
        return dumps(self.to_dict()) + "\n"

    def to_csv(self) -> str:
        lines = ["method,p_hat,std_error,ci_low,ci_high,samples,successes,seed"]
        for name, est in self.estimates.items():
            lines.append(
                ",".join(
                    (
                        name,
                        format_float(est.p_hat),
                        format_float(est.std_error),
                        format_float(est.ci95[0]),
                        format_float(est.ci95[1]),
                        str(est.samples),
                        str(est.successes),
                        str(est.seed),
                    )
                )
            )
        return "\n".join(lines) + "\n"


def base_grid(base: float, points: int) -> list[float]:
    """Equally spaced abscissas across the base, exactly mirror-symmetric.

    The upper half is built by negating the lower half, so x[i] == -x[n-1-i]
    bit-for-bit and the midpoint of an odd grid is exactly 0.0.
    """
    if points < 2:
        raise ValueError(f"need at least 2 points, got {points}")
    last = points - 1
    xs = [(i / last - 0.5) * base for i in range(points)]
    for i in range(points // 2):
        xs[last - i] = -xs[i]
    return xs


@dataclass(frozen=True)
class DensityProfile:
    """Sampled angular-measure profile across the base, as (x, alpha) rows."""

    rows: tuple[tuple[float, float], ...]

    def to_csv(self) -> str:
        lines = ["x,alpha"]
        for x, alpha in self.rows:
            lines.append(f"{format_float(x)},{format_float(alpha)}")
        return "\n".join(lines) + "\n"


def parse_density_csv(text: str) -> DensityProfile:
    """Inverse of DensityProfile.to_csv."""
    lines = [line for line in text.split("\n") if line]
    if not lines or lines[0] != "x,alpha":
        raise ValueError("density CSV must start with the header 'x,alpha'")
    rows = []
    for line in lines[1:]:
        x_text, alpha_text = line.split(",")
        rows.append((float(x_text), float(alpha_text)))
    return DensityProfile(tuple(rows))


def density_profile(problem: ChordProblem, points: int) -> DensityProfile:
    """Angular-measure profile of ``problem`` on a symmetric grid of ``points``.

    Uses the closed-form limit angle in the unit configuration and the
    direction-set construction otherwise.
    """
    xs = base_grid(problem.triangle.base, points)
    if is_unit_configuration(problem):
        rows = tuple((x, limit_angle(x)) for x in xs)
    else:
        rows = tuple((x, direction_set(problem, x).measure) for x in xs)
    return DensityProfile(rows)
