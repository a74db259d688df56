"""Command line front end.

Subcommands: exact, density, integrate, simulate, general, verify.  All
accept a JSON config file plus flags that override it; results go to stdout
or --out.  Exit codes: 0 success, 2 invalid configuration, 3 verification
failure.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import time
from pathlib import Path
from typing import Any

from . import __version__
from .directions import ChordProblem, probability_general
from .exact import (
    probability_arctan_form,
    probability_golden_ratio_form,
)
from .montecarlo import Method, ProbabilityEstimate, estimate
from .quadrature import probability_by_quadrature
from .reports import (
    Agreement,
    ExperimentConfig,
    ExperimentReport,
    config_from_sources,
    density_profile,
)

# Deterministic methods must agree at least this closely in verify runs.
QUADRATURE_AGREEMENT_TOLERANCE = 1e-8

# Monte Carlo must land within this many binomial standard deviations.
SIGMA_MULTIPLE = 4.0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", type=Path, help="JSON config file; flags override it")
    common.add_argument("--base", type=float, help="triangle base length (default 1)")
    common.add_argument("--height", type=float, help="triangle height (default 1)")
    common.add_argument("--threshold", type=float, help="chord length cutoff (default 1)")
    common.add_argument(
        "--method",
        choices=("exact", "quadrature", "montecarlo", "all"),
        help="which estimators a combined command runs (default all)",
    )
    common.add_argument("--samples", type=int, help="Monte Carlo sample count (default 10^6)")
    common.add_argument("--seed", type=int, help="Monte Carlo root seed (default 0)")
    common.add_argument(
        "--tol", type=float, dest="tolerance", help="quadrature error target (default 1e-12)"
    )
    common.add_argument(
        "--points",
        type=int,
        dest="density_points",
        help="grid size for density output (default 201)",
    )
    common.add_argument(
        "--format",
        choices=("json", "csv"),
        dest="output_format",
        help="report format (default json; density always emits CSV)",
    )
    common.add_argument(
        "--out", type=Path, dest="output_path", help="write output to this file instead of stdout"
    )

    parser = argparse.ArgumentParser(
        prog="trichord",
        description=(
            "Probability that a chord from a uniform base point of an isosceles "
            "triangle at a uniform angle exceeds a length cutoff."
        ),
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser(
        "exact",
        parents=[common],
        help="closed-form probability (unit configuration only)",
    )
    sub.add_parser(
        "density",
        parents=[common],
        help="CSV profile of the angular measure across the base",
    )
    sub.add_parser(
        "integrate",
        parents=[common],
        help="probability by adaptive quadrature",
    )
    sub.add_parser(
        "simulate",
        parents=[common],
        help="probability by Monte Carlo sampling",
    )
    sub.add_parser(
        "general",
        parents=[common],
        help="probability for arbitrary base, height, and cutoff",
    )
    verify = sub.add_parser(
        "verify",
        parents=[common],
        help="cross-check closed form, quadrature, and Monte Carlo; exit 3 on mismatch",
    )
    verify.add_argument(
        "--perturb",
        type=float,
        default=0.0,
        help="test hook: bias added to the quadrature probability before the gate",
    )
    return parser


def load_config(args: argparse.Namespace) -> ExperimentConfig:
    file_data: dict[str, Any] | None = None
    if args.config is not None:
        file_data = json.loads(Path(args.config).read_text())
        if not isinstance(file_data, dict):
            raise ValueError("config file must hold a JSON object")
    overrides = {
        "base": args.base,
        "height": args.height,
        "threshold": args.threshold,
        "method": args.method,
        "samples": args.samples,
        "seed": args.seed,
        "tolerance": args.tolerance,
        "density_points": args.density_points,
        "output_format": args.output_format,
        "output_path": None if args.output_path is None else str(args.output_path),
    }
    return config_from_sources(file_data, overrides)


def _require_unit_configuration(config: ExperimentConfig) -> None:
    if not (
        config.triangle.base == 1.0
        and config.triangle.height == 1.0
        and config.threshold == 1.0
    ):
        raise ValueError(
            "this command needs the unit configuration "
            "(base=1, height=1, threshold=1); use 'general' otherwise"
        )


def _problem(config: ExperimentConfig) -> ChordProblem:
    return ChordProblem(config.triangle, config.threshold)


def _pairwise_agreement(estimates: dict[str, ProbabilityEstimate]) -> Agreement:
    names = list(estimates)
    max_diff = 0.0
    within = True
    for i, first in enumerate(names):
        for second in names[i + 1 :]:
            a, b = estimates[first], estimates[second]
            diff = abs(a.p_hat - b.p_hat)
            max_diff = max(max_diff, diff)
            allowance = QUADRATURE_AGREEMENT_TOLERANCE + SIGMA_MULTIPLE * (
                a.std_error + b.std_error
            )
            if diff > allowance:
                within = False
    return Agreement(max_abs_difference=max_diff, within_tolerance=within)


def _elapsed_ms(start: float) -> float:
    return (time.perf_counter() - start) * 1000.0


def cmd_exact(config: ExperimentConfig, args: argparse.Namespace) -> tuple[int, str]:
    _require_unit_configuration(config)
    start = time.perf_counter()
    arctan_form = probability_arctan_form()
    golden_form = probability_golden_ratio_form()
    elapsed = _elapsed_ms(start)
    report = ExperimentReport(
        config=config,
        estimates={"exact": ProbabilityEstimate.from_value(golden_form, Method.EXACT)},
        agreement=Agreement(abs(arctan_form - golden_form), True),
        timing_ms={"exact": elapsed},
        tool_version=__version__,
        details={
            "arctan_form": arctan_form,
            "golden_ratio_form": golden_form,
            "difference": arctan_form - golden_form,
        },
    )
    return 0, _render(report, config)


def cmd_density(config: ExperimentConfig, args: argparse.Namespace) -> tuple[int, str]:
    profile = density_profile(_problem(config), config.density_points)
    return 0, profile.to_csv()


def cmd_integrate(config: ExperimentConfig, args: argparse.Namespace) -> tuple[int, str]:
    problem = _problem(config)
    start = time.perf_counter()
    if (
        config.triangle.base == 1.0
        and config.triangle.height == 1.0
        and config.threshold == 1.0
    ):
        result = probability_by_quadrature(config.tolerance)
    else:
        result = probability_general(problem, config.tolerance)
    elapsed = _elapsed_ms(start)
    report = ExperimentReport(
        config=config,
        estimates={
            "quadrature": ProbabilityEstimate.from_value(result.probability, Method.QUADRATURE)
        },
        agreement=Agreement(0.0, True),
        timing_ms={"quadrature": elapsed},
        tool_version=__version__,
        details={
            "integral": result.integral,
            "evaluations": result.evaluations,
            "converged": result.converged,
        },
    )
    return 0, _render(report, config)


def cmd_simulate(config: ExperimentConfig, args: argparse.Namespace) -> tuple[int, str]:
    start = time.perf_counter()
    mc = estimate(_problem(config), config.samples, config.seed)
    elapsed = _elapsed_ms(start)
    report = ExperimentReport(
        config=config,
        estimates={"montecarlo": mc},
        agreement=Agreement(0.0, True),
        timing_ms={"montecarlo": elapsed},
        tool_version=__version__,
    )
    return 0, _render(report, config)


def cmd_general(config: ExperimentConfig, args: argparse.Namespace) -> tuple[int, str]:
    if config.method == "exact":
        raise ValueError(
            "general computes by quadrature and Monte Carlo; "
            "the exact command handles the closed form"
        )
    problem = _problem(config)
    estimates: dict[str, ProbabilityEstimate] = {}
    timing: dict[str, float] = {}
    details: dict[str, Any] = {}

    start = time.perf_counter()
    quad = probability_general(problem, config.tolerance)
    timing["quadrature"] = _elapsed_ms(start)
    estimates["quadrature"] = ProbabilityEstimate.from_value(
        quad.probability, Method.QUADRATURE
    )
    details["quadrature_evaluations"] = quad.evaluations
    details["quadrature_converged"] = quad.converged

    if config.method in ("montecarlo", "all"):
        start = time.perf_counter()
        estimates["montecarlo"] = estimate(problem, config.samples, config.seed)
        timing["montecarlo"] = _elapsed_ms(start)

    report = ExperimentReport(
        config=config,
        estimates=estimates,
        agreement=_pairwise_agreement(estimates),
        timing_ms=timing,
        tool_version=__version__,
        details=details,
    )
    return 0, _render(report, config)


def cmd_verify(config: ExperimentConfig, args: argparse.Namespace) -> tuple[int, str]:
    _require_unit_configuration(config)
    estimates: dict[str, ProbabilityEstimate] = {}
    timing: dict[str, float] = {}

    start = time.perf_counter()
    exact_p = probability_golden_ratio_form()
    timing["exact"] = _elapsed_ms(start)
    estimates["exact"] = ProbabilityEstimate.from_value(exact_p, Method.EXACT)

    start = time.perf_counter()
    quad = probability_by_quadrature(config.tolerance)
    timing["quadrature"] = _elapsed_ms(start)
    quad_p = quad.probability + args.perturb
    estimates["quadrature"] = ProbabilityEstimate.from_value(quad_p, Method.QUADRATURE)

    start = time.perf_counter()
    mc = estimate(_problem(config), config.samples, config.seed)
    timing["montecarlo"] = _elapsed_ms(start)
    estimates["montecarlo"] = mc

    sigma = math.sqrt(exact_p * (1.0 - exact_p) / config.samples)
    quadrature_error = abs(quad_p - exact_p)
    montecarlo_error = abs(mc.p_hat - exact_p)
    passed = (
        quadrature_error < QUADRATURE_AGREEMENT_TOLERANCE
        and montecarlo_error < SIGMA_MULTIPLE * sigma
    )
    report = ExperimentReport(
        config=config,
        estimates=estimates,
        agreement=Agreement(
            max_abs_difference=max(
                quadrature_error, montecarlo_error, abs(mc.p_hat - quad_p)
            ),
            within_tolerance=passed,
        ),
        timing_ms=timing,
        tool_version=__version__,
        details={
            "quadrature_error": quadrature_error,
            "quadrature_tolerance": QUADRATURE_AGREEMENT_TOLERANCE,
            "montecarlo_error": montecarlo_error,
            "montecarlo_allowance": SIGMA_MULTIPLE * sigma,
            "montecarlo_sigma": sigma,
        },
    )
    return (0 if passed else 3), _render(report, config)


def _render(report: ExperimentReport, config: ExperimentConfig) -> str:
    if config.output_format == "csv":
        return report.to_csv()
    return report.to_json()


_COMMANDS = {
    "exact": cmd_exact,
    "density": cmd_density,
    "integrate": cmd_integrate,
    "simulate": cmd_simulate,
    "general": cmd_general,
    "verify": cmd_verify,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = load_config(args)
        code, payload = _COMMANDS[args.command](config, args)
    except (ValueError, OSError) as exc:
        print(f"trichord: {exc}", file=sys.stderr)
        return 2
    if config.output_path is not None:
        Path(config.output_path).write_text(payload)
    else:
        sys.stdout.write(payload)
    return code


if __name__ == "__main__":
    sys.exit(main())
