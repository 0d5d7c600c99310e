"""Command-line front end.

Three model subcommands, each with solve/verify-style actions:

    bogomolny oscillator {solve|verify}   --m --omega --c1 --x0 --t-end
    bogomolny heisenberg {build|verify|plot-data}
                                          --f1 --f2 --c1const --grid
    bogomolny skyrme {profile|verify|plot-data}
                                          --gamma --n --lambda3 --beta
                                          --cint --r-max --samples

Common flags: --out (CSV/JSON artifact), --report (JSON verification
report), --tol (override every check tolerance), --fig (render a static
figure of the artifact). When --report is requested for an action that
emits a plottable artifact, a figure is also rendered next to it unless
--fig points elsewhere.

Exit status: 0 all checks pass, 1 verification failure, 2 invalid
usage, 3 model-domain error (message names the violated precondition).
"""

from __future__ import annotations

import argparse
import math
import sys
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import heisenberg as hb
from . import oscillator as osc
from . import skyrme as sk
from . import verify
from .errors import (
    IntegrationBlowupError,
    ModelDomainError,
    StepUnderflowError,
)
from .oracle import ResidualReport, aggregate_residuals
from .serialize import report_payload, write_csv, write_json

DEFAULT_TOLERANCE = 1e-6
DEFAULT_SAMPLES = 501

EXIT_PASS = 0
EXIT_VERIFY_FAIL = 1
EXIT_USAGE = 2
EXIT_DOMAIN = 3


def _positive_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}")
    if not (math.isfinite(value) and value > 0):
        raise argparse.ArgumentTypeError(
            f"must be positive and finite: {text!r}"
        )
    return value


def _finite_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}")
    if not math.isfinite(value):
        raise argparse.ArgumentTypeError(f"must be finite: {text!r}")
    return value


def _nonzero_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value == 0:
        raise argparse.ArgumentTypeError("must be a nonzero integer")
    return value


def _count(minimum: int):
    def parse(text: str) -> int:
        try:
            value = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
        if value < minimum:
            raise argparse.ArgumentTypeError(f"must be >= {minimum}")
        return value

    return parse


def _coeff_list(text: str) -> tuple[float, ...]:
    """Comma-separated ascending-degree coefficients, e.g. '0,1' for x.

    Use the --flag=value form for lists starting with a minus sign.
    """
    tokens = [tok.strip() for tok in text.split(",")]
    if not tokens or any(not tok for tok in tokens):
        raise argparse.ArgumentTypeError(
            f"bad coefficient list: {text!r}"
        )
    try:
        coeffs = tuple(float(tok) for tok in tokens)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad coefficient list: {text!r}")
    if not all(math.isfinite(c) for c in coeffs):
        raise argparse.ArgumentTypeError("coefficients must be finite")
    return coeffs


@dataclass(frozen=True)
class RunConfig:
    model: str
    action: str
    params: dict = field(default_factory=dict)
    output_path: Path | None = None
    report_path: Path | None = None
    fig_path: Path | None = None
    tolerance: float | None = None


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--out", type=Path, default=None,
                        help="artifact path (CSV or JSON)")
    parser.add_argument("--report", type=Path, default=None,
                        help="write the JSON verification report here")
    parser.add_argument("--fig", type=Path, default=None,
                        help="render a figure of the artifact here")
    parser.add_argument("--tol", type=_positive_float, default=None,
                        help="override every check tolerance")


def _add_oscillator_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--m", type=_positive_float, default=1.0,
                        help="mass (default 1)")
    parser.add_argument("--omega", type=_positive_float, default=1.0,
                        help="angular frequency (default 1)")
    parser.add_argument("--c1", type=_positive_float, default=1.0,
                        help="gauge integration constant (default 1)")
    parser.add_argument("--x0", type=_finite_float, default=0.0,
                        help="initial position x(0) (default 0)")
    parser.add_argument("--t-end", type=_positive_float, default=1.0,
                        dest="t_end", help="end of the time window")
    _add_common(parser)


def _add_heisenberg_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--f1", type=_coeff_list, default=(0.0, 1.0),
                        help="U(x,0) coefficients, ascending (default 0,1)")
    parser.add_argument("--f2", type=_coeff_list, default=(0.0,),
                        help="V(x,0) coefficients, ascending (default 0)")
    parser.add_argument("--c1const", type=_finite_float, default=0.0,
                        help="gauge constant C1 (default 0)")
    parser.add_argument("--grid", type=_count(2), default=21,
                        help="points per axis for field sweeps (default 21)")
    _add_common(parser)


def _add_skyrme_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--gamma", type=_positive_float, default=2.0,
                        help="vacuum parameter (default 2)")
    parser.add_argument("--n", type=_nonzero_int, default=1,
                        help="winding number (default 1)")
    parser.add_argument("--lambda3", type=_positive_float, default=1.0,
                        help="potential strength (default 1)")
    parser.add_argument("--beta", type=_positive_float, default=1.0,
                        help="quartic coupling (default 1)")
    parser.add_argument("--cint", type=_finite_float, default=1.0,
                        help="integration constant (default 1)")
    parser.add_argument("--r-max", type=_positive_float, default=5.0,
                        dest="r_max", help="largest sampled radius")
    parser.add_argument("--samples", type=_count(2),
                        default=DEFAULT_SAMPLES,
                        help="number of radial samples (default 501)")
    _add_common(parser)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bogomolny",
        description="Closed-form first-order reductions of three "
                    "variational models, with built-in verification.",
    )
    models = parser.add_subparsers(dest="model", required=True)

    p_osc = models.add_parser("oscillator",
                              help="harmonic oscillator dual system")
    a_osc = p_osc.add_subparsers(dest="action", required=True)
    for action in ("solve", "verify"):
        _add_oscillator_flags(a_osc.add_parser(action))

    p_hb = models.add_parser("heisenberg",
                             help="planar Heisenberg boundary problem")
    a_hb = p_hb.add_subparsers(dest="action", required=True)
    for action in ("build", "verify", "plot-data"):
        _add_heisenberg_flags(a_hb.add_parser(action))

    p_sk = models.add_parser("skyrme",
                             help="restricted baby Skyrme radial profile")
    a_sk = p_sk.add_subparsers(dest="action", required=True)
    for action in ("profile", "verify", "plot-data"):
        _add_skyrme_flags(a_sk.add_parser(action))
    return parser


def parse_config(argv) -> RunConfig:
    args = build_parser().parse_args(argv)
    common = {"out", "report", "fig", "tol", "model", "action"}
    params = {
        key: value
        for key, value in vars(args).items()
        if key not in common
    }
    return RunConfig(
        model=args.model,
        action=args.action,
        params=params,
        output_path=args.out,
        report_path=args.report,
        fig_path=args.fig,
        tolerance=args.tol,
    )


def _emit(
    config: RunConfig,
    params: dict,
    reports: list[ResidualReport],
) -> int:
    """Print per-check summaries, write the JSON report if requested,
    and convert the pass flags into an exit status."""
    for report in reports:
        print(report.summary_line())
    ok = all(r.passed for r in reports)
    print(f"overall: {'PASS' if ok else 'FAIL'}")
    if config.report_path is not None:
        payload = report_payload(config.model, config.action, params, reports)
        write_json(config.report_path, payload)
        print(f"report written to {config.report_path}")
    return EXIT_PASS if ok else EXIT_VERIFY_FAIL


def _figure_target(config: RunConfig, out_path: Path) -> Path | None:
    """Figures are rendered when explicitly requested via --fig, or
    alongside the artifact whenever a report is also being written."""
    if config.fig_path is not None:
        return config.fig_path
    if config.report_path is not None:
        return out_path.with_suffix(".png")
    return None


def _run_oscillator(config: RunConfig) -> int:
    p = osc.OscillatorProblem(
        m=config.params["m"],
        omega=config.params["omega"],
        c1=config.params["c1"],
        c3=config.params["x0"],
    )
    t_end = config.params["t_end"]
    if config.action == "verify":
        params, reports = verify.oscillator_reports(p, t_end,
                                                    config.tolerance)
        return _emit(config, params, reports)

    trajectory = osc.solve_trajectory(p, t_end, n_samples=DEFAULT_SAMPLES)
    out = config.output_path or Path("oscillator_trajectory.csv")
    write_csv(out, ("t", "x", "xdot"), trajectory.csv_rows())
    print(f"trajectory written to {out}")
    tol = config.tolerance or DEFAULT_TOLERANCE
    dual = [
        xdot - osc.dual_system_rhs(p, x) for _, x, xdot in trajectory.samples
    ]
    params = dict(config.params, c2=trajectory.c2)
    reports = [aggregate_residuals(
        dual, tol, "oscillator.trajectory_dual_consistency", params,
    )]
    fig_path = _figure_target(config, out)
    if fig_path is not None:
        from . import plots

        plots.save_trajectory_figure(trajectory.samples, fig_path)
        print(f"figure written to {fig_path}")
    return _emit(config, params, reports)


def _run_heisenberg(config: RunConfig) -> int:
    f1 = hb.BoundaryPolynomial(config.params["f1"])
    f2 = hb.BoundaryPolynomial(config.params["f2"])
    c1const = config.params["c1const"]
    if config.action == "verify":
        params, reports = verify.heisenberg_reports(f1, f2, c1const,
                                                    config.tolerance)
        return _emit(config, params, reports)

    d = hb.build_decomposition(f1, f2, c1const)
    tol = config.tolerance or DEFAULT_TOLERANCE
    params = {
        "f1": list(f1.coefficients),
        "f2": list(f2.coefficients),
        "C1": c1const,
        "grid": config.params["grid"],
    }
    if config.action == "build":
        out = config.output_path or Path("heisenberg_decomposition.json")
        write_json(out, hb.decomposition_payload(d))
        print(f"decomposition written to {out}")
        boundary = []
        for x in np.linspace(-3.0, 3.0, 21):
            u, v = hb.evaluate_fields(d, float(x), 0.0)
            boundary.append(u - f1(float(x)).real)
            boundary.append(v - f2(float(x)).real)
        reports = [aggregate_residuals(
            boundary, tol, "heisenberg.boundary_reproduction", params,
        )]
        return _emit(config, params, reports)

    n = config.params["grid"]
    rows = hb.field_grid_rows(d, n)
    out = config.output_path or Path("heisenberg_fields.csv")
    write_csv(out, ("x", "y", "U", "V", "energy_density"), rows)
    print(f"field grid written to {out}")
    # Cap the residual sweep so large grids stay fast; stride sampling
    # keeps the probe set deterministic.
    stride = max(1, (n * n) // 200)
    cr = []
    for x, y, _, _, _ in rows[::stride]:
        r1, r2 = hb.cr_residual(d, x, y)
        cr.extend([r1, r2])
    reports = [aggregate_residuals(
        cr, tol, "heisenberg.grid_cr_residual", params,
    )]
    fig_path = _figure_target(config, out)
    if fig_path is not None:
        from . import plots

        plots.save_field_figure(rows, n, fig_path)
        print(f"figure written to {fig_path}")
    return _emit(config, params, reports)


def _run_skyrme(config: RunConfig) -> int:
    p = sk.SkyrmeParams(
        beta=config.params["beta"],
        lambda3=config.params["lambda3"],
        gamma=config.params["gamma"],
        winding=config.params["n"],
        c_int=config.params["cint"],
    )
    if config.action == "verify":
        params, reports = verify.skyrme_reports(p, config.tolerance)
        return _emit(config, params, reports)

    r_values = np.linspace(0.0, config.params["r_max"],
                           config.params["samples"])
    profile = sk.closed_form_profile(p, r_values)
    out = config.output_path or Path("skyrme_profile.csv")
    write_csv(
        out,
        ("r", "f", "x1", "ode_residual", "energy_density"),
        profile.csv_rows(),
    )
    print(f"profile written to {out}")
    tol = config.tolerance or DEFAULT_TOLERANCE
    params = dict(p.as_dict(), r_max=config.params["r_max"],
                  samples=config.params["samples"])
    reports = [aggregate_residuals(
        [s.ode_residual for s in profile.samples],
        tol, "skyrme.profile_ode_residual", params,
    )]
    fig_path = _figure_target(config, out)
    if fig_path is not None:
        from . import plots

        plots.save_profile_figure(profile.csv_rows(), fig_path)
        print(f"figure written to {fig_path}")
    return _emit(config, params, reports)


def run(config: RunConfig) -> int:
    if config.model == "oscillator":
        return _run_oscillator(config)
    if config.model == "heisenberg":
        return _run_heisenberg(config)
    if config.model == "skyrme":
        return _run_skyrme(config)
    raise ValueError(f"unknown model {config.model!r}")


def main(argv=None) -> int:
    try:
        config = parse_config(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 on --help.
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return run(config)
    except ModelDomainError as exc:
        print(f"model-domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except (IntegrationBlowupError, StepUnderflowError) as exc:
        print(f"integration error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
