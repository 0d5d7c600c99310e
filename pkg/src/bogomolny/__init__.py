"""Closed-form first-order (Bogomolny) reductions of three variational
models, with independent numerical verification.

Models:
  - oscillator: harmonic oscillator as a dual first-order system.
  - heisenberg: planar Heisenberg model reduced to a Cauchy-Riemann
    pair, solved from boundary data.
  - skyrme: restricted baby Skyrme model, radial profile in closed form
    through the Lambert W function.

Supporting machinery: a principal-branch Lambert W implementation,
fixed-step and adaptive Runge-Kutta integrators, finite-difference
residual checks, and deterministic CSV/JSON artifact writers.
"""

from .errors import (
    BranchError,
    DegenerateProfileError,
    ExponentOverflowError,
    IntegrationBlowupError,
    ModelDomainError,
    ProfileDomainError,
    RealityViolationError,
    SingularRadiusError,
    StepUnderflowError,
    TurningPointError,
)
from .heisenberg import (
    BoundaryPolynomial,
    ComplexPolynomial,
    HolomorphicDecomposition,
    SpinVector,
    build_decomposition,
    cr_residual,
    energy_density,
    evaluate_fields,
    stereographic_w,
)
from .oracle import (
    OdeProblem,
    ResidualReport,
    aggregate_residuals,
    central_diff,
    rk4_integrate,
    rkf45_integrate,
)
from .oscillator import (
    OscillatorProblem,
    Trajectory,
    bogomolny_residual_of_general_el,
    c2_from_initial,
    closed_form_x,
    closed_form_xdot,
    dual_system_rhs,
    euler_lagrange_residual,
    gauge_potential,
    solve_trajectory,
)
from .skyrme import (
    RadialProfile,
    SkyrmeParams,
    boundary_limits_check,
    closed_form_f,
    hamiltonian_density,
    integrate_profile,
    radial_ode_residual,
    specialized_f,
    x1_value,
    x2_value,
)
from .special import BRANCH_POINT, lambert_eval, lambert_w0

__version__ = "0.1.0"

__all__ = [
    "BRANCH_POINT",
    "BoundaryPolynomial",
    "BranchError",
    "ComplexPolynomial",
    "DegenerateProfileError",
    "ExponentOverflowError",
    "HolomorphicDecomposition",
    "IntegrationBlowupError",
    "ModelDomainError",
    "OdeProblem",
    "OscillatorProblem",
    "ProfileDomainError",
    "RadialProfile",
    "RealityViolationError",
    "ResidualReport",
    "SingularRadiusError",
    "SkyrmeParams",
    "SpinVector",
    "StepUnderflowError",
    "Trajectory",
    "TurningPointError",
    "aggregate_residuals",
    "bogomolny_residual_of_general_el",
    "boundary_limits_check",
    "build_decomposition",
    "c2_from_initial",
    "central_diff",
    "closed_form_f",
    "closed_form_x",
    "closed_form_xdot",
    "cr_residual",
    "dual_system_rhs",
    "energy_density",
    "euler_lagrange_residual",
    "evaluate_fields",
    "gauge_potential",
    "hamiltonian_density",
    "integrate_profile",
    "lambert_eval",
    "lambert_w0",
    "radial_ode_residual",
    "rk4_integrate",
    "rkf45_integrate",
    "solve_trajectory",
    "specialized_f",
    "stereographic_w",
    "x1_value",
    "x2_value",
]
