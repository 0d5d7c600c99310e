"""Restricted baby Skyrme model with a Mexican-hat potential, reduced by
the hedgehog ansatz w = tan(f(r)/2) e^{i N theta}.

The first-order (Bogomolny) reduction leaves one radial ODE,

    (cos f + 1) N f' sin f / r = sqrt(lambda3/beta) [cos f (g^2+1) + g^2 - 1],

with g = gamma, whose closed-form solution is f(r) = pi - arccos(X1)
where X1 is built from the principal Lambert W branch:

    X2(r) = exp(E(r)) / 2,
    X1(r) = (g^2 - exp(Theta(r)) - 1) / (g^2 + 1),

E and Theta as implemented below. The identity exp(Theta) = 2 W(X2)
(a consequence of W e^W = X2) gives the analytic radial derivative
used for high-accuracy residuals via W'(y) = W/(y(1+W)).

Radius enters only through r^2, so the closed form extends formally to
negative r; physical profiles live on r >= 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .errors import (
    DegenerateProfileError,
    ExponentOverflowError,
    ProfileDomainError,
    SingularRadiusError,
)
from .oracle import OdeProblem, central_diff, rkf45_integrate
from .special import acos_clamped, lambert_w0

# Exponents beyond this would overflow exp() in double precision.
EXP_OVERFLOW_LIMIT = 700.0
# Radii below this are treated as the removable r=0 singularity.
SINGULAR_RADIUS = 1e-10
X1_DOMAIN_TOL = 1e-9


@dataclass(frozen=True)
class SkyrmeParams:
    """Model couplings: beta (Skyrme term), lambda3 and gamma (potential
    strength and vacuum radius), winding (nonzero integer of the
    ansatz), c_int (integration constant of the closed form)."""

    beta: float
    lambda3: float
    gamma: float
    winding: int = 1
    c_int: float = 1.0

    def __post_init__(self):
        for name in ("beta", "lambda3", "gamma"):
            value = getattr(self, name)
            if not (math.isfinite(value) and value > 0):
                raise ValueError(
                    f"SkyrmeParams: {name} must be positive and finite"
                )
        if int(self.winding) != self.winding or self.winding == 0:
            raise ValueError("SkyrmeParams: winding must be a nonzero integer")
        if not math.isfinite(self.c_int):
            raise ValueError("SkyrmeParams: c_int must be finite")
        object.__setattr__(self, "winding", int(self.winding))

    @property
    def vacuum_x1(self) -> float:
        """Far-field X1 limit (g^2-1)/(g^2+1), the zero of the ODE rhs."""
        g2 = self.gamma**2
        return (g2 - 1.0) / (g2 + 1.0)

    def as_dict(self) -> dict:
        return {
            "beta": self.beta,
            "lambda3": self.lambda3,
            "gamma": self.gamma,
            "winding": self.winding,
            "c_int": self.c_int,
        }


def _x2_exponent(p: SkyrmeParams, r: float) -> float:
    g2 = p.gamma**2
    sqrt_beta = math.sqrt(p.beta)
    numerator = sqrt_beta * p.winding * (g2 - 1.0) - (g2 + 1.0) ** 2 * (
        r * r + 2.0 * p.c_int
    ) * math.sqrt(p.lambda3) / 2.0
    exponent = numerator / (2.0 * sqrt_beta * p.winding)
    if exponent > EXP_OVERFLOW_LIMIT:
        raise ExponentOverflowError(
            f"x2 exponent {exponent!r} overflows for params {p.as_dict()!r} "
            f"at r={r!r}"
        )
    return exponent


def x2_value(p: SkyrmeParams, r: float) -> float:
    """Lambert argument X2(r) = exp(E)/2; positive, decaying in r^2 for
    positive winding."""
    return 0.5 * math.exp(_x2_exponent(p, r))


def x1_value(p: SkyrmeParams, r: float) -> float:
    """X1 per the closed form, evaluated literally through its exponent

    Theta = (-4 W(X2) sqrt(beta) N - (g^2+1)^2 (r^2+2 c_int) sqrt(lambda3)
            + 2 N (g^2-1) sqrt(beta)) / (4 sqrt(beta) N).
    """
    g2 = p.gamma**2
    sqrt_beta = math.sqrt(p.beta)
    w = lambert_w0(x2_value(p, r))
    theta = (
        -4.0 * w * sqrt_beta * p.winding
        - (g2 + 1.0) ** 2 * (r * r + 2.0 * p.c_int) * math.sqrt(p.lambda3)
        + 2.0 * p.winding * (g2 - 1.0) * sqrt_beta
    ) / (4.0 * sqrt_beta * p.winding)
    return (g2 - math.exp(theta) - 1.0) / (g2 + 1.0)


def x1_prime(p: SkyrmeParams, r: float) -> float:
    """Analytic dX1/dr via the chain rule through lambert_w0.

    With exp(Theta) = 2 W(X2) and X2' = X2 * E', where
    E' = -(g^2+1)^2 r sqrt(lambda3)/(2 sqrt(beta) N), the W' identity
    collapses to dX1/dr = (g^2+1) r sqrt(lambda3) W / ((1+W) sqrt(beta) N).
    """
    g2 = p.gamma**2
    w = lambert_w0(x2_value(p, r))
    return (
        (g2 + 1.0)
        * r
        * math.sqrt(p.lambda3)
        * w
        / ((1.0 + w) * math.sqrt(p.beta) * p.winding)
    )


def x1_slope_at_zero(p: SkyrmeParams) -> float:
    """lim_{r->0} X1'(r)/r, the coefficient of the r^2 leading behavior."""
    g2 = p.gamma**2
    w = lambert_w0(x2_value(p, 0.0))
    return (
        (g2 + 1.0)
        * math.sqrt(p.lambda3)
        * w
        / ((1.0 + w) * math.sqrt(p.beta) * p.winding)
    )


def closed_form_f(p: SkyrmeParams, r: float) -> float:
    """Profile angle f(r) = pi - arccos(X1(r)), always in [0, pi]."""
    x1 = x1_value(p, r)
    if abs(x1) > 1.0 + X1_DOMAIN_TOL:
        raise ProfileDomainError(
            f"closed_form_f: X1={x1!r} outside [-1, 1] for params "
            f"{p.as_dict()!r} at r={r!r}"
        )
    return math.pi - acos_clamped(x1, tol=X1_DOMAIN_TOL)


def closed_form_f_prime(p: SkyrmeParams, r: float) -> float:
    """Analytic f'(r) = X1'(r)/sqrt(1 - X1^2)."""
    x1 = x1_value(p, r)
    s = 1.0 - x1 * x1
    if s <= 0.0:
        raise ProfileDomainError(
            f"closed_form_f_prime: X1={x1!r} at the arccos branch edge "
            f"(r={r!r})"
        )
    return x1_prime(p, r) / math.sqrt(s)


def specialized_f(r: float) -> float:
    """The fully reduced profile at gamma=2, winding=1, lambda3=beta=1:

    f(r) = pi - arccos[(3 - exp(-25 r^2/4 - 11
             - W(exp(-25 r^2/4 - 11)/2))) / 5].

    Must agree with closed_form_f at those couplings with c_int = 1 (the
    exponent matching -25 c/2 + 3/2 = -11 forces that constant).
    """
    e = -6.25 * r * r - 11.0
    w = lambert_w0(0.5 * math.exp(e))
    return math.pi - acos_clamped((3.0 - math.exp(e - w)) / 5.0)


def radial_ode_residual(
    p: SkyrmeParams,
    f: Callable[[float], float],
    r: float,
    h: float = 1e-6,
    fprime: Callable[[float], float] | None = None,
) -> float:
    """Left-minus-right residual of the radial first-order equation.

    f' comes from a central difference unless an analytic derivative is
    supplied. The 1/r factor makes r=0 singular; use
    radial_ode_residual_at_zero for the removable limit there.
    """
    if r <= SINGULAR_RADIUS:
        raise SingularRadiusError(
            f"radial_ode_residual: r={r!r} at the coordinate singularity"
        )
    fv = f(r)
    fp = fprime(r) if fprime is not None else central_diff(f, r, h=h)
    lhs = (math.cos(fv) + 1.0) * p.winding * fp * math.sin(fv) / r
    rhs = math.sqrt(p.lambda3 / p.beta) * (
        math.cos(fv) * (p.gamma**2 + 1.0) + p.gamma**2 - 1.0
    )
    return lhs - rhs


def radial_ode_residual_at_zero(p: SkyrmeParams) -> float:
    """Residual of the closed form at r=0 via the removable limit
    f' sin f / r -> (X1'/r) with sin f = sqrt(1-X1^2) cancelling."""
    x1 = x1_value(p, 0.0)
    lhs = p.winding * (1.0 - x1) * x1_slope_at_zero(p)
    rhs = math.sqrt(p.lambda3 / p.beta) * (
        -x1 * (p.gamma**2 + 1.0) + p.gamma**2 - 1.0
    )
    return lhs - rhs


def profile_rhs(p: SkyrmeParams, r: float, fv: float) -> float:
    """The ODE solved for f': r sqrt(lambda3/beta) [cos f (g^2+1)+g^2-1]
    / (N sin f (1 + cos f)). Degenerate at f near 0 or pi."""
    den = math.sin(fv) * (1.0 + math.cos(fv))
    if abs(den) < 1e-10:
        raise DegenerateProfileError(
            f"profile_rhs: sin(f)(1+cos f)={den!r} too small at f={fv!r}"
        )
    num = (
        r
        * math.sqrt(p.lambda3 / p.beta)
        * (math.cos(fv) * (p.gamma**2 + 1.0) + p.gamma**2 - 1.0)
    )
    return num / (p.winding * den)


def hamiltonian_density(
    p: SkyrmeParams,
    f: Callable[[float], float],
    fprime: Callable[[float], float],
    r: float,
) -> float:
    """Energy density -4 beta J^2/(1+|w|^2)^4 + lambda3 (|w|^2 - g^2)^2
    under the ansatz, with the Jacobian
    J = w_x w*_y - w_y w*_x = -2 i N sin f f' / (r (1+cos f)^2)
    and |w|^2 = (1 - cos f)/(1 + cos f)."""
    if r <= SINGULAR_RADIUS:
        raise SingularRadiusError(
            f"hamiltonian_density: r={r!r} at the coordinate singularity"
        )
    fv = f(r)
    one_plus_cos = 1.0 + math.cos(fv)
    if one_plus_cos < 1e-12:
        raise DegenerateProfileError(
            f"hamiltonian_density: profile at f={fv!r} hits the ansatz "
            "pole (f = pi)"
        )
    fp = fprime(r)
    j_imag = -2.0 * p.winding * math.sin(fv) * fp / (r * one_plus_cos**2)
    j_sq = -j_imag * j_imag
    w_sq = (1.0 - math.cos(fv)) / one_plus_cos
    return (
        -4.0 * p.beta * j_sq / (1.0 + w_sq) ** 4
        + p.lambda3 * (w_sq - p.gamma**2) ** 2
    )


def hamiltonian_density_at_zero(p: SkyrmeParams) -> float:
    """r=0 limit of the density for the closed-form profile: the kinetic
    term tends to beta N^2 (X1'/r)^2."""
    x1 = x1_value(p, 0.0)
    slope = x1_slope_at_zero(p)
    kinetic = p.beta * p.winding**2 * slope * slope
    w_sq = (1.0 + x1) / (1.0 - x1)
    return kinetic + p.lambda3 * (w_sq - p.gamma**2) ** 2


def hamiltonian_density_cartesian_fd(
    p: SkyrmeParams,
    f: Callable[[float], float],
    x: float,
    y: float,
    h: float = 1e-5,
) -> float:
    """Independent check of the reduced density: reconstruct the full
    field w = tan(f(r)/2) e^{i N theta} on a Cartesian 5-point stencil
    and evaluate the planar expression with finite-difference gradients.
    """
    def w_at(px: float, py: float) -> complex:
        rr = math.hypot(px, py)
        theta = math.atan2(py, px)
        fv = f(rr)
        return math.tan(0.5 * fv) * complex(
            math.cos(p.winding * theta), math.sin(p.winding * theta)
        )

    w = w_at(x, y)
    w_x = (w_at(x + h, y) - w_at(x - h, y)) / (2.0 * h)
    w_y = (w_at(x, y + h) - w_at(x, y - h)) / (2.0 * h)
    jac = w_x * w_y.conjugate() - w_y * w_x.conjugate()
    jac_sq = (jac * jac).real
    w_sq = abs(w) ** 2
    return (
        -4.0 * p.beta * jac_sq / (1.0 + w_sq) ** 4
        + p.lambda3 * (w_sq - p.gamma**2) ** 2
    )


def boundary_limits_check(
    p: SkyrmeParams, r_probe: float = 10.0
) -> tuple[float, float]:
    """Far-field residuals at a probe radius: distance of cos f from the
    vacuum angle -(g^2-1)/(g^2+1), and the energy density (which decays
    to the vacuum value 0)."""
    if r_probe <= SINGULAR_RADIUS:
        raise SingularRadiusError(
            "boundary_limits_check: probe radius must be positive"
        )
    f_probe = closed_form_f(p, r_probe)
    f_limit_residual = abs(math.cos(f_probe) + p.vacuum_x1)
    h_limit = hamiltonian_density(
        p,
        lambda rr: closed_form_f(p, rr),
        lambda rr: closed_form_f_prime(p, rr),
        r_probe,
    )
    return f_limit_residual, h_limit


@dataclass(frozen=True)
class ProfileSample:
    r: float
    f: float
    x1: float
    ode_residual: float
    energy_density: float

    def as_row(self) -> tuple[float, float, float, float, float]:
        return (self.r, self.f, self.x1, self.ode_residual,
                self.energy_density)


@dataclass(frozen=True)
class RadialProfile:
    """Monotone-in-r profile samples; f stays in [0, pi] and X1 in
    [-1, 1] up to the arccos clamping tolerance."""

    samples: tuple[ProfileSample, ...]

    def __post_init__(self):
        radii = [s.r for s in self.samples]
        if any(b <= a for a, b in zip(radii, radii[1:])):
            raise ValueError("RadialProfile: radii must be strictly increasing")
        for s in self.samples:
            if not all(
                math.isfinite(v)
                for v in (s.r, s.f, s.x1, s.ode_residual, s.energy_density)
            ):
                raise ValueError(f"RadialProfile: non-finite sample {s!r}")
            if abs(s.x1) > 1.0 + X1_DOMAIN_TOL:
                raise ValueError(f"RadialProfile: X1 out of range in {s!r}")
            if not -X1_DOMAIN_TOL <= s.f <= math.pi + X1_DOMAIN_TOL:
                raise ValueError(f"RadialProfile: f out of [0, pi] in {s!r}")

    def csv_rows(self):
        return [s.as_row() for s in self.samples]


def closed_form_profile(
    p: SkyrmeParams, r_values: Sequence[float]
) -> RadialProfile:
    """Sample the closed form with analytic-derivative ODE residuals and
    energy density; r=0 uses the removable-limit formulas."""
    f_of = lambda rr: closed_form_f(p, rr)
    fp_of = lambda rr: closed_form_f_prime(p, rr)
    samples = []
    for r in r_values:
        r = float(r)
        if r < 0:
            raise ValueError("closed_form_profile: radii must be >= 0")
        fv = closed_form_f(p, r)
        x1 = x1_value(p, r)
        if r <= SINGULAR_RADIUS:
            residual = radial_ode_residual_at_zero(p)
            density = hamiltonian_density_at_zero(p)
        else:
            residual = radial_ode_residual(p, f_of, r, fprime=fp_of)
            density = hamiltonian_density(p, f_of, fp_of, r)
        samples.append(ProfileSample(r, fv, x1, residual, density))
    return RadialProfile(samples=tuple(samples))


def integrate_profile(
    p: SkyrmeParams,
    r0: float,
    f0: float,
    r_end: float,
    rel_tol: float = 1e-10,
) -> RadialProfile:
    """Integrate the ODE solved for f' with the adaptive 4(5) scheme,
    for cross-validation of the closed form. The start must sit away
    from the degenerate angles f = 0, pi."""
    if r0 <= SINGULAR_RADIUS:
        raise SingularRadiusError("integrate_profile: r0 must be positive")
    if abs(math.sin(f0) * (1.0 + math.cos(f0))) < 1e-8:
        raise DegenerateProfileError(
            f"integrate_profile: initial angle f0={f0!r} is degenerate"
        )
    problem = OdeProblem(
        rhs=lambda rr, yy: [profile_rhs(p, rr, float(yy[0]))],
        t0=r0,
        y0=[f0],
        t_end=r_end,
    )
    trajectory = rkf45_integrate(problem, rel_tol=rel_tol)
    samples = []
    for rr, yy in trajectory:
        fv = float(yy[0])
        fp = profile_rhs(p, rr, fv)
        lhs = (math.cos(fv) + 1.0) * p.winding * fp * math.sin(fv) / rr
        rhs = math.sqrt(p.lambda3 / p.beta) * (
            math.cos(fv) * (p.gamma**2 + 1.0) + p.gamma**2 - 1.0
        )
        density = hamiltonian_density(p, lambda _: fv, lambda _: fp, rr)
        samples.append(
            ProfileSample(rr, fv, -math.cos(fv), lhs - rhs, density)
        )
    return RadialProfile(samples=tuple(samples))
