"""Harmonic oscillator in its dual first-order (Bogomolny) form.

The second-order equation m x'' + m w^2 x = 0 is traded for the pair

    -m w^2 x + G_x x' = 0,      G + m x' = 0,

where the gauge potential G(x) = +-sqrt(c1 - m^2 w^2 x^2) absorbs one
integration. Propagation uses only the second equation x' = -G/m; the
first is an identity on the gauge branch and is checked as a residual.
The closed-form trajectory lives on the principal branch
w(c2 - t) in (-pi/2, pi/2) and is discontinuous outside it, so branch
violations raise instead of silently flipping sign.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .errors import BranchError, ModelDomainError, TurningPointError
from .oracle import OdeProblem, central_diff

HALF_PI = math.pi / 2.0
# Principal-branch guard: reject phases within this margin of +-pi/2,
# where tan blows up and the closed form loses meaning.
BRANCH_MARGIN = 1e-9
# Round-off slack under the square root at the turning amplitude.
CLAMP_SLACK = 1e-12


@dataclass(frozen=True)
class OscillatorProblem:
    """Parameters of the dual oscillator system.

    c1 is the gauge integration constant (fixes the turning amplitude
    sqrt(c1)/(m*omega)), c3 the initial position x(0), g_sign the sign
    branch of the gauge potential.
    """

    m: float
    omega: float
    c1: float
    c3: float = 0.0
    g_sign: int = 1

    def __post_init__(self):
        for name in ("m", "omega", "c1"):
            value = getattr(self, name)
            if not (math.isfinite(value) and value > 0):
                raise ValueError(
                    f"OscillatorProblem: {name} must be positive and finite"
                )
        if not math.isfinite(self.c3):
            raise ValueError("OscillatorProblem: c3 must be finite")
        if self.g_sign not in (1, -1):
            raise ValueError("OscillatorProblem: g_sign must be +1 or -1")
        if self.c1 - (self.m * self.omega * self.c3) ** 2 < 0:
            raise TurningPointError(
                "OscillatorProblem: initial position beyond turning "
                f"amplitude {self.amplitude!r}"
            )

    @property
    def amplitude(self) -> float:
        return math.sqrt(self.c1) / (self.m * self.omega)


def gauge_potential(p: OscillatorProblem, x: float) -> float:
    """G(x) = g_sign * sqrt(c1 - m^2 w^2 x^2), clamped within round-off."""
    s = p.c1 - (p.m * p.omega * x) ** 2
    if s < -CLAMP_SLACK * p.c1:
        raise TurningPointError(
            f"gauge_potential: x={x!r} beyond turning amplitude "
            f"{p.amplitude!r}"
        )
    return p.g_sign * math.sqrt(max(0.0, s))


def dual_system_rhs(p: OscillatorProblem, x: float) -> float:
    """First-order flow x' = -G(x)/m."""
    return -gauge_potential(p, x) / p.m


def c2_from_initial(p: OscillatorProblem) -> float:
    """Phase constant c2 = arctan(m w c3 / sqrt(c1 - c3^2 w^2 m^2)) / w.

    Turning-point initial data (vanishing discriminant) is rejected:
    there the closed form would start exactly on the branch edge.
    """
    disc = p.c1 - (p.m * p.omega * p.c3) ** 2
    if disc <= 0.0:
        raise TurningPointError(
            "c2_from_initial: initial position at or beyond the turning "
            "amplitude leaves the phase constant undefined"
        )
    return math.atan(p.m * p.omega * p.c3 / math.sqrt(disc)) / p.omega


def _branch_phase(p: OscillatorProblem, c2: float, t: float) -> float:
    phase = p.omega * (c2 - t)
    if abs(phase) >= HALF_PI - BRANCH_MARGIN:
        raise BranchError(
            f"closed form evaluated at phase {phase!r}, outside the "
            "principal branch (-pi/2, pi/2)"
        )
    return phase


def closed_form_x(p: OscillatorProblem, c2: float, t: float) -> float:
    """x(t) = sqrt(c1) tan(w(c2-t)) / (w m sqrt(tan^2(w(c2-t)) + 1)).

    Evaluated literally; on the principal branch this equals
    (sqrt(c1)/(w m)) sin(w(c2-t)).
    """
    phase = _branch_phase(p, c2, t)
    tan_ph = math.tan(phase)
    return (
        math.sqrt(p.c1)
        * tan_ph
        / (p.omega * p.m * math.sqrt(tan_ph * tan_ph + 1.0))
    )


def closed_form_xdot(p: OscillatorProblem, c2: float, t: float) -> float:
    """Analytic time derivative -(sqrt(c1)/m) cos(w(c2-t)) of the closed form."""
    phase = _branch_phase(p, c2, t)
    return -math.sqrt(p.c1) / p.m * math.cos(phase)


def turning_time(p: OscillatorProblem, c2: float) -> float:
    """First forward time where the phase w(c2-t) hits -pi/2 (G -> 0)."""
    return c2 + HALF_PI / p.omega


def euler_lagrange_residual(
    x: Callable[[float], float],
    m: float,
    omega: float,
    t: float,
    h: float = 1e-5,
) -> float:
    """m x''(t) + m w^2 x(t) with x'' from a central second difference."""
    return m * central_diff(x, t, h=h, order=2) + m * omega * omega * x(t)


def bogomolny_residual_of_general_el(
    A: float, B: float, p: OscillatorProblem, t: float
) -> tuple[float, float]:
    """Residuals of the dual pair for the general second-order solution
    x(t) = A sin(wt) + B cos(wt).

    Returns (r1, r2) with r1 = -m w^2 x + G_x x' and r2 = G + m x'; both
    derivatives are analytic. Strictly inadmissible x (at or beyond the
    turning amplitude, where G_x diverges) raises a turning-point error.
    """
    wt = p.omega * t
    x = A * math.sin(wt) + B * math.cos(wt)
    xdot = A * p.omega * math.cos(wt) - B * p.omega * math.sin(wt)
    s = p.c1 - (p.m * p.omega * x) ** 2
    if s <= 0.0:
        raise TurningPointError(
            f"general solution at t={t!r} reaches |x|={abs(x)!r} at or "
            f"beyond the turning amplitude {p.amplitude!r}"
        )
    g = p.g_sign * math.sqrt(s)
    g_x = -p.g_sign * p.m**2 * p.omega**2 * x / math.sqrt(s)
    r1 = -p.m * p.omega**2 * x + g_x * xdot
    r2 = g + p.m * xdot
    return r1, r2


def bogomolny_residual_sweep(
    A: float,
    B: float,
    p: OscillatorProblem,
    t_values: Sequence[float],
) -> list[tuple[float, float, float]]:
    """(t, r1, r2) at every admissible sample time; inadmissible times
    (general solution beyond the turning amplitude) are skipped."""
    out = []
    for t in t_values:
        try:
            r1, r2 = bogomolny_residual_of_general_el(A, B, p, float(t))
        except ModelDomainError:
            continue
        out.append((float(t), r1, r2))
    return out


def dual_ode_problem(p: OscillatorProblem, t_end: float) -> OdeProblem:
    """The dual flow as a 1-component ODE problem from x(0) = c3."""
    return OdeProblem(
        rhs=lambda t, y: [dual_system_rhs(p, float(y[0]))],
        t0=0.0,
        y0=[p.c3],
        t_end=t_end,
    )


@dataclass(frozen=True)
class Trajectory:
    """Sampled closed-form trajectory with its phase constant."""

    samples: tuple[tuple[float, float, float], ...]
    c2: float

    def __post_init__(self):
        times = [s[0] for s in self.samples]
        if any(b <= a for a, b in zip(times, times[1:])):
            raise ValueError("Trajectory: times must be strictly increasing")
        if not all(math.isfinite(v) for s in self.samples for v in s):
            raise ValueError("Trajectory: non-finite sample")

    def csv_rows(self):
        return list(self.samples)


def solve_trajectory(
    p: OscillatorProblem, t_end: float, n_samples: int = 501
) -> Trajectory:
    """Sample the closed form (position and analytic velocity) on
    [0, t_end]. Raises a branch error if the window leaves the principal
    branch, rather than returning a discontinuous trajectory."""
    if n_samples < 2:
        raise ValueError("solve_trajectory: need at least 2 samples")
    c2 = c2_from_initial(p)
    rows = []
    for t in np.linspace(0.0, t_end, n_samples):
        t = float(t)
        rows.append((t, closed_form_x(p, c2, t), closed_form_xdot(p, c2, t)))
    return Trajectory(samples=tuple(rows), c2=c2)
