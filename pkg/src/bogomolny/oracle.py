"""Independent verification machinery: explicit Runge-Kutta integrators,
central finite differences, and residual aggregation.

These are deliberately plain implementations of classical schemes (fixed
tableaus, no dense output) so they stay independent of the closed forms
they are used to cross-check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from .errors import IntegrationBlowupError, StepUnderflowError

Sample = tuple[float, np.ndarray]


@dataclass(frozen=True)
class OdeProblem:
    """First-order system y' = rhs(t, y) with initial state y(t0) = y0."""

    rhs: Callable[[float, np.ndarray], Sequence[float]]
    t0: float
    y0: Sequence[float]
    t_end: float

    def __post_init__(self):
        y0 = np.atleast_1d(np.asarray(self.y0, dtype=float))
        if not np.all(np.isfinite(y0)):
            raise ValueError("OdeProblem: initial state must be finite")
        if not math.isfinite(self.t0) or not math.isfinite(self.t_end):
            raise ValueError("OdeProblem: integration bounds must be finite")
        if self.t_end == self.t0:
            raise ValueError("OdeProblem: t_end must differ from t0")
        object.__setattr__(self, "y0", y0)

    def eval_rhs(self, t: float, y: np.ndarray) -> np.ndarray:
        return np.atleast_1d(np.asarray(self.rhs(t, y), dtype=float))


def rk4_integrate(problem: OdeProblem, step: float) -> list[Sample]:
    """Classical fixed-step 4th-order Runge-Kutta from t0 to t_end.

    The span is split into even steps no longer than ``step`` so the last
    sample lands exactly on t_end. Raises IntegrationBlowupError (carrying
    the last finite time) if the state leaves double-precision range.
    """
    if step <= 0:
        raise ValueError("rk4_integrate: step must be positive")
    span = problem.t_end - problem.t0
    n_steps = max(1, math.ceil(abs(span) / step))
    t = problem.t0
    y = problem.y0.copy()
    samples: list[Sample] = [(t, y.copy())]
    for i in range(n_steps):
        t_next = problem.t0 + span * (i + 1) / n_steps
        h = t_next - t
        k1 = problem.eval_rhs(t, y)
        k2 = problem.eval_rhs(t + 0.5 * h, y + 0.5 * h * k1)
        k3 = problem.eval_rhs(t + 0.5 * h, y + 0.5 * h * k2)
        k4 = problem.eval_rhs(t + h, y + h * k3)
        y = y + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
        if not np.all(np.isfinite(y)):
            raise IntegrationBlowupError(
                f"rk4_integrate: non-finite state after t={t!r}", last_t=t
            )
        t = t_next
        samples.append((t, y.copy()))
    return samples


# Fehlberg 4(5) tableau; the 4th-order solution is propagated and the
# embedded 5th-order one supplies the local error estimate.
_FEHLBERG_C = (0.0, 1 / 4, 3 / 8, 12 / 13, 1.0, 1 / 2)
_FEHLBERG_A = (
    (),
    (1 / 4,),
    (3 / 32, 9 / 32),
    (1932 / 2197, -7200 / 2197, 7296 / 2197),
    (439 / 216, -8.0, 3680 / 513, -845 / 4104),
    (-8 / 27, 2.0, -3554 / 2565, 1859 / 4104, -11 / 40),
)
_FEHLBERG_B4 = (25 / 216, 0.0, 1408 / 2565, 2197 / 4104, -1 / 5, 0.0)
_FEHLBERG_B5 = (16 / 135, 0.0, 6656 / 12825, 28561 / 56430, -9 / 50, 2 / 55)


def rkf45_integrate(
    problem: OdeProblem,
    rel_tol: float,
    abs_tol: float = 1e-12,
    initial_step: float | None = None,
) -> list[Sample]:
    """Adaptive Runge-Kutta-Fehlberg 4(5) from t0 to t_end.

    Steps are rejected and halved while the embedded error estimate
    exceeds abs_tol + rel_tol*|y| in any component; accepted steps may
    grow by up to 5x. Raises StepUnderflowError once the step falls below
    1e-14 of the span, which signals stiffness or a singular rhs.
    """
    if rel_tol <= 0 or abs_tol <= 0:
        raise ValueError("rkf45_integrate: tolerances must be positive")
    span = problem.t_end - problem.t0
    direction = 1.0 if span > 0 else -1.0
    h = span / 100.0 if initial_step is None else direction * abs(initial_step)
    h_min = 1e-14 * abs(span)
    t = problem.t0
    y = problem.y0.copy()
    samples: list[Sample] = [(t, y.copy())]
    k = [np.zeros_like(y) for _ in range(6)]

    while (problem.t_end - t) * direction > 0:
        if abs(h) < h_min:
            raise StepUnderflowError(
                f"rkf45_integrate: step underflow at t={t!r}", t=t
            )
        remaining = problem.t_end - t
        if abs(h) > abs(remaining):
            h = remaining

        with np.errstate(all="ignore"):
            ok = True
            for i in range(6):
                yi = y.copy()
                for j, a in enumerate(_FEHLBERG_A[i]):
                    yi = yi + h * a * k[j]
                if not np.all(np.isfinite(yi)):
                    ok = False
                    break
                k[i] = problem.eval_rhs(t + _FEHLBERG_C[i] * h, yi)
                if not np.all(np.isfinite(k[i])):
                    ok = False
                    break
            if ok:
                y4 = y + h * sum(b * ki for b, ki in zip(_FEHLBERG_B4, k))
                y5 = y + h * sum(b * ki for b, ki in zip(_FEHLBERG_B5, k))
                ok = bool(np.all(np.isfinite(y4)) and np.all(np.isfinite(y5)))

        if not ok:
            h *= 0.5
            continue

        scale = abs_tol + rel_tol * np.maximum(np.abs(y), np.abs(y4))
        ratio = float(np.max(np.abs(y4 - y5) / scale))
        if not math.isfinite(ratio) or ratio > 1.0:
            h *= 0.5
            continue

        t = problem.t_end if h == remaining else t + h
        y = y4
        samples.append((t, y.copy()))
        growth = 5.0 if ratio == 0.0 else min(5.0, max(1.0, 0.9 * ratio**-0.2))
        h *= growth
    return samples


def central_diff(
    f: Callable[[float], float],
    t: float,
    h: float | None = None,
    order: int = 1,
) -> float:
    """Second-order central difference for f' (order=1) or f'' (order=2).

    The default step 1e-5*max(1, |t|) balances truncation against
    round-off for double precision first derivatives.
    """
    if h is None:
        h = 1e-5 * max(1.0, abs(t))
    if h <= 0:
        raise ValueError("central_diff: step must be positive")
    if order == 1:
        return (f(t + h) - f(t - h)) / (2.0 * h)
    if order == 2:
        return (f(t + h) - 2.0 * f(t) + f(t - h)) / (h * h)
    raise ValueError(f"central_diff: unsupported order {order!r}")


@dataclass(frozen=True)
class ResidualReport:
    """Verification summary for one model check.

    ``passed`` holds exactly when max_residual <= tolerance; the L2 norm
    is over the raw residual vector, so l2 <= max*sqrt(n) always.
    """

    model: str
    params: dict = field(default_factory=dict)
    n_samples: int = 0
    max_residual: float = 0.0
    l2_residual: float = 0.0
    tolerance: float = 0.0
    passed: bool = False

    def to_json_dict(self) -> dict:
        return {
            "model": self.model,
            "params": dict(self.params),
            "n_samples": self.n_samples,
            "max_residual": self.max_residual,
            "l2_residual": self.l2_residual,
            "tolerance": self.tolerance,
            "pass": self.passed,
        }

    def summary_line(self) -> str:
        tag = "PASS" if self.passed else "FAIL"
        return (
            f"[{tag}] {self.model}: max={self.max_residual:.3e} "
            f"l2={self.l2_residual:.3e} tol={self.tolerance:.3e} "
            f"n={self.n_samples}"
        )


def aggregate_residuals(
    samples: Sequence[float],
    tolerance: float,
    model: str,
    params: dict | None = None,
) -> ResidualReport:
    """Collapse a residual vector into a pass/fail ResidualReport."""
    arr = np.asarray(list(samples), dtype=float)
    if arr.size == 0:
        raise ValueError("aggregate_residuals: no residual samples")
    if not np.all(np.isfinite(arr)):
        raise ValueError("aggregate_residuals: non-finite residual sample")
    if tolerance <= 0:
        raise ValueError("aggregate_residuals: tolerance must be positive")
    max_r = float(np.max(np.abs(arr)))
    l2 = float(np.sqrt(np.sum(arr * arr)))
    return ResidualReport(
        model=model,
        params=dict(params or {}),
        n_samples=int(arr.size),
        max_residual=max_r,
        l2_residual=l2,
        tolerance=tolerance,
        passed=max_r <= tolerance,
    )
