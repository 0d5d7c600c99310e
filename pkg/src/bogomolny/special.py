"""Self-contained special functions: principal-branch Lambert W and a
guarded arccos.

The radial closed form needs W0 accurate to near machine precision over
many orders of magnitude, so the evaluation keeps its own initial guess
plus Halley refinement instead of deferring to an external library.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ModelDomainError

#: Lower edge of the W0 domain, -1/e.
BRANCH_POINT = -math.exp(-1.0)

_MAX_ITER = 60
_STEP_TOL = 2.2e-16


@dataclass(frozen=True)
class LambertEval:
    """One W0 evaluation together with its defining-identity residual."""

    input: float
    value: float
    residual: float


def _initial_guess(y: float) -> float:
    # Branch-point series handles all of (-1/e, -0.2]; the Taylor series
    # covers a neighbourhood of 0; log-based guesses take over above.
    if y < 0.3:
        return y * (1.0 - y + 1.5 * y * y)
    if y < math.e:
        return 0.7 * math.log1p(y)
    lg = math.log(y)
    return lg - math.log(lg)


def lambert_w0(y: float) -> float:
    """Principal branch W0(y): the w >= -1 solving w*exp(w) = y.

    Accepts y >= -1/e (with 1e-15 slack below the branch point, where the
    input is clamped). Accuracy is ~1e-15 relative except within ~1e-9 of
    the branch point, where it degrades to ~1e-6 absolute because the
    inverse function has a square-root singularity there.
    """
    if not math.isfinite(y):
        raise ModelDomainError(f"lambert_w0: non-finite argument {y!r}")
    if y < BRANCH_POINT - 1e-15:
        raise ModelDomainError(
            f"lambert_w0: argument {y!r} below the branch point -1/e"
        )
    if y == 0.0:
        return 0.0
    y = max(y, BRANCH_POINT)

    if y < -0.2:
        p = math.sqrt(2.0 * (math.e * y + 1.0))
        w = -1.0 + p - p * p / 3.0 + 11.0 * p**3 / 72.0
        # Halley's denominator degenerates at w = -1; the series is
        # already accurate to O(p^4) here.
        if p < 1e-4:
            return w
    else:
        w = _initial_guess(y)

    for _ in range(_MAX_ITER):
        ew = math.exp(w)
        f = w * ew - y
        wp1 = w + 1.0
        denom = ew * wp1 - (w + 2.0) * f / (2.0 * wp1)
        if denom == 0.0 or not math.isfinite(denom):
            break
        dw = f / denom
        w -= dw
        if abs(dw) <= _STEP_TOL * (2.0 + abs(w)):
            break
    return w


def lambert_eval(y: float) -> LambertEval:
    """Evaluate W0 and report |w*exp(w) - y| alongside the value."""
    w = lambert_w0(y)
    return LambertEval(input=y, value=w, residual=abs(w * math.exp(w) - y))


def acos_clamped(x: float, tol: float = 1e-9) -> float:
    """arccos with the argument clamped to [-1, 1].

    Arguments farther than ``tol`` outside the interval are rejected; the
    clamp only absorbs round-off from upstream closed forms.
    """
    if abs(x) > 1.0 + tol:
        raise ModelDomainError(
            f"acos_clamped: argument {x!r} outside [-1, 1] beyond tolerance {tol!r}"
        )
    return math.acos(min(1.0, max(-1.0, x)))
