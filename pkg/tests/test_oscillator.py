"""Oscillator dual-system tests: gauge potential geometry, closed-form
trajectory, and both inclusion directions against the second-order
equation. Oracles: direct arithmetic, analytic derivatives, fixed-step
integration of the first-order flow."""

import math

import numpy as np
import pytest

from bogomolny.errors import BranchError, TurningPointError
from bogomolny.oracle import rk4_integrate
from bogomolny.oscillator import (
    OscillatorProblem,
    Trajectory,
    bogomolny_residual_of_general_el,
    bogomolny_residual_sweep,
    c2_from_initial,
    closed_form_x,
    closed_form_xdot,
    dual_ode_problem,
    dual_system_rhs,
    euler_lagrange_residual,
    gauge_potential,
    solve_trajectory,
    turning_time,
)

UNIT = OscillatorProblem(m=1.0, omega=1.0, c1=1.0)
GOLDEN = OscillatorProblem(m=1.0, omega=2.0, c1=4.0, c3=0.5)


def test_problem_validation():
    with pytest.raises(ValueError):
        OscillatorProblem(m=0.0, omega=1.0, c1=1.0)
    with pytest.raises(ValueError):
        OscillatorProblem(m=1.0, omega=-2.0, c1=1.0)
    with pytest.raises(ValueError):
        OscillatorProblem(m=1.0, omega=1.0, c1=math.inf)
    with pytest.raises(ValueError):
        OscillatorProblem(m=1.0, omega=1.0, c1=1.0, g_sign=2)
    with pytest.raises(TurningPointError):
        OscillatorProblem(m=1.0, omega=1.0, c1=1.0, c3=1.5)


def test_gauge_potential_values():
    assert gauge_potential(UNIT, 0.0) == 1.0
    assert gauge_potential(UNIT, 1.0) == 0.0
    flipped = OscillatorProblem(m=1.0, omega=2.0, c1=4.0, g_sign=-1)
    assert gauge_potential(flipped, 0.5) == pytest.approx(
        -math.sqrt(3.0), abs=1e-12
    )


def test_gauge_potential_clamps_and_rejects():
    # Within round-off slack of the amplitude the root clamps to 0.
    assert gauge_potential(UNIT, 1.0 + 1e-14) == 0.0
    with pytest.raises(TurningPointError):
        gauge_potential(UNIT, 1.001)


def test_dual_system_rhs_values():
    assert dual_system_rhs(UNIT, 0.0) == -1.0
    assert dual_system_rhs(UNIT, 1.0) == 0.0
    heavy = OscillatorProblem(m=2.0, omega=1.0, c1=4.0, g_sign=-1)
    assert dual_system_rhs(heavy, 0.0) == 1.0


def test_c2_from_initial_values():
    assert c2_from_initial(UNIT) == 0.0
    assert c2_from_initial(GOLDEN) == pytest.approx(
        math.pi / 12.0, abs=1e-12
    )
    quarter = OscillatorProblem(m=1.0, omega=1.0, c1=2.0, c3=1.0)
    assert c2_from_initial(quarter) == pytest.approx(
        math.pi / 4.0, abs=1e-12
    )


def test_c2_rejects_turning_point_start():
    boundary = OscillatorProblem(m=1.0, omega=1.0, c1=1.0, c3=1.0)
    with pytest.raises(TurningPointError):
        c2_from_initial(boundary)


def test_closed_form_values():
    assert closed_form_x(UNIT, 0.0, 0.0) == 0.0
    assert closed_form_x(UNIT, math.pi / 4.0, 0.0) == pytest.approx(
        math.sqrt(2.0) / 2.0, abs=1e-12
    )
    assert closed_form_x(GOLDEN, math.pi / 12.0, 0.0) == pytest.approx(
        0.5, abs=1e-12
    )


def test_closed_form_branch_error():
    with pytest.raises(BranchError):
        closed_form_x(UNIT, 0.0, math.pi / 2.0)
    with pytest.raises(BranchError):
        closed_form_x(UNIT, 0.0, -2.0)
    with pytest.raises(BranchError):
        closed_form_xdot(UNIT, 0.0, math.pi / 2.0 - 1e-12)


def test_branch_identity_against_sine_form():
    rng = np.random.default_rng(11)
    for _ in range(1000):
        p = OscillatorProblem(
            m=float(rng.uniform(0.5, 2.0)),
            omega=float(rng.uniform(0.5, 2.0)),
            c1=float(rng.uniform(0.5, 4.0)),
        )
        c2 = float(rng.uniform(-1.0, 1.0))
        phase = float(rng.uniform(-math.pi / 2 + 0.01, math.pi / 2 - 0.01))
        t = c2 - phase / p.omega
        sine_form = math.sqrt(p.c1) / (p.omega * p.m) * math.sin(phase)
        assert abs(closed_form_x(p, c2, t) - sine_form) <= 1e-12


def test_closed_form_satisfies_dual_system():
    c2 = c2_from_initial(GOLDEN)
    t_hi = turning_time(GOLDEN, c2)
    for t in np.linspace(0.0, 0.95 * t_hi, 200):
        t = float(t)
        x = closed_form_x(GOLDEN, c2, t)
        assert abs(
            closed_form_xdot(GOLDEN, c2, t) - dual_system_rhs(GOLDEN, x)
        ) <= 1e-7


def test_closed_form_satisfies_euler_lagrange():
    c2 = c2_from_initial(GOLDEN)
    t_hi = turning_time(GOLDEN, c2)
    x_of = lambda t: closed_form_x(GOLDEN, c2, t)
    for t in np.linspace(0.05, 0.9 * t_hi, 100):
        residual = euler_lagrange_residual(
            x_of, GOLDEN.m, GOLDEN.omega, float(t)
        )
        assert abs(residual) <= 1e-5


def test_euler_lagrange_known_functions():
    assert abs(
        euler_lagrange_residual(lambda t: math.sin(t), 1.0, 1.0, 0.7)
    ) <= 1e-6
    # x = t has zero second derivative, so the residual is just w^2 x.
    assert euler_lagrange_residual(lambda t: t, 1.0, 1.0, 2.0) == (
        pytest.approx(2.0, abs=1e-6)
    )


def test_general_solution_matching_closed_form_is_admissible():
    p = OscillatorProblem(m=1.0, omega=1.0, c1=1.0, c3=0.3)
    c2 = c2_from_initial(p)
    amp = math.sqrt(p.c1) / (p.omega * p.m)
    # Expand sin(w(c2-t)) to read off the A sin + B cos coefficients.
    A = -amp * math.cos(p.omega * c2)
    B = amp * math.sin(p.omega * c2)
    for t in (0.0, 0.4, 0.9):
        r1, r2 = bogomolny_residual_of_general_el(A, B, p, t)
        assert abs(r1) <= 1e-9
        assert abs(r2) <= 1e-9


def test_trivial_solution_fails_second_dual_equation():
    r1, r2 = bogomolny_residual_of_general_el(0.0, 0.0, UNIT, 1.3)
    assert r1 == 0.0
    assert r2 == pytest.approx(math.sqrt(UNIT.c1), abs=1e-12)


def test_general_solution_not_in_dual_solution_set():
    # Amplitude sqrt(2) exceeds the turning amplitude 1, so part of the
    # period is inadmissible; where admissible the residual is large.
    sweep = bogomolny_residual_sweep(
        1.0, 1.0, UNIT, np.linspace(0.0, 2.0 * math.pi, 400)
    )
    assert 0 < len(sweep) < 400
    assert max(abs(r2) for _, _, r2 in sweep) >= 0.1


def test_inadmissible_time_raises_per_sample():
    with pytest.raises(TurningPointError):
        bogomolny_residual_of_general_el(1.0, 1.0, UNIT, 0.1)


def test_conservation_along_rk4_trajectory():
    c2 = c2_from_initial(GOLDEN)
    t_hi = 0.9 * turning_time(GOLDEN, c2)
    samples = rk4_integrate(dual_ode_problem(GOLDEN, t_hi), step=t_hi / 1000)
    for _, y in samples:
        x = float(y[0])
        defect = (
            gauge_potential(GOLDEN, x) ** 2
            + (GOLDEN.m * GOLDEN.omega * x) ** 2
            - GOLDEN.c1
        )
        assert abs(defect) <= 1e-9 * GOLDEN.c1


def test_rk4_matches_closed_form():
    c2 = c2_from_initial(GOLDEN)
    t_hi = 0.9 * turning_time(GOLDEN, c2)
    samples = rk4_integrate(dual_ode_problem(GOLDEN, t_hi), step=t_hi / 2000)
    for t, y in samples:
        assert abs(float(y[0]) - closed_form_x(GOLDEN, c2, t)) <= 1e-6


def test_turning_time():
    assert turning_time(UNIT, 0.0) == pytest.approx(math.pi / 2.0)
    c2 = c2_from_initial(GOLDEN)
    # The closed form is still defined just inside the turning time and
    # undefined just beyond it.
    closed_form_x(GOLDEN, c2, 0.999 * turning_time(GOLDEN, c2))
    with pytest.raises(BranchError):
        closed_form_x(GOLDEN, c2, 1.001 * turning_time(GOLDEN, c2))


def test_solve_trajectory_contents():
    trajectory = solve_trajectory(GOLDEN, t_end=0.6, n_samples=61)
    assert len(trajectory.samples) == 61
    t0, x0, xdot0 = trajectory.samples[0]
    assert t0 == 0.0
    assert x0 == pytest.approx(GOLDEN.c3, abs=1e-12)
    assert xdot0 == pytest.approx(
        closed_form_xdot(GOLDEN, trajectory.c2, 0.0)
    )
    times = [s[0] for s in trajectory.samples]
    assert times == sorted(times)


def test_solve_trajectory_rejects_bad_window():
    with pytest.raises(BranchError):
        solve_trajectory(UNIT, t_end=2.0)
    with pytest.raises(ValueError):
        solve_trajectory(UNIT, t_end=1.0, n_samples=1)


def test_trajectory_validation():
    with pytest.raises(ValueError):
        Trajectory(samples=((0.0, 0.0, 0.0), (0.0, 0.1, 0.1)), c2=0.0)
    with pytest.raises(ValueError):
        Trajectory(samples=((0.0, math.nan, 0.0),), c2=0.0)
