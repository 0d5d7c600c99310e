"""Planar continuous Heisenberg model: Cauchy-Riemann pair from the
first-order reduction, and boundary-value construction of its solution.

The reduction leaves two real fields (U, V) obeying

    V_y - U_x = 0,      V_x + U_y = 0,

whose general solution is U = F1(y-ix) + F2(y+ix),
V = -i F1(y-ix) + i F2(y+ix) + C1 with holomorphic F1, F2 and a real
gauge constant C1. Prescribing U(x,0) = f1(x) and V(x,0) = f2(x) fixes

    F1(-ix) = (f1(x) + i(f2(x) - C1)) / 2,
    F2(ix)  = (f1(x) - i(f2(x) - C1)) / 2,

which for polynomial boundary data converts to exact complex-coefficient
polynomials by formal substitution (powers of i, no fitting). The F2
coefficients come out conjugate to F1's, which makes U and V real by
construction, exactly in floating point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .errors import ModelDomainError, RealityViolationError

# i**k for k mod 4; kept as exact literals so coefficient construction
# involves no complex multiplication round-off.
_I_POW = (1.0 + 0.0j, 1.0j, -1.0 + 0.0j, -1.0j)

REALITY_TOL = 1e-10


def _horner(coefficients: Sequence[complex], z: complex) -> complex:
    acc = 0.0 + 0.0j
    for c in reversed(coefficients):
        acc = acc * z + c
    return acc


@dataclass(frozen=True)
class BoundaryPolynomial:
    """Real polynomial boundary data, coefficients in ascending degree."""

    coefficients: tuple[float, ...]

    def __post_init__(self):
        coeffs = tuple(float(c) for c in self.coefficients)
        if not coeffs:
            coeffs = (0.0,)
        if not all(math.isfinite(c) for c in coeffs):
            raise ValueError("BoundaryPolynomial: non-finite coefficient")
        object.__setattr__(self, "coefficients", coeffs)

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, x):
        return _horner(self.coefficients, x)


@dataclass(frozen=True)
class ComplexPolynomial:
    """Polynomial with complex coefficients in ascending degree."""

    coefficients: tuple[complex, ...]

    def __post_init__(self):
        coeffs = tuple(complex(c) for c in self.coefficients)
        if not coeffs:
            coeffs = (0.0 + 0.0j,)
        if not all(
            math.isfinite(c.real) and math.isfinite(c.imag) for c in coeffs
        ):
            raise ValueError("ComplexPolynomial: non-finite coefficient")
        object.__setattr__(self, "coefficients", coeffs)

    def __call__(self, z: complex) -> complex:
        return _horner(self.coefficients, z)


@dataclass(frozen=True)
class HolomorphicDecomposition:
    F1: ComplexPolynomial
    F2: ComplexPolynomial
    C1: float


@dataclass(frozen=True)
class SpinVector:
    """Classical unit spin; the norm is enforced to 1e-12."""

    sx: float
    sy: float
    sz: float

    def __post_init__(self):
        norm_sq = self.sx**2 + self.sy**2 + self.sz**2
        if abs(norm_sq - 1.0) > 1e-12:
            raise ValueError(
                f"SpinVector: squared norm {norm_sq!r} deviates from 1"
            )


def stereographic_w(s: SpinVector) -> complex:
    """Stereographic image w = (sx + i sy)/(1 + sz) from the north pole."""
    if s.sz <= -1.0 + 1e-12:
        raise ModelDomainError(
            "stereographic_w: projection undefined at the south pole"
        )
    return complex(s.sx, s.sy) / (1.0 + s.sz)


def build_decomposition(
    f1: BoundaryPolynomial, f2: BoundaryPolynomial, C1: float
) -> HolomorphicDecomposition:
    """Invert the boundary conditions U(x,0) = f1, V(x,0) = f2 into F1, F2.

    g(x) = (f1(x) + i(f2(x) - C1))/2 satisfies F1(-ix) = g(x), so
    F1(z) = g(iz) and the k-th coefficient picks up an exact factor i^k.
    F2's coefficients are the conjugates of F1's.
    """
    if not math.isfinite(C1):
        raise ValueError("build_decomposition: C1 must be finite")
    degree = max(f1.degree, f2.degree)
    a_coeffs = []
    for k in range(degree + 1):
        c1k = f1.coefficients[k] if k <= f1.degree else 0.0
        c2k = f2.coefficients[k] if k <= f2.degree else 0.0
        if k == 0:
            c2k -= C1
        g_k = 0.5 * complex(c1k, c2k)
        a_coeffs.append(g_k * _I_POW[k % 4])
    b_coeffs = [a.conjugate() for a in a_coeffs]
    return HolomorphicDecomposition(
        F1=ComplexPolynomial(tuple(a_coeffs)),
        F2=ComplexPolynomial(tuple(b_coeffs)),
        C1=float(C1),
    )


def evaluate_fields(
    d: HolomorphicDecomposition, x: float, y: float
) -> tuple[float, float]:
    """U = F1(y-ix) + F2(y+ix) and V = -i F1(y-ix) + i F2(y+ix) + C1.

    Both combinations are evaluated literally and their imaginary parts
    checked; a residue above 1e-10 means the decomposition was not built
    with conjugate-paired coefficients and is rejected.
    """
    z1 = complex(y, -x)
    z2 = complex(y, x)
    w1 = d.F1(z1)
    w2 = d.F2(z2)
    u = w1 + w2
    v = -1j * w1 + 1j * w2 + d.C1
    if abs(u.imag) > REALITY_TOL or abs(v.imag) > REALITY_TOL:
        raise RealityViolationError(
            f"evaluate_fields: imaginary residue ({u.imag!r}, {v.imag!r}) "
            f"at (x={x!r}, y={y!r})"
        )
    return u.real, v.real


def cr_residual(
    d: HolomorphicDecomposition, x: float, y: float, h: float = 1e-5
) -> tuple[float, float]:
    """Central-difference residuals (V_y - U_x, V_x + U_y)."""
    if h <= 0:
        raise ValueError("cr_residual: step must be positive")
    u_xp, v_xp = evaluate_fields(d, x + h, y)
    u_xm, v_xm = evaluate_fields(d, x - h, y)
    u_yp, v_yp = evaluate_fields(d, x, y + h)
    u_ym, v_ym = evaluate_fields(d, x, y - h)
    u_x = (u_xp - u_xm) / (2.0 * h)
    u_y = (u_yp - u_ym) / (2.0 * h)
    v_x = (v_xp - v_xm) / (2.0 * h)
    v_y = (v_yp - v_ym) / (2.0 * h)
    return v_y - u_x, v_x + u_y


def energy_density(
    d: HolomorphicDecomposition, x: float, y: float, h: float = 1e-5
) -> float:
    """Sigma-model density grad(w).grad(w*)/(1+|w|^2)^2 for w = U + iV,
    with finite-difference gradients."""
    if h <= 0:
        raise ValueError("energy_density: step must be positive")

    def w_at(px: float, py: float) -> complex:
        u, v = evaluate_fields(d, px, py)
        return complex(u, v)

    w = w_at(x, y)
    w_x = (w_at(x + h, y) - w_at(x - h, y)) / (2.0 * h)
    w_y = (w_at(x, y + h) - w_at(x, y - h)) / (2.0 * h)
    grad_sq = abs(w_x) ** 2 + abs(w_y) ** 2
    return grad_sq / (1.0 + abs(w) ** 2) ** 2


def harmonic_residual(
    d: HolomorphicDecomposition, x: float, y: float, h: float = 1e-4
) -> tuple[float, float]:
    """Five-point Laplacians of U and V; both vanish for solutions of
    the Cauchy-Riemann pair. The wider default step reflects the extra
    precision loss of second differences."""
    if h <= 0:
        raise ValueError("harmonic_residual: step must be positive")
    u_c, v_c = evaluate_fields(d, x, y)
    u_xp, v_xp = evaluate_fields(d, x + h, y)
    u_xm, v_xm = evaluate_fields(d, x - h, y)
    u_yp, v_yp = evaluate_fields(d, x, y + h)
    u_ym, v_ym = evaluate_fields(d, x, y - h)
    lap_u = (u_xp + u_xm + u_yp + u_ym - 4.0 * u_c) / (h * h)
    lap_v = (v_xp + v_xm + v_yp + v_ym - 4.0 * v_c) / (h * h)
    return lap_u, lap_v


def field_grid_rows(
    d: HolomorphicDecomposition,
    n: int,
    lo: float = -3.0,
    hi: float = 3.0,
    h: float = 1e-5,
) -> list[tuple[float, float, float, float, float]]:
    """(x, y, U, V, energy_density) rows over an n-by-n grid on
    [lo, hi]^2, row-major with y outer and x inner."""
    if n < 2:
        raise ValueError("field_grid_rows: need at least a 2x2 grid")
    if not hi > lo:
        raise ValueError("field_grid_rows: grid bounds must satisfy hi > lo")
    coords = [lo + (hi - lo) * i / (n - 1) for i in range(n)]
    rows = []
    for y in coords:
        for x in coords:
            u, v = evaluate_fields(d, x, y)
            rows.append((x, y, u, v, energy_density(d, x, y, h=h)))
    return rows


def decomposition_payload(d: HolomorphicDecomposition) -> dict:
    """JSON document: real/imag coefficient arrays for F1, F2 plus C1."""
    def poly_dict(p: ComplexPolynomial) -> dict:
        return {
            "real": [c.real for c in p.coefficients],
            "imag": [c.imag for c in p.coefficients],
        }

    return {"F1": poly_dict(d.F1), "F2": poly_dict(d.F2), "C1": d.C1}
