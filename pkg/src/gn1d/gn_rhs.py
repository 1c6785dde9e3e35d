"""Right-hand sides: the nonlinear evolution and its condensed quasilinear form.

The evolution system is

    zeta_t + (h u)_x = 0,
    T[ u_t + eps u u_x ] + h zeta_x + eps mu h Q(u) = 0,

with h = 1 + eps (zeta - b) and Q the quadratic dispersive source.  The
condensed form rewrites the same dynamics as U_t + A[U] U_x + B(U) = 0,
splitting eps mu h Q(u) = Q1[U] u_x + q2(U) so that only first-order
derivatives of the unknowns appear; both forms are evaluated here and
must agree to rounding on band-limited fields.
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

from .core import Bathymetry, Grid, Parameters, State, compute_depth
from .grid_ops import d1_spectral
from .t_operator import TOperator, assemble_T, solve_T


class Tendency(NamedTuple):
    dzeta: np.ndarray
    du: np.ndarray


def q_total(
    h: np.ndarray, u: np.ndarray, bathymetry: Bathymetry, params: Parameters, grid: Grid
) -> np.ndarray:
    """The dispersive source Q[h, eps b](u) (unscaled)."""
    eps = params.epsilon
    bx, bxx = bathymetry.b_x, bathymetry.b_xx
    ux = d1_spectral(u, grid)
    return (
        (2.0 / (3.0 * h)) * d1_spectral(h**3 * ux**2, grid)
        + eps * h * ux**2 * bx
        + (eps / (2.0 * h)) * d1_spectral(h**2 * u**2 * bxx, grid)
        + eps**2 * u**2 * bxx * bx
    )


def q1_apply(
    ref: State, f: np.ndarray, bathymetry: Bathymetry, params: Parameters, grid: Grid
) -> np.ndarray:
    """First-order part of the dispersive source, applied to a field f."""
    eps, mu = params.epsilon, params.mu
    bx, bxx = bathymetry.b_x, bathymetry.b_xx
    h = compute_depth(ref, bathymetry, params).values
    ux = d1_spectral(ref.u, grid)
    return (
        (2.0 / 3.0) * eps * mu * d1_spectral(h**3 * ux * f, grid)
        + eps**2 * mu * h**2 * bx * ux * f
        + eps**2 * mu * h**2 * bxx * ref.u * f
    )


def q2_eval(ref: State, bathymetry: Bathymetry, params: Parameters, grid: Grid) -> np.ndarray:
    """Zero-order remainder of the dispersive source."""
    eps, mu = params.epsilon, params.mu
    bx, bxx = bathymetry.b_x, bathymetry.b_xx
    h = compute_depth(ref, bathymetry, params).values
    u = ref.u
    return eps**3 * mu * h * bxx * bx * u**2 + 0.5 * eps**2 * mu * d1_spectral(
        h**2 * bxx, grid
    ) * u**2


def nonlinear_rhs(
    state: State, bathymetry: Bathymetry, params: Parameters, grid: Grid
) -> Tendency:
    """Tendency of the full nonlinear system at one state.

    Assembles and factorizes the dispersive operator for the current
    depth; propagates DepthError / FactorizationError to the caller,
    which treats them as blow-up events.
    """
    eps, mu = params.epsilon, params.mu
    h = compute_depth(state, bathymetry, params).values
    op = assemble_T(h, bathymetry, params, grid)
    dzeta = -d1_spectral(h * state.u, grid)
    zx = d1_spectral(state.zeta, grid)
    q = q_total(h, state.u, bathymetry, params, grid)
    du = -eps * state.u * d1_spectral(state.u, grid) - solve_T(op, h * zx + eps * mu * h * q)
    return Tendency(dzeta, du)


def apply_A(
    ref: State,
    fields: tuple[np.ndarray, np.ndarray],
    bathymetry: Bathymetry,
    params: Parameters,
    grid: Grid,
    op: TOperator | None = None,
) -> tuple[np.ndarray, np.ndarray]:
    """Advection-structure map of the condensed form applied to (v1, v2)."""
    eps = params.epsilon
    v1, v2 = fields
    h = compute_depth(ref, bathymetry, params).values
    if op is None:
        op = assemble_T(h, bathymetry, params, grid)
    a1 = eps * ref.u * v1 + h * v2
    a2 = solve_T(op, h * v1 + q1_apply(ref, v2, bathymetry, params, grid)) + eps * ref.u * v2
    return a1, a2


def eval_B(
    ref: State,
    bathymetry: Bathymetry,
    params: Parameters,
    grid: Grid,
    op: TOperator | None = None,
) -> tuple[np.ndarray, np.ndarray]:
    """Zero-order source of the condensed form."""
    if op is None:
        h = compute_depth(ref, bathymetry, params).values
        op = assemble_T(h, bathymetry, params, grid)
    b1 = -params.epsilon * bathymetry.b_x * ref.u
    b2 = solve_T(op, q2_eval(ref, bathymetry, params, grid))
    return b1, b2


def condensed_rhs(
    state: State, bathymetry: Bathymetry, params: Parameters, grid: Grid
) -> Tendency:
    """Tendency evaluated through the condensed quasilinear form."""
    h = compute_depth(state, bathymetry, params).values
    op = assemble_T(h, bathymetry, params, grid)
    zx = d1_spectral(state.zeta, grid)
    ux = d1_spectral(state.u, grid)
    a1, a2 = apply_A(state, (zx, ux), bathymetry, params, grid, op=op)
    b1, b2 = eval_B(state, bathymetry, params, grid, op=op)
    return Tendency(-(a1 + b1), -(a2 + b2))
