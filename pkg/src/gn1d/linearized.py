"""Linearization about a reference trajectory, mollified variant, iteration.

The linear solver advances U_t + A[Ubar(t)] U_x + B(Ubar(t)) = 0, where
the coefficient state Ubar is interpolated from stored snapshots.  With a
frequency cutoff J applied around the advection map the system becomes
U_t + J A[Ubar] J U_x + B(Ubar) = 0, which is the regularized problem the
cutoff-removal study solves on a shrinking ladder of cutoff scales.  The
fixed-point iteration re-feeds each linear solution as the next
coefficient trajectory, starting from the constant-in-time initial state.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import Bathymetry, Grid, Parameters, State, compute_depth, require_depth
from .diagnostics import es_norm
from .gn_rhs import Tendency, apply_A, eval_B
from .grid_ops import apply_symbol, d1_spectral, dealias
from .t_operator import assemble_T
from .time_integrator import StepControl, cfl_dt


def cutoff_profile(r) -> np.ndarray:
    """Smooth frequency cutoff: 1 on [0, 1], 0 on [2, inf), C^inf between.

    The transition uses the standard exp(-1/t) bump bridge, so every
    derivative vanishes at both ends of [1, 2].
    """
    r = np.abs(np.asarray(r, dtype=float))
    t = 2.0 - r  # rescaled transition coordinate, 1 -> keep, 0 -> drop
    ga = np.zeros_like(t)
    m = t > 0.0
    ga[m] = np.exp(-1.0 / t[m])
    gb = np.zeros_like(t)
    m = (1.0 - t) > 0.0
    gb[m] = np.exp(-1.0 / (1.0 - t[m]))
    out = ga / (ga + gb)
    out[r <= 1.0] = 1.0
    out[r >= 2.0] = 0.0
    return out


@dataclass(frozen=True)
class Mollifier:
    """Fourier-side cutoff at scale delta: multiplier phi(delta |k|)."""

    delta: float
    symbol: np.ndarray

    @classmethod
    def for_grid(cls, delta: float, grid: Grid) -> "Mollifier":
        if not delta > 0.0:
            raise ValueError(f"cutoff scale must be positive, got {delta}")
        return cls(delta, cutoff_profile(delta * grid.wavenumbers()))


def mollify(f: np.ndarray, m: Mollifier, grid: Grid) -> np.ndarray:
    return apply_symbol(f, m.symbol, grid)


class ReferenceTrajectory:
    """Time-stamped snapshots with linear interpolation between them."""

    def __init__(self, times: np.ndarray, zetas: np.ndarray, us: np.ndarray):
        times = np.asarray(times, dtype=float)
        zetas = np.asarray(zetas, dtype=float)
        us = np.asarray(us, dtype=float)
        if times.ndim != 1 or times.size < 2:
            raise ValueError("a trajectory needs at least two snapshots")
        if np.any(np.diff(times) <= 0.0):
            raise ValueError("snapshot times must be strictly increasing")
        if zetas.shape != (times.size, us.shape[1]) or us.shape != zetas.shape:
            raise ValueError(
                f"snapshot arrays must be (m, n) alike, got {zetas.shape} and {us.shape}"
            )
        self.times = times
        self.zetas = zetas
        self.us = us

    @classmethod
    def from_states(cls, states: list[State]) -> "ReferenceTrajectory":
        return cls(
            np.array([st.time for st in states]),
            np.stack([st.zeta for st in states]),
            np.stack([st.u for st in states]),
        )

    @classmethod
    def constant(cls, state: State, t_end: float) -> "ReferenceTrajectory":
        times = np.array([state.time, t_end])
        return cls(times, np.stack([state.zeta] * 2), np.stack([state.u] * 2))

    @property
    def t0(self) -> float:
        return float(self.times[0])

    @property
    def t1(self) -> float:
        return float(self.times[-1])

    def state_at(self, t: float) -> State:
        span = self.t1 - self.t0
        if t < self.t0 - 1e-9 * span or t > self.t1 + 1e-9 * span:
            raise ValueError(f"time {t} outside trajectory range [{self.t0}, {self.t1}]")
        t = min(max(t, self.t0), self.t1)
        j = int(np.searchsorted(self.times, t, side="right") - 1)
        j = min(j, self.times.size - 2)
        w = (t - self.times[j]) / (self.times[j + 1] - self.times[j])
        return State(
            (1.0 - w) * self.zetas[j] + w * self.zetas[j + 1],
            (1.0 - w) * self.us[j] + w * self.us[j + 1],
            t,
        )

    def validate_depth(self, bathymetry: Bathymetry, params: Parameters) -> None:
        """Every snapshot must itself be admissible; interpolants then are too."""
        for j in range(self.times.size):
            require_depth(
                1.0 + params.epsilon * (self.zetas[j] - bathymetry.b), params
            )

    def max_speed(self, bathymetry: Bathymetry, params: Parameters) -> float:
        h = 1.0 + params.epsilon * (self.zetas - bathymetry.b)
        return float(
            np.max(params.epsilon * np.abs(self.us) + np.sqrt(np.maximum(h, 0.0)))
        )


def _coeff_tendency(
    coeff: State,
    op,
    zeta: np.ndarray,
    u: np.ndarray,
    bathymetry: Bathymetry,
    params: Parameters,
    grid: Grid,
    mollifier: Mollifier | None,
) -> Tendency:
    v1 = d1_spectral(zeta, grid)
    v2 = d1_spectral(u, grid)
    if mollifier is not None:
        v1 = mollify(v1, mollifier, grid)
        v2 = mollify(v2, mollifier, grid)
    a1, a2 = apply_A(coeff, (v1, v2), bathymetry, params, grid, op=op)
    if mollifier is not None:
        a1 = mollify(a1, mollifier, grid)
        a2 = mollify(a2, mollifier, grid)
    b1, b2 = eval_B(coeff, bathymetry, params, grid, op=op)
    return Tendency(-(a1 + b1), -(a2 + b2))


def _truncated(
    coeff: State,
    op,
    zeta: np.ndarray,
    u: np.ndarray,
    bathymetry: Bathymetry,
    params: Parameters,
    grid: Grid,
    mollifier: Mollifier | None,
) -> Tendency:
    # stage tendencies live on the alias-free band, like the nonlinear stepper
    dz, du = _coeff_tendency(coeff, op, zeta, u, bathymetry, params, grid, mollifier)
    return Tendency(dealias(dz, grid), dealias(du, grid))


def _frozen_coefficients(
    ref: ReferenceTrajectory, t: float, bathymetry: Bathymetry, params: Parameters, grid: Grid
):
    coeff = ref.state_at(t)
    h = compute_depth(coeff, bathymetry, params).values
    return coeff, assemble_T(h, bathymetry, params, grid)


def linear_rhs(
    ref: ReferenceTrajectory,
    t: float,
    zeta: np.ndarray,
    u: np.ndarray,
    bathymetry: Bathymetry,
    params: Parameters,
    grid: Grid,
    mollifier: Mollifier | None = None,
) -> Tendency:
    """Tendency of the (optionally mollified) linearized system at time t."""
    coeff, op = _frozen_coefficients(ref, t, bathymetry, params, grid)
    return _coeff_tendency(coeff, op, zeta, u, bathymetry, params, grid, mollifier)


def solve_linear(
    ref: ReferenceTrajectory,
    initial: State,
    bathymetry: Bathymetry,
    params: Parameters,
    grid: Grid,
    control: StepControl,
    mollifier: Mollifier | None = None,
    dt: float | None = None,
) -> ReferenceTrajectory:
    """March the linearized system with fixed uniform steps.

    The step is chosen once from the reference coefficients (or passed
    in), then rounded down so the span divides evenly; snapshots are
    stored at every step so the result can serve as the next reference.
    """
    ref.validate_depth(bathymetry, params)
    t0 = ref.t0
    span = control.t_end - t0
    if span <= 0.0:
        raise ValueError(f"t_end {control.t_end} does not exceed trajectory start {t0}")
    if ref.t1 < control.t_end - 1e-12 * max(abs(control.t_end), 1.0):
        raise ValueError(
            f"reference trajectory ends at {ref.t1}, before t_end {control.t_end}"
        )
    if dt is None:
        speed = ref.max_speed(bathymetry, params)
        dt = control.dt_max if speed <= 0.0 else min(
            control.dt_max, control.cfl * grid.dx / speed
        )
    m = max(1, math.ceil(span / dt - 1e-12))
    dt = span / m

    times = t0 + dt * np.arange(m + 1)
    zetas = np.empty((m + 1, grid.n))
    us = np.empty((m + 1, grid.n))
    z, u = initial.zeta.copy(), initial.u.copy()
    zetas[0], us[0] = z, u
    # coefficient operators are frozen per stage time; the step-end pair
    # rolls over as the next step's start
    start = _frozen_coefficients(ref, float(times[0]), bathymetry, params, grid)
    for j in range(m):
        t = float(times[j])
        mid = _frozen_coefficients(ref, t + 0.5 * dt, bathymetry, params, grid)
        end = _frozen_coefficients(ref, t + dt, bathymetry, params, grid)
        k1 = _truncated(*start, z, u, bathymetry, params, grid, mollifier)
        k2 = _truncated(
            *mid, z + 0.5 * dt * k1.dzeta, u + 0.5 * dt * k1.du,
            bathymetry, params, grid, mollifier,
        )
        k3 = _truncated(
            *mid, z + 0.5 * dt * k2.dzeta, u + 0.5 * dt * k2.du,
            bathymetry, params, grid, mollifier,
        )
        k4 = _truncated(
            *end, z + dt * k3.dzeta, u + dt * k3.du,
            bathymetry, params, grid, mollifier,
        )
        z = z + (dt / 6.0) * (k1.dzeta + 2.0 * k2.dzeta + 2.0 * k3.dzeta + k4.dzeta)
        u = u + (dt / 6.0) * (k1.du + 2.0 * k2.du + 2.0 * k3.du + k4.du)
        zetas[j + 1], us[j + 1] = z, u
        start = end
    return ReferenceTrajectory(times, zetas, us)


@dataclass
class PicardResult:
    trajectory: ReferenceTrajectory
    gaps: list[float]
    converged: bool
    iterations: int


def picard_solve(
    initial: State,
    bathymetry: Bathymetry,
    params: Parameters,
    grid: Grid,
    control: StepControl,
    max_iters: int = 25,
    tol: float = 1e-8,
    s: float = 2.0,
    mollifier: Mollifier | None = None,
) -> PicardResult:
    """Fixed-point iteration on the linearized flow.

    Iterate zero is the initial state frozen in time; each pass solves
    the system linearized about the previous iterate.  The gap between
    consecutive iterates is the sup over snapshot times of the energy
    norm weighted at the previous iterate's coefficients.
    """
    h = compute_depth(initial, bathymetry, params).values
    require_depth(h, params)
    speed = float(
        np.max(params.epsilon * np.abs(initial.u) + np.sqrt(np.maximum(h, 0.0)))
    )
    dt = control.dt_max if speed <= 0.0 else min(
        control.dt_max, control.cfl * grid.dx / speed
    )

    ref = ReferenceTrajectory.constant(initial, control.t_end)
    gaps: list[float] = []
    for it in range(1, max_iters + 1):
        sol = solve_linear(
            ref, initial, bathymetry, params, grid, control, mollifier, dt=dt
        )
        gap = 0.0
        for j in range(sol.times.size):
            t = float(sol.times[j])
            prev = ref.state_at(t)
            diff = State(sol.zetas[j] - prev.zeta, sol.us[j] - prev.u, t)
            gap = max(gap, es_norm(diff, prev, bathymetry, params, grid, s))
        gaps.append(gap)
        ref = sol
        if gap <= tol:
            return PicardResult(sol, gaps, True, it)
    return PicardResult(ref, gaps, False, max_iters)
