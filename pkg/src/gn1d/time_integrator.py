"""Classical fourth-order time stepping with safety monitors.

The dispersive operator is reassembled and refactorized at every stage,
so the scheme sees the fully nonlinear depth coupling.  Stage tendencies
are truncated to the alias-free band (the 2/3 rule): collocation
products spill aliased energy into the top third of the spectrum, where
the finite-difference symbol inside the elliptic operator is too weak to
regularize it, and without the truncation that band grows until the norm
monitor trips.  Runs terminate early (with a labeled outcome, never an
exception) when the depth drops below the floor, the factorization
fails, or the solution norm blows up.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .core import Bathymetry, DepthError, FactorizationError, Grid, Parameters, State, compute_depth
from .diagnostics import DiagnosticRecord, record_for
from .gn_rhs import nonlinear_rhs
from .grid_ops import dealias


@dataclass(frozen=True)
class StepControl:
    """Step-size policy: dt = min(dt_max, cfl * dx / max wave speed)."""

    t_end: float
    cfl: float = 0.5
    dt_max: float = math.inf

    def __post_init__(self):
        if not self.t_end > 0.0:
            raise ValueError(f"t_end must be positive, got {self.t_end}")
        if not 0.0 < self.cfl <= 1.0:
            raise ValueError(f"cfl must lie in (0, 1], got {self.cfl}")
        if not self.dt_max > 0.0:
            raise ValueError(f"dt_max must be positive, got {self.dt_max}")


def cfl_dt(
    state: State, bathymetry: Bathymetry, params: Parameters, grid: Grid, control: StepControl
) -> float:
    """Advective-acoustic step bound from the current fields."""
    h = compute_depth(state, bathymetry, params).values
    speed = float(np.max(params.epsilon * np.abs(state.u) + np.sqrt(np.maximum(h, 0.0))))
    if speed <= 0.0:
        return control.dt_max
    return min(control.dt_max, control.cfl * grid.dx / speed)


def _stage_tendency(
    state: State, bathymetry: Bathymetry, params: Parameters, grid: Grid
) -> tuple[np.ndarray, np.ndarray]:
    # truncating the tendency keeps band-limited data on the alias-free band
    dz, du = nonlinear_rhs(state, bathymetry, params, grid)
    return dealias(dz, grid), dealias(du, grid)


def rk4_step(
    state: State, dt: float, bathymetry: Bathymetry, params: Parameters, grid: Grid
) -> State:
    """One classical Runge-Kutta step; raises on depth or factorization loss."""
    z, u, t = state.zeta, state.u, state.time

    k1z, k1u = _stage_tendency(state, bathymetry, params, grid)
    s2 = State(z + 0.5 * dt * k1z, u + 0.5 * dt * k1u, t + 0.5 * dt)
    k2z, k2u = _stage_tendency(s2, bathymetry, params, grid)
    s3 = State(z + 0.5 * dt * k2z, u + 0.5 * dt * k2u, t + 0.5 * dt)
    k3z, k3u = _stage_tendency(s3, bathymetry, params, grid)
    s4 = State(z + dt * k3z, u + dt * k3u, t + dt)
    k4z, k4u = _stage_tendency(s4, bathymetry, params, grid)

    return State(
        z + (dt / 6.0) * (k1z + 2.0 * k2z + 2.0 * k3z + k4z),
        u + (dt / 6.0) * (k1u + 2.0 * k2u + 2.0 * k3u + k4u),
        t + dt,
    )


@dataclass
class RunOutcome:
    """Terminal status of a run plus the sampled diagnostic history."""

    status: str  # completed | blowup_depth | blowup_norm | solver_failure
    final_state: State
    history: list[DiagnosticRecord] = field(default_factory=list)
    steps: int = 0

    @property
    def completed(self) -> bool:
        return self.status == "completed"


def run(
    initial: State,
    bathymetry: Bathymetry,
    params: Parameters,
    grid: Grid,
    control: StepControl,
    s: float = 2.0,
    norm_factor: float = 1e3,
    snapshot_every: float | None = None,
    snapshot_sink=None,
) -> RunOutcome:
    """March the nonlinear system to t_end with adaptive CFL steps.

    A diagnostic record is appended after every accepted step.  If
    snapshot_sink is given it is called as snapshot_sink(step, state) at
    t = 0, then at every step when snapshot_every is None, or whenever
    snapshot_every time units have elapsed (plus the final state) when
    it is set.
    """
    state = initial
    history = [record_for(state, bathymetry, params, grid, s)]
    norm_ceiling = norm_factor * max(history[0].xs, 1e-300)
    if snapshot_sink is not None:
        snapshot_sink(0, state)
    last_snap = 0
    next_mark = state.time + snapshot_every if snapshot_every is not None else math.inf

    steps = 0
    while state.time < control.t_end - 1e-12 * control.t_end:
        dt = min(
            cfl_dt(state, bathymetry, params, grid, control),
            control.t_end - state.time,
        )
        try:
            state = rk4_step(state, dt, bathymetry, params, grid)
        except DepthError:
            return RunOutcome("blowup_depth", state, history, steps)
        except FactorizationError:
            return RunOutcome("solver_failure", state, history, steps)
        steps += 1

        if not state.is_finite():
            return RunOutcome("blowup_norm", state, history, steps)
        rec = record_for(state, bathymetry, params, grid, s)
        history.append(rec)
        if rec.min_h < params.h0:
            return RunOutcome("blowup_depth", state, history, steps)
        if not rec.xs <= norm_ceiling:
            return RunOutcome("blowup_norm", state, history, steps)
        if snapshot_sink is not None:
            if snapshot_every is None:
                snapshot_sink(steps, state)
                last_snap = steps
            elif state.time >= next_mark - 1e-12:
                snapshot_sink(steps, state)
                last_snap = steps
                next_mark += snapshot_every

    if snapshot_sink is not None and last_snap != steps:
        snapshot_sink(steps, state)
    return RunOutcome("completed", state, history, steps)
