"""Canonical initial conditions and bottom profiles.

Each scenario builds a (State, Bathymetry) pair for a given grid and
parameter set.  Profiles that decay (solitary wave, humps, bars) are
placed by a wrapped coordinate so they respect the periodic seam; the
solitary-wave builder refuses domains whose seam values are not
negligible, since the profile is only an exact traveling solution on
the whole line.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .core import Bathymetry, Grid, Parameters, State


def _wrapped_offset(x: np.ndarray, x0: float, length: float) -> np.ndarray:
    """Signed distance to x0 along the shorter way around the circle."""
    return (x - x0 + 0.5 * length) % length - 0.5 * length


def solitary_wave(
    amplitude: float,
    params: Parameters,
    grid: Grid,
    x0: float | None = None,
    seam_tol: float = 1e-12,
) -> State:
    """Right-moving solitary wave over a flat bottom.

    zeta = a sech^2(kappa (x - x0)),  u = c zeta / (1 + eps zeta),
    kappa = sqrt(3 eps a / (4 mu (1 + eps a))),  c = sqrt(1 + eps a).

    The domain must be long enough that the profile's relative size at
    the periodic seam is below seam_tol.
    """
    if not amplitude > 0.0:
        raise ValueError(f"amplitude must be positive, got {amplitude}")
    eps, mu = params.epsilon, params.mu
    if x0 is None:
        x0 = 0.5 * grid.length
    kappa = np.sqrt(3.0 * eps * amplitude / (4.0 * mu * (1.0 + eps * amplitude)))
    seam = 1.0 / np.cosh(kappa * 0.5 * grid.length) ** 2
    if seam > seam_tol:
        raise ValueError(
            f"domain too short for a clean solitary wave: seam value {seam:.3e} "
            f"exceeds {seam_tol:.3e}; lengthen the domain or loosen seam_tol"
        )
    c = np.sqrt(1.0 + eps * amplitude)
    r = _wrapped_offset(grid.nodes(), x0, grid.length)
    zeta = amplitude / np.cosh(kappa * r) ** 2
    u = c * zeta / (1.0 + eps * zeta)
    return State(zeta, u)


def solitary_speed(amplitude: float, params: Parameters) -> float:
    return float(np.sqrt(1.0 + params.epsilon * amplitude))


def gaussian_hump(
    amplitude: float, width: float, grid: Grid, x0: float | None = None
) -> State:
    """Resting hump of water; splits into two counter-propagating waves."""
    if not width > 0.0:
        raise ValueError(f"width must be positive, got {width}")
    if x0 is None:
        x0 = 0.5 * grid.length
    r = _wrapped_offset(grid.nodes(), x0, grid.length)
    return State(amplitude * np.exp(-(r**2) / (2.0 * width**2)), np.zeros(grid.n))


def bar_bathymetry(
    height: float, width: float, grid: Grid, x0: float | None = None
) -> Bathymetry:
    """Gaussian bar with analytic first and second derivatives."""
    if not width > 0.0:
        raise ValueError(f"width must be positive, got {width}")
    if x0 is None:
        x0 = 0.5 * grid.length
    r = _wrapped_offset(grid.nodes(), x0, grid.length)
    b = height * np.exp(-(r**2) / (2.0 * width**2))
    b_x = -(r / width**2) * b
    b_xx = (r**2 / width**4 - 1.0 / width**2) * b
    return Bathymetry(b, b_x, b_xx)


def rest_state(grid: Grid) -> State:
    return State(np.zeros(grid.n), np.zeros(grid.n))


@dataclass(frozen=True)
class ScenarioSpec:
    """Named initial-condition builder addressable from the command line."""

    name: str
    description: str
    build: Callable[..., tuple[State, Bathymetry]]


def _build_solitary(grid, params, amplitude, width, bar_height, bar_width, x0):
    state = solitary_wave(amplitude, params, grid, x0=x0)
    return state, Bathymetry.flat(grid)


def _build_hump(grid, params, amplitude, width, bar_height, bar_width, x0):
    return gaussian_hump(amplitude, width, grid, x0=x0), Bathymetry.flat(grid)


def _build_hump_over_bar(grid, params, amplitude, width, bar_height, bar_width, x0):
    center = 0.5 * grid.length if x0 is None else x0
    state = gaussian_hump(amplitude, width, grid, x0=center)
    return state, bar_bathymetry(bar_height, bar_width, grid, x0=center + 0.25 * grid.length)


def _build_rest_over_bar(grid, params, amplitude, width, bar_height, bar_width, x0):
    return rest_state(grid), bar_bathymetry(bar_height, bar_width, grid, x0=x0)


SCENARIOS: dict[str, ScenarioSpec] = {
    "solitary": ScenarioSpec(
        "solitary",
        "solitary wave over a flat bottom (exact traveling profile)",
        _build_solitary,
    ),
    "hump": ScenarioSpec(
        "hump",
        "resting Gaussian hump over a flat bottom",
        _build_hump,
    ),
    "hump_over_bar": ScenarioSpec(
        "hump_over_bar",
        "resting Gaussian hump with a submerged Gaussian bar downstream",
        _build_hump_over_bar,
    ),
    "rest_over_bar": ScenarioSpec(
        "rest_over_bar",
        "lake at rest over a submerged Gaussian bar (equilibrium)",
        _build_rest_over_bar,
    ),
}


def build_scenario(
    name: str,
    grid: Grid,
    params: Parameters,
    amplitude: float,
    width: float,
    bar_height: float,
    bar_width: float,
    x0: float | None = None,
) -> tuple[State, Bathymetry]:
    if name not in SCENARIOS:
        known = ", ".join(sorted(SCENARIOS))
        raise ValueError(f"unknown scenario {name!r}; known scenarios: {known}")
    return SCENARIOS[name].build(grid, params, amplitude, width, bar_height, bar_width, x0)
