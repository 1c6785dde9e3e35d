"""Shared value types: model parameters, periodic grid, bathymetry, state.

Everything downstream (operator assembly, right-hand sides, integrators)
is written against these containers.  Arrays are float64 throughout; the
grid is uniform and periodic.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np


class DepthError(Exception):
    """Total water depth dropped below the admissibility floor h0."""

    def __init__(self, min_value: float, location: int):
        self.min_value = float(min_value)
        self.location = int(location)
        super().__init__(
            f"depth condition violated: min depth {self.min_value:.6g} "
            f"at grid index {self.location}"
        )


class FactorizationError(Exception):
    """Cholesky factorization of the elliptic operator failed.

    The operator is positive definite whenever the depth condition holds,
    so a factorization failure is reported together with the minimum depth
    and treated by callers as a depth-type event.
    """

    def __init__(self, min_depth: float):
        self.min_depth = float(min_depth)
        super().__init__(
            f"factorization failed (min depth {self.min_depth:.6g}): "
            f"operator lost positive definiteness"
        )


def _as_field(a, name: str) -> np.ndarray:
    a = np.asarray(a, dtype=float)
    if a.ndim != 1:
        raise ValueError(f"{name} must be a 1-D array, got shape {a.shape}")
    return a


@dataclass(frozen=True)
class Parameters:
    """Nondimensional model parameters.

    epsilon : amplitude (nonlinearity) parameter, in (0, 1].
    mu      : shallowness (dispersion) parameter, in (0, 1].
    h0      : admissibility floor for the total depth, in (0, 1].
    """

    epsilon: float
    mu: float
    h0: float = 0.5

    def __post_init__(self):
        for name in ("epsilon", "mu", "h0"):
            v = float(getattr(self, name))
            if not 0.0 < v <= 1.0:
                raise ValueError(f"{name} must lie in (0, 1], got {v}")
            object.__setattr__(self, name, v)


@dataclass(frozen=True)
class Grid:
    """Uniform periodic grid with n nodes on [0, length)."""

    n: int
    length: float

    def __post_init__(self):
        if self.n <= 0 or self.n % 2 != 0:
            raise ValueError(f"grid size must be a positive even integer, got {self.n}")
        if not float(self.length) > 0.0:
            raise ValueError(f"domain length must be positive, got {self.length}")
        object.__setattr__(self, "length", float(self.length))

    @property
    def dx(self) -> float:
        return self.length / self.n

    def nodes(self) -> np.ndarray:
        return self.dx * np.arange(self.n)

    def wavenumbers(self) -> np.ndarray:
        """Nonnegative wavenumbers 2*pi*j/length carried by the real FFT."""
        return 2.0 * np.pi * np.fft.rfftfreq(self.n, d=self.dx)


@dataclass(frozen=True)
class Bathymetry:
    """Bottom profile b and its first two derivatives on the grid nodes.

    Positive b raises the bottom (shallower water).  The derivative arrays
    are carried explicitly so that analytic profiles can supply exact
    derivatives while file-loaded profiles use spectral ones.
    """

    b: np.ndarray
    b_x: np.ndarray
    b_xx: np.ndarray

    def __post_init__(self):
        for name in ("b", "b_x", "b_xx"):
            object.__setattr__(self, name, _as_field(getattr(self, name), name))
        if not self.b.shape == self.b_x.shape == self.b_xx.shape:
            raise ValueError(
                f"bathymetry arrays must share one shape, got "
                f"{self.b.shape}, {self.b_x.shape}, {self.b_xx.shape}"
            )

    @classmethod
    def flat(cls, grid: Grid) -> "Bathymetry":
        z = np.zeros(grid.n)
        return cls(z, z.copy(), z.copy())

    @classmethod
    def from_profile(cls, b, grid: Grid) -> "Bathymetry":
        """Build from node values alone; derivatives are spectral."""
        from .grid_ops import d1_spectral

        b = _as_field(b, "b")
        if b.size != grid.n:
            raise ValueError(f"profile has {b.size} values, grid has {grid.n} nodes")
        b_x = d1_spectral(b, grid)
        return cls(b, b_x, d1_spectral(b_x, grid))


@dataclass(frozen=True)
class State:
    """Surface elevation and depth-averaged velocity at one instant."""

    zeta: np.ndarray
    u: np.ndarray
    time: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "zeta", _as_field(self.zeta, "zeta"))
        object.__setattr__(self, "u", _as_field(self.u, "u"))
        object.__setattr__(self, "time", float(self.time))
        if self.zeta.shape != self.u.shape:
            raise ValueError(
                f"zeta and u must share one shape, got {self.zeta.shape} and {self.u.shape}"
            )

    @property
    def n(self) -> int:
        return self.zeta.size

    def is_finite(self) -> bool:
        return bool(np.all(np.isfinite(self.zeta)) and np.all(np.isfinite(self.u)))


@dataclass(frozen=True)
class DepthField:
    """Total depth h = 1 + epsilon*(zeta - b) sampled on the grid."""

    values: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "values", _as_field(self.values, "depth"))

    @property
    def min_value(self) -> float:
        return float(self.values.min())

    @property
    def min_location(self) -> int:
        return int(self.values.argmin())


@dataclass(frozen=True)
class DepthVerdict:
    """Outcome of the admissibility check: ok iff min depth >= h0."""

    ok: bool
    min_value: float
    location: int


def compute_depth(state: State, bathymetry: Bathymetry, params: Parameters) -> DepthField:
    if state.zeta.shape != bathymetry.b.shape:
        raise ValueError(
            f"state has {state.zeta.size} nodes, bathymetry has {bathymetry.b.size}"
        )
    return DepthField(1.0 + params.epsilon * (state.zeta - bathymetry.b))


def check_depth_condition(depth: DepthField, params: Parameters) -> DepthVerdict:
    m = depth.min_value
    return DepthVerdict(ok=bool(m >= params.h0), min_value=m, location=depth.min_location)


def require_depth(h: np.ndarray, params: Parameters) -> None:
    """Raise DepthError unless min(h) >= h0."""
    m = float(h.min())
    if not m >= params.h0:  # catches NaN as well
        raise DepthError(m, int(h.argmin()))
