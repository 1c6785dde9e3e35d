"""Nonlinear tendency, its condensed quasilinear form, and the source split."""

import numpy as np
import pytest

from gn1d import Bathymetry, Grid, Parameters, State
from gn1d.gn_rhs import (
    apply_A,
    condensed_rhs,
    eval_B,
    nonlinear_rhs,
    q1_apply,
    q2_eval,
    q_total,
)
from gn1d.grid_ops import d1_spectral, fd_symbol, l2_norm

from helpers import bumpy_bathymetry, random_state


def test_dispersive_source_flat_bottom_oracle():
    """With unit depth and u = sin x the source is -(2/3) sin 2x by hand."""
    grid = Grid(64, 2.0 * np.pi)
    params = Parameters(0.5, 0.5, h0=0.5)
    x = grid.nodes()
    q = q_total(np.ones(grid.n), np.sin(x), Bathymetry.flat(grid), params, grid)
    assert np.allclose(q, -(2.0 / 3.0) * np.sin(2.0 * x), atol=1e-12)


def test_remainder_source_is_quadratic_in_velocity():
    grid = Grid(64, 2.0 * np.pi)
    params = Parameters(0.5, 0.5, h0=0.3)
    bath = bumpy_bathymetry(grid)
    st = random_state(grid, 17, kc=10)
    doubled = State(st.zeta, 2.0 * st.u)
    assert np.array_equal(q2_eval(doubled, bath, params, grid), 4.0 * q2_eval(st, bath, params, grid))


def test_first_order_source_is_linear_in_its_argument():
    grid = Grid(64, 2.0 * np.pi)
    params = Parameters(0.5, 0.5, h0=0.3)
    bath = bumpy_bathymetry(grid)
    st = random_state(grid, 23, kc=10)
    rng = np.random.default_rng(1)
    f = rng.standard_normal(grid.n)
    g = rng.standard_normal(grid.n)
    assert np.array_equal(
        q1_apply(st, 2.0 * f, bath, params, grid), 2.0 * q1_apply(st, f, bath, params, grid)
    )
    lhs = q1_apply(st, f + g, bath, params, grid)
    rhs = q1_apply(st, f, bath, params, grid) + q1_apply(st, g, bath, params, grid)
    assert np.allclose(lhs, rhs, atol=1e-12)


def test_rest_state_is_an_equilibrium_over_any_bottom():
    grid = Grid(64, 2.0 * np.pi)
    params = Parameters(0.7, 0.6, h0=0.3)
    for bath in (Bathymetry.flat(grid), bumpy_bathymetry(grid)):
        dz, du = nonlinear_rhs(State(np.zeros(grid.n), np.zeros(grid.n)), bath, params, grid)
        assert not dz.any()
        assert not du.any()


def test_small_amplitude_velocity_response():
    """As eps -> 0 the momentum tendency reduces to the filtered gradient."""
    grid = Grid(64, 2.0 * np.pi)
    params = Parameters(1e-8, 0.5, h0=0.5)
    x = grid.nodes()
    k = 3.0
    st = State(np.cos(k * x), np.zeros(grid.n))
    _, du = nonlinear_rhs(st, Bathymetry.flat(grid), params, grid)
    sigma = fd_symbol(np.array(k), grid.dx)
    want = k * np.sin(k * x) / (1.0 + params.mu * sigma**2 / 3.0)
    assert np.max(np.abs(du - want)) <= 1e-7


def test_mass_flux_form_of_surface_tendency():
    grid = Grid(128, 2.0 * np.pi)
    params = Parameters(0.4, 0.5, h0=0.3)
    bath = bumpy_bathymetry(grid)
    st = random_state(grid, 31, kc=12)
    h = 1.0 + params.epsilon * (st.zeta - bath.b)
    dz, _ = nonlinear_rhs(st, bath, params, grid)
    assert np.allclose(dz, -d1_spectral(h * st.u, grid), atol=1e-13)


def test_condensed_form_matches_direct_tendency():
    """Both evaluations of the same dynamics agree to rounding on
    band-limited states (the product rule is exact below the alias line)."""
    grid = Grid(256, 2.0 * np.pi)
    params = Parameters(0.3, 0.5, h0=0.3)
    bath = bumpy_bathymetry(grid)
    for seed in range(8):
        st = random_state(grid, seed, kc=24)
        direct = nonlinear_rhs(st, bath, params, grid)
        cond = condensed_rhs(st, bath, params, grid)
        scale = l2_norm(direct.dzeta, grid) + l2_norm(direct.du, grid)
        err = l2_norm(direct.dzeta - cond.dzeta, grid) + l2_norm(direct.du - cond.du, grid)
        assert err <= 1e-12 * scale


def test_source_split_reassembles_the_dispersive_source():
    grid = Grid(256, 2.0 * np.pi)
    params = Parameters(0.4, 0.6, h0=0.3)
    bath = bumpy_bathymetry(grid)
    for seed in range(8):
        st = random_state(grid, seed + 100, kc=24)
        h = 1.0 + params.epsilon * (st.zeta - bath.b)
        ux = d1_spectral(st.u, grid)
        whole = params.epsilon * params.mu * h * q_total(h, st.u, bath, params, grid)
        split = q1_apply(st, ux, bath, params, grid) + q2_eval(st, bath, params, grid)
        assert l2_norm(whole - split, grid) <= 1e-12 * l2_norm(whole, grid)


def test_advection_map_accepts_prebuilt_operator():
    grid = Grid(64, 2.0 * np.pi)
    params = Parameters(0.5, 0.5, h0=0.3)
    bath = bumpy_bathymetry(grid)
    st = random_state(grid, 41, kc=10)
    from gn1d.t_operator import assemble_T

    h = 1.0 + params.epsilon * (st.zeta - bath.b)
    op = assemble_T(h, bath, params, grid)
    v = (d1_spectral(st.zeta, grid), d1_spectral(st.u, grid))
    a_with = apply_A(st, v, bath, params, grid, op=op)
    a_without = apply_A(st, v, bath, params, grid)
    assert np.array_equal(a_with[0], a_without[0])
    assert np.array_equal(a_with[1], a_without[1])


def test_zero_order_source_vanishes_on_flat_bottom():
    grid = Grid(64, 2.0 * np.pi)
    params = Parameters(0.5, 0.5, h0=0.3)
    st = random_state(grid, 51, kc=10)
    b1, b2 = eval_B(st, Bathymetry.flat(grid), params, grid)
    assert not b1.any()
    assert not b2.any()


def test_zero_order_source_slope_term():
    """The surface component of the source is -eps * b_x * u."""
    grid = Grid(64, 2.0 * np.pi)
    params = Parameters(0.6, 0.5, h0=0.3)
    bath = bumpy_bathymetry(grid)
    st = random_state(grid, 61, kc=10)
    b1, _ = eval_B(st, bath, params, grid)
    assert np.allclose(b1, -params.epsilon * bath.b_x * st.u, atol=1e-15)


def test_tendency_fields_are_named():
    grid = Grid(64, 2.0 * np.pi)
    params = Parameters(0.5, 0.5, h0=0.3)
    t = nonlinear_rhs(random_state(grid, 71, kc=10), bumpy_bathymetry(grid), params, grid)
    assert t.dzeta is t[0]
    assert t.du is t[1]
