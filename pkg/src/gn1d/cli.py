"""Command-line front end: configured runs, verification, scenario listing.

Config files are plain `key = value` lines with `#` comments.  Outputs
are whitespace-separated text with 17 significant digits, so a rerun of
the same config and seed reproduces every byte.

Exit codes: 0 success, 1 blow-up termination, 2 configuration error,
3 verification failure.
"""

from __future__ import annotations

import argparse
import math
import os
import sys
from dataclasses import dataclass, fields, replace

import numpy as np

from .core import (
    Bathymetry,
    DepthError,
    FactorizationError,
    Grid,
    Parameters,
    State,
    compute_depth,
)
from .diagnostics import DiagnosticRecord, equivalence_report, record_for
from .gn_rhs import condensed_rhs, nonlinear_rhs, q1_apply, q2_eval, q_total
from .grid_ops import d1_spectral, inner_product, lambda_s
from .linearized import Mollifier, ReferenceTrajectory, mollify, picard_solve, solve_linear
from .scenarios import SCENARIOS, build_scenario, solitary_wave
from .t_operator import (
    apply_T,
    assemble_T,
    coercivity_report,
    inverse_bound_sweep,
    solve_T,
    sweep_spreads,
)
from .time_integrator import StepControl, run


class ConfigError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    """Every tunable of a run, with defaults that produce a sensible demo.

    Zero sentinels: h0 = 0 floors the depth at half the initial minimum,
    dt_max = 0 leaves the step purely CFL-limited, snapshot_every = 0
    disables field snapshots, mollifier_delta = 0 disables the cutoff,
    x0 = -1 centers profiles in the domain.
    """

    scenario: str = "solitary"
    bathymetry_file: str = ""
    n: int = 256
    length: float = 60.0
    epsilon: float = 0.5
    mu: float = 0.5
    h0: float = 0.0
    amplitude: float = 0.4
    width: float = 2.0
    bar_height: float = 0.3
    bar_width: float = 4.0
    x0: float = -1.0
    cfl: float = 0.5
    dt_max: float = 0.0
    t_end: float = 10.0
    snapshot_every: float = 0.0
    output_dir: str = "out"
    mode: str = "nonlinear"
    s: float = 2.0
    blowup_factor: float = 1e3
    seed: int = 1234
    picard_tol: float = 1e-8
    picard_max_iters: int = 25
    mollifier_delta: float = 0.0
    verify_break_depth: bool = False


_BOOL_WORDS = {"true": True, "false": False, "yes": True, "no": False, "1": True, "0": False}


def _parse_value(raw: str, target_type: type, key: str, lineno: int):
    raw = raw.strip()
    try:
        if target_type is bool:
            word = raw.lower()
            if word not in _BOOL_WORDS:
                raise ValueError
            return _BOOL_WORDS[word]
        if target_type is int:
            return int(raw)
        if target_type is float:
            return float(raw)
        return raw
    except ValueError:
        raise ConfigError(
            f"line {lineno}: cannot parse {raw!r} as {target_type.__name__} for key {key!r}"
        ) from None


def parse_config(text: str) -> RunConfig:
    """Parse `key = value` lines into a RunConfig.

    Unknown keys, malformed lines, and untypable values are reported
    with their line number.
    """
    types = {f.name: f.type for f in fields(RunConfig)}
    # dataclass fields carry annotations as strings under future-imports
    real_types = {"str": str, "int": int, "float": float, "bool": bool}
    values = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        if "=" not in body:
            raise ConfigError(f"line {lineno}: expected 'key = value', got {line.strip()!r}")
        key, raw = body.split("=", 1)
        key = key.strip()
        if key not in types:
            raise ConfigError(f"line {lineno}: unknown key {key!r}")
        t = types[key]
        t = real_types[t] if isinstance(t, str) else t
        values[key] = _parse_value(raw, t, key, lineno)
    return RunConfig(**values)


def dump_config(cfg: RunConfig | None = None) -> str:
    """Render a config that parses back to exactly the same values."""
    cfg = cfg or RunConfig()
    lines = ["# gn1d run configuration (defaults shown by `gn1d dump-config`)"]
    for f in fields(cfg):
        v = getattr(cfg, f.name)
        if isinstance(v, bool):
            v = "true" if v else "false"
        elif isinstance(v, float):
            v = repr(v)
        lines.append(f"{f.name} = {v}")
    return "\n".join(lines) + "\n"


def load_config(path: str) -> RunConfig:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ConfigError(f"cannot read config {path!r}: {exc}") from exc
    return parse_config(text)


def load_bathymetry(path: str, grid: Grid) -> Bathymetry:
    """Read a two-column `x b(x)` file and resample onto the grid.

    The samples must be finite, at least 8 rows, strictly increasing,
    uniformly spaced, and cover exactly one period of the domain.  The
    resampling is trigonometric, so band-limited profiles are exact.
    """
    rows = []
    try:
        with open(path, "r", encoding="utf-8") as fh:
            for lineno, line in enumerate(fh, start=1):
                body = line.split("#", 1)[0].strip()
                if not body:
                    continue
                parts = body.split()
                if len(parts) != 2:
                    raise ConfigError(
                        f"{path}:{lineno}: expected two columns `x b`, got {len(parts)}"
                    )
                try:
                    rows.append((float(parts[0]), float(parts[1])))
                except ValueError:
                    raise ConfigError(f"{path}:{lineno}: non-numeric entry") from None
    except OSError as exc:
        raise ConfigError(f"cannot read bathymetry {path!r}: {exc}") from exc

    if len(rows) < 8:
        raise ConfigError(f"{path}: need at least 8 samples, got {len(rows)}")
    xs = np.array([r[0] for r in rows])
    bs = np.array([r[1] for r in rows])
    if not (np.all(np.isfinite(xs)) and np.all(np.isfinite(bs))):
        raise ConfigError(f"{path}: non-finite sample values")
    dxs = np.diff(xs)
    if np.any(dxs <= 0.0):
        raise ConfigError(f"{path}: sample positions must be strictly increasing")
    step = dxs.mean()
    if np.max(np.abs(dxs - step)) > 1e-8 * step:
        raise ConfigError(f"{path}: sample positions must be uniformly spaced")
    period = step * len(rows)
    if abs(period - grid.length) > 1e-8 * grid.length:
        raise ConfigError(
            f"{path}: samples cover {period:.12g}, domain length is {grid.length:.12g}"
        )

    m = len(rows)
    coeff = np.fft.rfft(bs) / m
    # place the sampled modes into the target resolution, shifting phases
    # so the interpolant is evaluated at the grid nodes starting from 0
    n = grid.n
    keep = min(m // 2, n // 2)
    target = np.zeros(n // 2 + 1, dtype=complex)
    target[: keep + 1] = coeff[: keep + 1]
    j = np.arange(keep + 1)
    target[: keep + 1] *= np.exp(-2j * np.pi * j * xs[0] / grid.length)
    target[n // 2] = target[n // 2].real  # the top mode must stay a pure cosine
    b = np.fft.irfft(target * n, n)
    return Bathymetry.from_profile(b, grid)


_TIMESERIES_HEADER = "# t energy mass min_h xs_norm es_norm"
_SNAPSHOT_HEADER = "# x zeta u b h"


def emit_timeseries(records: list[DiagnosticRecord], path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(_TIMESERIES_HEADER + "\n")
        for r in records:
            fh.write(
                f"{r.t:.17g} {r.energy:.17g} {r.mass:.17g} "
                f"{r.min_h:.17g} {r.xs:.17g} {r.es:.17g}\n"
            )


def emit_snapshot(
    state: State, bathymetry: Bathymetry, params: Parameters, grid: Grid, path: str
) -> None:
    h = compute_depth(state, bathymetry, params).values
    x = grid.nodes()
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(_SNAPSHOT_HEADER + "\n")
        for i in range(grid.n):
            fh.write(
                f"{x[i]:.17g} {state.zeta[i]:.17g} {state.u[i]:.17g} "
                f"{bathymetry.b[i]:.17g} {h[i]:.17g}\n"
            )


def snapshot_path(output_dir: str, step: int) -> str:
    return os.path.join(output_dir, f"snap_{step:06d}.dat")


@dataclass(frozen=True)
class PreparedRun:
    cfg: RunConfig
    grid: Grid
    params: Parameters
    state: State
    bathymetry: Bathymetry
    control: StepControl


def prepare_run(cfg: RunConfig) -> PreparedRun:
    """Materialize grid, parameters, initial data, and bathymetry."""
    try:
        grid = Grid(cfg.n, cfg.length)
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc
    if cfg.mode not in ("nonlinear", "linearized", "picard"):
        raise ConfigError(f"unknown mode {cfg.mode!r}")

    # build with a provisional floor; the configured/derived floor is applied below
    try:
        probe = Parameters(cfg.epsilon, cfg.mu, h0=1e-12)
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc
    x0 = None if cfg.x0 < 0.0 else cfg.x0
    try:
        state, bathymetry = build_scenario(
            cfg.scenario, grid, probe, cfg.amplitude, cfg.width,
            cfg.bar_height, cfg.bar_width, x0,
        )
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc
    if cfg.bathymetry_file:
        bathymetry = load_bathymetry(cfg.bathymetry_file, grid)

    min_h = compute_depth(state, bathymetry, probe).min_value
    if cfg.h0 > 0.0:
        h0 = cfg.h0
    else:
        h0 = 0.5 * min_h  # default floor: half the initial minimum depth
    try:
        params = Parameters(cfg.epsilon, cfg.mu, h0=h0)
    except ValueError as exc:
        raise ConfigError(f"derived depth floor is not admissible: {exc}") from exc
    if min_h < params.h0:
        raise ConfigError(
            f"initial state violates the depth floor: min depth {min_h:.6g} < h0 {params.h0:.6g}"
        )
    try:
        control = StepControl(
            t_end=cfg.t_end,
            cfl=cfg.cfl,
            dt_max=cfg.dt_max if cfg.dt_max > 0.0 else math.inf,
        )
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc
    return PreparedRun(cfg, grid, params, state, bathymetry, control)


def _run_nonlinear(prep: PreparedRun) -> int:
    cfg = prep.cfg
    os.makedirs(cfg.output_dir, exist_ok=True)
    sink = None
    if cfg.snapshot_every > 0.0:
        def sink(step: int, state: State) -> None:
            emit_snapshot(
                state, prep.bathymetry, prep.params, prep.grid,
                snapshot_path(cfg.output_dir, step),
            )
    outcome = run(
        prep.state, prep.bathymetry, prep.params, prep.grid, prep.control,
        s=cfg.s, norm_factor=cfg.blowup_factor,
        snapshot_every=cfg.snapshot_every if cfg.snapshot_every > 0.0 else None,
        snapshot_sink=sink,
    )
    emit_timeseries(outcome.history, os.path.join(cfg.output_dir, "timeseries.dat"))
    last = outcome.history[-1]
    print(
        f"{outcome.status}: t = {last.t:.6g}, steps = {outcome.steps}, "
        f"energy = {last.energy:.12g}, min_h = {last.min_h:.6g}"
    )
    return 0 if outcome.completed else 1


def _reference_from_nonlinear(prep: PreparedRun) -> ReferenceTrajectory | None:
    states: list[State] = []
    outcome = run(
        prep.state, prep.bathymetry, prep.params, prep.grid, prep.control,
        s=prep.cfg.s, norm_factor=prep.cfg.blowup_factor,
        snapshot_every=None, snapshot_sink=lambda step, st: states.append(st),
    )
    if not outcome.completed:
        print(f"reference run terminated early: {outcome.status}", file=sys.stderr)
        return None
    return ReferenceTrajectory.from_states(states)


def _run_linearized(prep: PreparedRun) -> int:
    cfg = prep.cfg
    os.makedirs(cfg.output_dir, exist_ok=True)
    reference = _reference_from_nonlinear(prep)
    if reference is None:
        return 1
    mol = (
        Mollifier.for_grid(cfg.mollifier_delta, prep.grid)
        if cfg.mollifier_delta > 0.0
        else None
    )
    sol = solve_linear(
        reference, prep.state, prep.bathymetry, prep.params, prep.grid,
        prep.control, mollifier=mol,
    )
    records = []
    for j in range(sol.times.size):
        st = State(sol.zetas[j], sol.us[j], float(sol.times[j]))
        records.append(record_for(st, prep.bathymetry, prep.params, prep.grid, cfg.s))
    emit_timeseries(records, os.path.join(cfg.output_dir, "timeseries.dat"))
    print(
        f"completed: linearized solve to t = {sol.t1:.6g} "
        f"({sol.times.size - 1} steps), es_norm = {records[-1].es:.12g}"
    )
    return 0


def _run_picard(prep: PreparedRun) -> int:
    cfg = prep.cfg
    os.makedirs(cfg.output_dir, exist_ok=True)
    mol = (
        Mollifier.for_grid(cfg.mollifier_delta, prep.grid)
        if cfg.mollifier_delta > 0.0
        else None
    )
    result = picard_solve(
        prep.state, prep.bathymetry, prep.params, prep.grid, prep.control,
        max_iters=cfg.picard_max_iters, tol=cfg.picard_tol, s=cfg.s, mollifier=mol,
    )
    for i, gap in enumerate(result.gaps, start=1):
        print(f"iteration {i}: gap = {gap:.6e}")
    sol = result.trajectory
    records = []
    for j in range(sol.times.size):
        st = State(sol.zetas[j], sol.us[j], float(sol.times[j]))
        records.append(record_for(st, prep.bathymetry, prep.params, prep.grid, cfg.s))
    emit_timeseries(records, os.path.join(cfg.output_dir, "timeseries.dat"))
    if result.converged:
        print(f"converged in {result.iterations} iterations")
        return 0
    print(f"not converged after {result.iterations} iterations", file=sys.stderr)
    return 1


def command_run(cfg: RunConfig) -> int:
    prep = prepare_run(cfg)
    try:
        if cfg.mode == "nonlinear":
            return _run_nonlinear(prep)
        if cfg.mode == "linearized":
            return _run_linearized(prep)
        return _run_picard(prep)
    except (DepthError, FactorizationError) as exc:
        print(f"terminated: {exc}", file=sys.stderr)
        return 1


# ---------------------------------------------------------------------------
# verification suite


@dataclass
class _Check:
    name: str
    measured: float
    threshold: float
    ok: bool
    compare: str = "<="


def _report(checks: list[_Check]) -> int:
    width = max(len(c.name) for c in checks)
    failures = 0
    for c in checks:
        status = "PASS" if c.ok else "FAIL"
        print(
            f"{c.name:<{width}}  measured {c.measured:.6e}  "
            f"required {c.compare} {c.threshold:.6e}  {status}"
        )
        failures += 0 if c.ok else 1
    print(f"{len(checks) - failures}/{len(checks)} checks passed")
    return 0 if failures == 0 else 3


def _verify_state(rng, grid, bathymetry, params, k_cut=None):
    """Random band-limited admissible state over the given bottom."""
    k = grid.wavenumbers()
    if k_cut is None:
        k_cut = k.max() / 5.0
    def field(scale):
        coeff = np.fft.rfft(rng.standard_normal(grid.n))
        coeff[k > k_cut] = 0.0
        f = np.fft.irfft(coeff, grid.n)
        return scale * f / np.max(np.abs(f))
    zeta = bathymetry.b + field(0.25)
    # lift the surface until the depth clears the floor comfortably
    h = 1.0 + params.epsilon * (zeta - bathymetry.b)
    lift = params.h0 * 1.5 - h.min()
    if lift > 0.0:
        zeta = zeta + lift / params.epsilon
    return State(zeta, field(0.3))


def verify_suite(cfg: RunConfig) -> int:
    """Run the property checks and report a pass/fail table."""
    rng = np.random.default_rng(cfg.seed)
    grid = Grid(128, 2.0 * np.pi)
    x = grid.nodes()
    bathymetry = Bathymetry.from_profile(
        0.15 * np.cos(2.0 * x) + 0.08 * np.sin(5.0 * x), grid
    )
    params = Parameters(0.5, 0.3, h0=0.25)
    checks: list[_Check] = []

    # operator symmetry, coercivity, and solve accuracy
    sym_worst = res_worst = round_worst = 0.0
    coer_margin = np.inf
    assembly_ok = True
    for _ in range(6):
        state = _verify_state(rng, grid, bathymetry, params)
        if cfg.verify_break_depth:
            state = State(state.zeta - 2.0 / params.epsilon, state.u)
        try:
            h = compute_depth(state, bathymetry, params).values
            op = assemble_T(h, bathymetry, params, grid)
        except (DepthError, FactorizationError):
            assembly_ok = False
            break
        sym_worst = max(sym_worst, float(np.max(np.abs(op.dense - op.dense.T))))
        rep = coercivity_report(op, trials=8, seed=int(rng.integers(2**31)))
        coer_margin = min(coer_margin, rep.min_ratio / rep.bound)
        f = rng.standard_normal(grid.n)
        w = solve_T(op, f)
        res_worst = max(
            res_worst,
            float(np.linalg.norm(apply_T(op, w) - f) / np.linalg.norm(f)),
        )
        g = rng.standard_normal(grid.n)
        round_worst = max(
            round_worst,
            float(
                np.linalg.norm(solve_T(op, apply_T(op, g)) - g) / np.linalg.norm(g)
            ),
        )
    if not assembly_ok:
        checks.append(_Check("operator assembly succeeded", 0.0, 1.0, False, compare=">="))
        return _report(checks)
    checks.append(_Check("operator symmetry (max abs)", sym_worst, 0.0, sym_worst == 0.0))
    checks.append(
        _Check("coercivity margin (min ratio/bound)", coer_margin, 1.0, coer_margin >= 1.0, ">=")
    )
    checks.append(_Check("solve residual (relative)", res_worst, 1e-12, res_worst <= 1e-12))
    checks.append(_Check("solve round-trip (relative)", round_worst, 1e-12, round_worst <= 1e-12))

    # energy identity: assembled quadratic form vs factorized evaluation
    ident_worst = 0.0
    for _ in range(4):
        state = _verify_state(rng, grid, bathymetry, params)
        h = compute_depth(state, bathymetry, params).values
        op = assemble_T(h, bathymetry, params, grid)
        w = rng.standard_normal(grid.n)
        quad = inner_product(apply_T(op, w), w, grid)
        t1w = op.factors.apply_t1(w)
        t2w = op.factors.apply_t2(w)
        split = (
            inner_product(h * w, w, grid)
            + params.mu * inner_product(h * t1w, t1w, grid)
            + params.mu * inner_product(h * t2w, t2w, grid)
        )
        ident_worst = max(ident_worst, abs(quad - split) / abs(split))
    checks.append(_Check("energy identity (relative)", ident_worst, 1e-13, ident_worst <= 1e-13))

    # source decomposition and formulation equivalence on band-limited states
    dec_worst = equiv_worst = 0.0
    for _ in range(6):
        state = _verify_state(rng, grid, bathymetry, params)
        h = compute_depth(state, bathymetry, params).values
        ux = d1_spectral(state.u, grid)
        lhs = params.epsilon * params.mu * h * q_total(h, state.u, bathymetry, params, grid)
        split = q1_apply(state, ux, bathymetry, params, grid) + q2_eval(
            state, bathymetry, params, grid
        )
        dec_worst = max(
            dec_worst, float(np.linalg.norm(split - lhs) / np.linalg.norm(lhs))
        )
        dz1, du1 = nonlinear_rhs(state, bathymetry, params, grid)
        dz2, du2 = condensed_rhs(state, bathymetry, params, grid)
        scale = np.linalg.norm(np.concatenate([dz1, du1]))
        equiv_worst = max(
            equiv_worst,
            float(np.linalg.norm(np.concatenate([dz1 - dz2, du1 - du2])) / scale),
        )
    checks.append(_Check("source decomposition (relative)", dec_worst, 1e-10, dec_worst <= 1e-10))
    checks.append(
        _Check("formulation equivalence (relative)", equiv_worst, 1e-9, equiv_worst <= 1e-9)
    )

    # cutoff operator: smoothing-commutation and self-adjointness
    mol = Mollifier.for_grid(4.0 / grid.wavenumbers().max(), grid)
    comm_worst = adj_worst = 0.0
    for _ in range(4):
        f = rng.standard_normal(grid.n)
        g = rng.standard_normal(grid.n)
        a = lambda_s(mollify(f, mol, grid), 2.0, grid)
        b = mollify(lambda_s(f, 2.0, grid), mol, grid)
        denom = np.linalg.norm(a) or 1.0
        comm_worst = max(comm_worst, float(np.linalg.norm(a - b) / denom))
        adj = abs(
            inner_product(mollify(f, mol, grid), g, grid)
            - inner_product(f, mollify(g, mol, grid), grid)
        )
        adj_worst = max(adj_worst, adj / abs(inner_product(f, f, grid)))
    checks.append(
        _Check("cutoff commutation (relative)", comm_worst, 1e-13, comm_worst <= 1e-13)
    )
    checks.append(
        _Check("cutoff self-adjointness (relative)", adj_worst, 1e-13, adj_worst <= 1e-13)
    )

    # parameter sweeps: inverse bounds and norm equivalence
    sweep_states = []
    for _ in range(2):
        st = _verify_state(rng, grid, bathymetry, params)
        sweep_states.append((compute_depth(st, bathymetry, params).values, bathymetry))
    mus = [1e-4, 1e-3, 1e-2, 1e-1, 1.0]
    records = inverse_bound_sweep(
        sweep_states,
        [(e, m) for e in (0.1, 1.0) for m in mus],
        s=2.0, grid=grid, trials=3, seed=cfg.seed + 1,
    )
    spread1, spread2 = sweep_spreads(records)
    checks.append(_Check("inverse bound spread (first)", spread1, 10.0, spread1 <= 10.0))
    checks.append(_Check("inverse bound spread (derivative)", spread2, 10.0, spread2 <= 10.0))

    pair_states = []
    for _ in range(4):
        st = _verify_state(rng, grid, bathymetry, params)
        ref = _verify_state(rng, grid, bathymetry, params)
        pair_states.append((st, ref))
    eq = equivalence_report(
        pair_states, bathymetry,
        [(e, m) for e in (0.1, 1.0) for m in mus], grid, s=2.0, h0=0.05,
    )
    hi = max(r.ratio_max for r in eq) / min(r.ratio_max for r in eq)
    lo = max(r.ratio_min for r in eq) / min(r.ratio_min for r in eq)
    checks.append(_Check("norm equivalence spread (upper)", hi, 10.0, hi <= 10.0))
    checks.append(_Check("norm equivalence spread (lower)", lo, 10.0, lo <= 10.0))

    # short conservation run on the demo solitary wave
    run_grid = Grid(256, 60.0)
    run_params = Parameters(0.5, 0.5, h0=0.25)
    wave = solitary_wave(0.4, run_params, run_grid)
    outcome = run(
        wave, Bathymetry.flat(run_grid), run_params, run_grid,
        StepControl(t_end=2.0, cfl=0.5),
    )
    e0 = outcome.history[0].energy
    drift = max(abs(r.energy - e0) for r in outcome.history) / e0
    checks.append(
        _Check("energy drift (relative, t=2)", drift, 1e-6, outcome.completed and drift <= 1e-6)
    )
    m0 = outcome.history[0].mass
    mdrift = max(abs(r.mass - m0) for r in outcome.history)
    checks.append(_Check("mass drift (absolute, t=2)", mdrift, 1e-12, mdrift <= 1e-12))

    return _report(checks)


# ---------------------------------------------------------------------------
# entry point


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="gn1d",
        description="Dispersive shallow-water solver on a periodic 1D domain",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="integrate a configured scenario")
    p_run.add_argument("--config", required=True, help="path to a key = value config file")

    p_verify = sub.add_parser("verify", help="run the analytical property checks")
    p_verify.add_argument("--config", default=None, help="optional config (seed, hooks)")
    p_verify.add_argument("--seed", type=int, default=None, help="override the RNG seed")

    sub.add_parser("scenarios", help="list the named scenarios")

    p_dump = sub.add_parser("dump-config", help="print the default configuration")
    p_dump.add_argument("--config", default=None, help="start from this config instead")

    args = parser.parse_args(argv)

    try:
        if args.command == "run":
            return command_run(load_config(args.config))
        if args.command == "verify":
            cfg = load_config(args.config) if args.config else RunConfig()
            if args.seed is not None:
                cfg = replace(cfg, seed=args.seed)
            return verify_suite(cfg)
        if args.command == "scenarios":
            width = max(len(name) for name in SCENARIOS)
            for name in sorted(SCENARIOS):
                print(f"{name:<{width}}  {SCENARIOS[name].description}")
            return 0
        if args.command == "dump-config":
            cfg = load_config(args.config) if args.config else RunConfig()
            sys.stdout.write(dump_config(cfg))
            return 0
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    raise AssertionError("unreachable")


if __name__ == "__main__":
    sys.exit(main())
