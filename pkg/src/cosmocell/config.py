"""Strict TOML experiment configuration.

Schema (all sections except [spacetime] optional; unknown keys rejected):

    [spacetime]
    kind = "dS"              # Min | BH | dS | dSBH | AdS | AdSBH | RW
    H = 10.0                 # 1/m; or give HL (dimensionless) instead
    HL = 0.1                 # mutually exclusive with H; H = HL / cell.L
    M = 1.0                  # m, BH-family kinds only
    scale_factor = "exp"     # RW only: exp | powerlaw | constant
    rate = 1.0               # exp: a = exp(rate t); powerlaw: a = (t/t0)^rate
    t0 = 1.0                 # powerlaw reference time, > 0
    value = 1.0              # constant scale factor, > 0
    t_domain = [0.0, 10.0]   # RW evaluation window

    [cell]
    L = 0.01                 # m
    grid_size = 1001
    theta = 0.0              # rad, control-beam angle
    C_const = 1.0
    profile_form = "quadratic"   # quadratic | exact

    [probe]
    lambda0 = 780e-9         # m
    n0 = 0                   # photons per scan point

    [run]
    scheme = "II"            # I | II | joint_model
    piezo = 0.0
    eta = 0.0
    medium_state = "cat"     # joint_model: cat | definite_n1 | definite_n2
    sampling = "deterministic_mean"   # or poisson
    seed = 0
    sweep = "hubble"         # hubble (values are HL) | piezo (values are rad)
    sweep_start = 0.01
    sweep_stop = 0.1
    sweep_steps = 101

    [ray]
    impact_parameters = [100.0]
    far_field_factor = 1e4
    n_samples = 800

    [redshift]
    t_emit = 0.0
    t_obs = 1.0

    [output]
    directory = "out"
    emit_plots = false

Module invariants are re-validated at load, so a bad config fails before
any computation; the resolved values (defaults filled, HL folded into H)
round-trip through effective_sections()/toml_dumps.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

try:
    import tomllib  # Python >= 3.11
except ModuleNotFoundError:  # pragma: no cover
    import tomli as tomllib

from .interferometer import MZIConfig, SweepSpec
from .spacetimes import KINDS, DomainError, SpacetimeSpec

__all__ = ["ConfigError", "ExperimentConfig", "load_config", "effective_sections"]

_REQUIRED = object()

SCALE_FACTOR_FORMS = ("exp", "powerlaw", "constant")
PROFILE_FORMS = ("quadratic", "exact")


class ConfigError(ValueError):
    """Configuration rejected: parse failure or violated invariant."""


def _take(table: dict, section: str, key: str, kind: str, default=_REQUIRED):
    if key not in table:
        if default is _REQUIRED:
            raise ConfigError(f"[{section}] is missing required key {key!r}")
        return default
    v = table.pop(key)
    if kind == "float":
        if isinstance(v, bool) or not isinstance(v, (int, float)):
            raise ConfigError(f"[{section}] {key} must be a number, got {v!r}")
        return float(v)
    if kind == "int":
        if isinstance(v, bool) or not isinstance(v, int):
            raise ConfigError(f"[{section}] {key} must be an integer, got {v!r}")
        return v
    if kind == "str":
        if not isinstance(v, str):
            raise ConfigError(f"[{section}] {key} must be a string, got {v!r}")
        return v
    if kind == "bool":
        if not isinstance(v, bool):
            raise ConfigError(f"[{section}] {key} must be a boolean, got {v!r}")
        return v
    if kind == "float_list":
        if not isinstance(v, list) or not v:
            raise ConfigError(f"[{section}] {key} must be a non-empty array of numbers")
        out = []
        for x in v:
            if isinstance(x, bool) or not isinstance(x, (int, float)):
                raise ConfigError(f"[{section}] {key} must contain only numbers")
            out.append(float(x))
        return out
    raise AssertionError(kind)


def _reject_unknown(table: dict, section: str) -> None:
    if table:
        key = sorted(table)[0]
        raise ConfigError(f"unknown key {key!r} in [{section}]")


def _choice(value: str, allowed, section: str, key: str) -> str:
    if value not in allowed:
        raise ConfigError(
            f"[{section}] {key} must be one of {tuple(allowed)}, got {value!r}"
        )
    return value


@dataclass(frozen=True)
class CellConfig:
    L: float = 0.01
    grid_size: int = 1001
    theta: float = 0.0
    C_const: float = 1.0
    profile_form: str = "quadratic"


@dataclass(frozen=True)
class ProbeConfig:
    lambda0: float = 780e-9
    n0: int = 0


@dataclass(frozen=True)
class RunConfig:
    scheme: str = "II"
    piezo: float = 0.0
    eta: float = 0.0
    medium_state: str = "cat"
    sampling: str = "deterministic_mean"
    seed: int = 0
    sweep: str = "hubble"
    sweep_start: float = 0.01
    sweep_stop: float = 0.1
    sweep_steps: int = 101


@dataclass(frozen=True)
class RayConfig:
    impact_parameters: tuple = (100.0,)
    far_field_factor: float = 1e4
    n_samples: int = 800


@dataclass(frozen=True)
class RedshiftConfig:
    t_emit: float = 0.0
    t_obs: float = 1.0


@dataclass(frozen=True)
class OutputConfig:
    directory: str = "out"
    emit_plots: bool = False


@dataclass(frozen=True)
class ExperimentConfig:
    spacetime: SpacetimeSpec
    cell: CellConfig
    probe: ProbeConfig
    run: RunConfig
    ray: RayConfig
    redshift: RedshiftConfig
    output: OutputConfig
    scale_factor_form: Optional[str] = None
    scale_factor_params: Optional[dict] = None

    def mzi_config(self) -> MZIConfig:
        r, p = self.run, self.probe
        return MZIConfig(
            scheme=r.scheme,
            piezo_phase=r.piezo,
            n0=p.n0,
            eta=r.eta,
            medium_state=r.medium_state,
            sampling=r.sampling,
            seed=r.seed,
        )

    def sweep_spec(self) -> SweepSpec:
        r = self.run
        return SweepSpec(r.sweep, r.sweep_start, r.sweep_stop, r.sweep_steps)


def _build_scale_factor(form: str, params: dict):
    if form == "exp":
        rate = params["rate"]
        return lambda t: math.exp(rate * t)
    if form == "powerlaw":
        rate, t0 = params["rate"], params["t0"]
        return lambda t: (t / t0) ** rate
    value = params["value"]
    return lambda t: value


def _load_spacetime(table: dict, L: float):
    kind = _choice(_take(table, "spacetime", "kind", "str"), KINDS, "spacetime", "kind")
    H = _take(table, "spacetime", "H", "float", None)
    HL = _take(table, "spacetime", "HL", "float", None)
    M = _take(table, "spacetime", "M", "float", None)
    form = _take(table, "spacetime", "scale_factor", "str", None)
    rate = _take(table, "spacetime", "rate", "float", None)
    t0 = _take(table, "spacetime", "t0", "float", None)
    value = _take(table, "spacetime", "value", "float", None)
    t_domain = _take(table, "spacetime", "t_domain", "float_list", None)
    _reject_unknown(table, "spacetime")

    if H is not None and HL is not None:
        raise ConfigError("[spacetime] give H or HL, not both")
    if HL is not None:
        H = HL / L
    if kind == "dS" and H is not None and H * L >= 2.0:
        raise ConfigError(f"HL<2 violated: HL = {H * L:.6g} for the dS cell")

    if kind == "RW":
        if H is not None or M is not None:
            raise ConfigError("[spacetime] RW takes a scale_factor, not H/HL/M")
        if form is None:
            raise ConfigError("[spacetime] RW requires scale_factor (exp|powerlaw|constant)")
        _choice(form, SCALE_FACTOR_FORMS, "spacetime", "scale_factor")
        params = {}
        if form == "exp":
            if rate is None:
                raise ConfigError("[spacetime] scale_factor 'exp' requires rate")
            if t0 is not None or value is not None:
                raise ConfigError("[spacetime] 'exp' takes only rate")
            params["rate"] = rate
        elif form == "powerlaw":
            if rate is None:
                raise ConfigError("[spacetime] scale_factor 'powerlaw' requires rate")
            params["rate"] = rate
            params["t0"] = 1.0 if t0 is None else t0
            if params["t0"] <= 0:
                raise ConfigError("[spacetime] powerlaw t0 must be > 0")
            if value is not None:
                raise ConfigError("[spacetime] 'powerlaw' takes rate and t0 only")
        else:
            params["value"] = 1.0 if value is None else value
            if params["value"] <= 0:
                raise ConfigError("[spacetime] constant scale factor must be > 0")
            if rate is not None or t0 is not None:
                raise ConfigError("[spacetime] 'constant' takes only value")
        if t_domain is None:
            dom = (0.0, math.inf) if form == "powerlaw" else (-math.inf, math.inf)
        else:
            if len(t_domain) != 2 or not t_domain[0] < t_domain[1]:
                raise ConfigError("[spacetime] t_domain must be [lo, hi] with lo < hi")
            dom = (t_domain[0], t_domain[1])
        try:
            spec = SpacetimeSpec(
                "RW", scale_factor=_build_scale_factor(form, params), t_domain=dom
            )
        except DomainError as e:
            raise ConfigError(str(e)) from e
        return spec, form, dict(params, t_domain=list(dom))

    for key, val in (("scale_factor", form), ("rate", rate), ("t0", t0),
                     ("value", value), ("t_domain", t_domain)):
        if val is not None:
            raise ConfigError(f"[spacetime] key {key!r} applies to RW only")
    try:
        spec = SpacetimeSpec(kind, H=H or 0.0, M=M or 0.0)
    except DomainError as e:
        raise ConfigError(str(e)) from e
    return spec, None, None


def load_config(path) -> ExperimentConfig:
    """Parse and validate; every module invariant is checked here, so a
    config that loads will not fail later on plain construction."""
    try:
        with open(path, "rb") as fh:
            raw = tomllib.load(fh)
    except FileNotFoundError as e:
        raise ConfigError(f"config file not found: {path}") from e
    except tomllib.TOMLDecodeError as e:
        raise ConfigError(f"config parse error in {path}: {e}") from e

    known = {"spacetime", "cell", "probe", "run", "ray", "redshift", "output"}
    for section in raw:
        if section not in known:
            raise ConfigError(f"unknown section [{section}]")
        if not isinstance(raw[section], dict):
            raise ConfigError(f"[{section}] must be a table")
    if "spacetime" not in raw:
        raise ConfigError("missing required section [spacetime]")

    t = dict(raw.get("cell", {}))
    cell = CellConfig(
        L=_take(t, "cell", "L", "float", CellConfig.L),
        grid_size=_take(t, "cell", "grid_size", "int", CellConfig.grid_size),
        theta=_take(t, "cell", "theta", "float", CellConfig.theta),
        C_const=_take(t, "cell", "C_const", "float", CellConfig.C_const),
        profile_form=_choice(
            _take(t, "cell", "profile_form", "str", CellConfig.profile_form),
            PROFILE_FORMS, "cell", "profile_form",
        ),
    )
    _reject_unknown(t, "cell")
    if not (math.isfinite(cell.L) and cell.L > 0):
        raise ConfigError(f"[cell] 0 < L violated: L = {cell.L!r}")
    if cell.grid_size < 2:
        raise ConfigError(f"[cell] grid_size must be >= 2, got {cell.grid_size}")
    if not (math.isfinite(cell.C_const) and cell.C_const > 0):
        raise ConfigError(f"[cell] C_const must be > 0, got {cell.C_const!r}")
    if abs(cell.theta) >= math.pi / 2:
        raise ConfigError(f"[cell] control-beam geometry: |theta| < pi/2, got {cell.theta!r}")

    spacetime, sf_form, sf_params = _load_spacetime(dict(raw["spacetime"]), cell.L)

    t = dict(raw.get("probe", {}))
    probe = ProbeConfig(
        lambda0=_take(t, "probe", "lambda0", "float", ProbeConfig.lambda0),
        n0=_take(t, "probe", "n0", "int", ProbeConfig.n0),
    )
    _reject_unknown(t, "probe")
    if not (math.isfinite(probe.lambda0) and probe.lambda0 > 0):
        raise ConfigError(f"[probe] 0 < lambda0 violated: lambda0 = {probe.lambda0!r}")
    if probe.n0 < 0:
        raise ConfigError(f"[probe] n0 >= 0 violated: n0 = {probe.n0}")

    t = dict(raw.get("run", {}))
    run = RunConfig(
        scheme=_take(t, "run", "scheme", "str", RunConfig.scheme),
        piezo=_take(t, "run", "piezo", "float", RunConfig.piezo),
        eta=_take(t, "run", "eta", "float", RunConfig.eta),
        medium_state=_take(t, "run", "medium_state", "str", RunConfig.medium_state),
        sampling=_take(t, "run", "sampling", "str", RunConfig.sampling),
        seed=_take(t, "run", "seed", "int", RunConfig.seed),
        sweep=_take(t, "run", "sweep", "str", RunConfig.sweep),
        sweep_start=_take(t, "run", "sweep_start", "float", RunConfig.sweep_start),
        sweep_stop=_take(t, "run", "sweep_stop", "float", RunConfig.sweep_stop),
        sweep_steps=_take(t, "run", "sweep_steps", "int", RunConfig.sweep_steps),
    )
    _reject_unknown(t, "run")
    if run.seed < 0:
        raise ConfigError(f"[run] seed must be a non-negative integer, got {run.seed}")

    t = dict(raw.get("ray", {}))
    ray = RayConfig(
        impact_parameters=tuple(
            _take(t, "ray", "impact_parameters", "float_list",
                  list(RayConfig.impact_parameters))
        ),
        far_field_factor=_take(t, "ray", "far_field_factor", "float",
                               RayConfig.far_field_factor),
        n_samples=_take(t, "ray", "n_samples", "int", RayConfig.n_samples),
    )
    _reject_unknown(t, "ray")
    if any(b <= 0 or not math.isfinite(b) for b in ray.impact_parameters):
        raise ConfigError("[ray] impact_parameters must be positive and finite")
    if ray.far_field_factor < 10.0:
        raise ConfigError("[ray] far_field_factor must be >= 10")
    if ray.n_samples < 2:
        raise ConfigError(f"[ray] n_samples must be >= 2, got {ray.n_samples}")

    t = dict(raw.get("redshift", {}))
    redshift = RedshiftConfig(
        t_emit=_take(t, "redshift", "t_emit", "float", RedshiftConfig.t_emit),
        t_obs=_take(t, "redshift", "t_obs", "float", RedshiftConfig.t_obs),
    )
    _reject_unknown(t, "redshift")
    if not redshift.t_emit <= redshift.t_obs:
        raise ConfigError("[redshift] t_emit <= t_obs violated")

    t = dict(raw.get("output", {}))
    output = OutputConfig(
        directory=_take(t, "output", "directory", "str", OutputConfig.directory),
        emit_plots=_take(t, "output", "emit_plots", "bool", OutputConfig.emit_plots),
    )
    _reject_unknown(t, "output")

    cfg = ExperimentConfig(
        spacetime=spacetime,
        cell=cell,
        probe=probe,
        run=run,
        ray=ray,
        redshift=redshift,
        output=output,
        scale_factor_form=sf_form,
        scale_factor_params=sf_params,
    )
    # interferometer invariants (scheme, eta, sampling, sweep ranges)
    try:
        cfg.mzi_config()
        cfg.sweep_spec()
    except DomainError as e:
        raise ConfigError(str(e)) from e
    return cfg


def effective_sections(cfg: ExperimentConfig) -> dict:
    """Resolved config as dump-ready sections; reloading reproduces cfg."""
    st: dict = {"kind": cfg.spacetime.kind}
    if cfg.spacetime.kind == "RW":
        st["scale_factor"] = cfg.scale_factor_form
        for k, v in cfg.scale_factor_params.items():
            st[k] = v
    else:
        if cfg.spacetime.H:
            st["H"] = cfg.spacetime.H
        if cfg.spacetime.M:
            st["M"] = cfg.spacetime.M
    c, p, r, ry, z, o = cfg.cell, cfg.probe, cfg.run, cfg.ray, cfg.redshift, cfg.output
    return {
        "spacetime": st,
        "cell": {
            "L": c.L, "grid_size": c.grid_size, "theta": c.theta,
            "C_const": c.C_const, "profile_form": c.profile_form,
        },
        "probe": {"lambda0": p.lambda0, "n0": p.n0},
        "run": {
            "scheme": r.scheme, "piezo": r.piezo, "eta": r.eta,
            "medium_state": r.medium_state, "sampling": r.sampling,
            "seed": r.seed, "sweep": r.sweep, "sweep_start": r.sweep_start,
            "sweep_stop": r.sweep_stop, "sweep_steps": r.sweep_steps,
        },
        "ray": {
            "impact_parameters": list(ry.impact_parameters),
            "far_field_factor": ry.far_field_factor, "n_samples": ry.n_samples,
        },
        "redshift": {"t_emit": z.t_emit, "t_obs": z.t_obs},
        "output": {"directory": o.directory, "emit_plots": o.emit_plots},
    }
