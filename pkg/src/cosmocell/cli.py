"""Command-line front end: config-driven experiment runs.

    cosmocell <command> --config cfg.toml [--out DIR] [--seed N] [--plots]

Commands: index, design, phase, fringe, trace, redshift.  Every run writes
its resolved configuration to <command>.effective.cfg next to the outputs;
exit codes are 0 (success), 2 (config error) and 3 (domain/physics error),
with the violated invariant named on stderr.
"""

from __future__ import annotations

import argparse
import dataclasses
import math
import sys
from pathlib import Path

from .config import ConfigError, ExperimentConfig, effective_sections, load_config
from .csvio import toml_dumps, write_csv, write_json, write_text
from .interferometer import fringe_scan
from .medium import design_cell
from .propagation import optical_phase, phase_difference_closed, redshift_factor
from .rays import critical_impact_parameter, deflection_angle, radial_medium, trace_ray
from .spacetimes import DomainError

COMMANDS = ("index", "design", "phase", "fringe", "trace", "redshift")


def _write_effective(cfg: ExperimentConfig, outdir: Path, command: str) -> None:
    write_text(outdir / f"{command}.effective.cfg", toml_dumps(effective_sections(cfg)))


def _design(cfg: ExperimentConfig):
    return design_cell(
        cfg.spacetime,
        cfg.cell.L,
        grid_size=cfg.cell.grid_size,
        theta=cfg.cell.theta,
        C_const=cfg.cell.C_const,
        form=cfg.cell.profile_form,
    )


def _profile_rows(design):
    header = ["z_m", "n"]
    cols = [design.grid, design.n_profile.values]
    if design.I_profile is not None:
        header.append("I")
        cols.append(design.I_profile)
    if design.T_profile is not None:
        header.append("T")
        cols.append(design.T_profile)
    return header, list(zip(*cols))


def cmd_index(cfg: ExperimentConfig, outdir: Path, plots: bool) -> None:
    design = _design(cfg)
    header, rows = _profile_rows(design)
    write_csv(outdir / "index.csv", header, rows)
    if plots:
        from .plotting import save_profile_plot

        save_profile_plot(design, outdir / "index.svg")


def cmd_design(cfg: ExperimentConfig, outdir: Path, plots: bool) -> None:
    design = _design(cfg)
    header, rows = _profile_rows(design)
    write_csv(outdir / "design.csv", header, rows)
    meta = {
        "kind": design.kind,
        "L": design.L,
        "grid_size": int(design.grid.size),
        "theta": design.theta,
        "C_const": design.C_const,
        "profile_form": design.profile_form,
        "HL": cfg.spacetime.H * design.L,
        "n_entry": float(design.n_profile.values[0]),
        "n_exit": float(design.n_profile.values[-1]),
        "beams_realizable": design.I_profile is not None,
        "intensity_model": "n = 1 + I cos(theta) / C",
        "attenuator_normalization": "T(z) = I(z) / I(L)",
    }
    write_json(outdir / "design.json", meta)
    if plots:
        from .plotting import save_profile_plot

        save_profile_plot(design, outdir / "design.svg")


def cmd_phase(cfg: ExperimentConfig, outdir: Path, plots: bool) -> None:
    design = _design(cfg)
    quad = optical_phase(design.n_profile, cfg.probe.lambda0)
    H, L, lam = cfg.spacetime.H, cfg.cell.L, cfg.probe.lambda0
    rows = []
    if cfg.spacetime.kind in ("Min", "dS"):
        closed = phase_difference_closed(H, L, lam)
        rows.append((H, L, lam, closed, closed / math.pi, "closed_form"))
    rows.append((H, L, lam, quad.delta_phi, quad.delta_phi / math.pi, "quadrature"))
    write_csv(
        outdir / "phase.csv",
        ["H", "L", "lambda0", "delta_phi_rad", "delta_phi_over_pi", "method"],
        rows,
    )


def cmd_fringe(cfg: ExperimentConfig, outdir: Path, plots: bool) -> None:
    scan = fringe_scan(
        cfg.mzi_config(),
        cfg.sweep_spec(),
        H=cfg.spacetime.H,
        L=cfg.cell.L,
        lambda0=cfg.probe.lambda0,
    )
    rows = zip(
        scan.sweep_values,
        scan.delta_phi,
        scan.p_plus,
        scan.p_minus,
        scan.counts_plus,
        scan.counts_minus,
    )
    write_csv(
        outdir / "fringe.csv",
        ["sweep_value", "delta_phi_rad", "p_plus", "p_minus", "counts_plus", "counts_minus"],
        ((a, b, c, d, int(e), int(f)) for a, b, c, d, e, f in rows),
    )
    meta = {
        "scheme": scan.config.scheme,
        "sweep_kind": scan.sweep_kind,
        "sweep_steps": len(scan),
        "n0": scan.config.n0,
        "eta": scan.config.eta,
        "medium_state": scan.config.medium_state,
        "sampling": scan.config.sampling,
        "seed": scan.config.seed,
        "L": scan.L,
        "lambda0": scan.lambda0,
        "piezo_convention": "piezo phase adds on the reference arm: signal ~ delta_phi - piezo",
        "splitter_convention": "lossless 50/50, transmitted 1/sqrt2, reflected i/sqrt2",
        "counts_convention": "deterministic mode rounds n0*p to nearest integer",
    }
    write_json(outdir / "fringe.json", meta)
    if plots:
        from .plotting import save_fringe_plot

        save_fringe_plot(scan, outdir / "fringe.svg")


def cmd_trace(cfg: ExperimentConfig, outdir: Path, plots: bool) -> None:
    medium = radial_medium(cfg.spacetime)
    R = cfg.ray.far_field_factor * medium.char_length
    defl_rows = []
    rays = []
    for k, b in enumerate(cfg.ray.impact_parameters):
        res = deflection_angle(medium, b, far_field_factor=cfg.ray.far_field_factor)
        defl_rows.append(
            (b, res.angle if res.angle is not None else math.nan, res.captured)
        )
        # path CSV from a nearer launch so the bending region is resolved;
        # the deflection above still uses the full far field + Richardson
        R_path = min(R, 100.0 * max(b, medium.char_length))
        ray = trace_ray(
            medium,
            (-math.sqrt(R_path * R_path - b * b), b),
            (1.0, 0.0),
            2.2 * R_path + 100.0 * medium.char_length,
            n_samples=cfg.ray.n_samples,
        )
        rays.append(ray)
        write_csv(
            outdir / f"ray_{k}.csv",
            ["s_m", "x_m", "y_m", "bouguer_rel_drift"],
            zip(ray.s, ray.points[:, 0], ray.points[:, 1], ray.bouguer_rel_drift),
        )
    write_csv(outdir / "deflection.csv", ["b_m", "deflection_rad", "captured"], defl_rows)
    meta = {
        "kind": medium.label,
        "far_field_radius": R,
        "richardson": "angle = 2 alpha(2R) - alpha(R)",
        "path_launch_radius": "min(far_field_radius, 100 max(b, char length))",
        "max_bouguer_drift": max(r.max_drift for r in rays),
        "ray_statuses": [r.status for r in rays],
    }
    if medium.capture_radius:
        meta["critical_impact_parameter"] = critical_impact_parameter(medium)
    write_json(outdir / "trace.json", meta)
    if plots:
        from .plotting import save_ray_plot

        save_ray_plot(rays, medium, outdir / "trace.svg")


def cmd_redshift(cfg: ExperimentConfig, outdir: Path, plots: bool) -> None:
    factor = redshift_factor(cfg.spacetime, cfg.redshift.t_emit, cfg.redshift.t_obs)
    write_csv(
        outdir / "redshift.csv",
        ["t_emit_s", "t_obs_s", "redshift_factor"],
        [(cfg.redshift.t_emit, cfg.redshift.t_obs, factor)],
    )


_HANDLERS = {
    "index": cmd_index,
    "design": cmd_design,
    "phase": cmd_phase,
    "fringe": cmd_fringe,
    "trace": cmd_trace,
    "redshift": cmd_redshift,
}


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", required=True, help="path to the TOML config")
    common.add_argument("--out", default=None, help="output directory (overrides config)")
    common.add_argument("--seed", type=int, default=None, help="override [run] seed")
    common.add_argument("--plots", action="store_true", help="also write SVG figures")
    parser = argparse.ArgumentParser(
        prog="cosmocell",
        description="design and simulate curved-spacetime optical media",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sub.add_parser(name, parents=[common], help=f"run the {name} pipeline")
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        cfg = load_config(args.config)
        if args.seed is not None:
            if args.seed < 0:
                raise ConfigError(f"--seed must be a non-negative integer, got {args.seed}")
            cfg = dataclasses.replace(
                cfg, run=dataclasses.replace(cfg.run, seed=args.seed)
            )
        if args.out is not None:
            cfg = dataclasses.replace(
                cfg, output=dataclasses.replace(cfg.output, directory=args.out)
            )
        if args.plots:
            cfg = dataclasses.replace(
                cfg, output=dataclasses.replace(cfg.output, emit_plots=True)
            )
        outdir = Path(cfg.output.directory)
        outdir.mkdir(parents=True, exist_ok=True)
        _write_effective(cfg, outdir, args.command)
        _HANDLERS[args.command](cfg, outdir, cfg.output.emit_plots)
    except ConfigError as e:
        print(f"config error: {e}", file=sys.stderr)
        return 2
    except DomainError as e:
        print(f"domain error: {e}", file=sys.stderr)
        return 3
    return 0


if __name__ == "__main__":
    sys.exit(main())
