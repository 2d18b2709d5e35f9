"""Static SVG figures for CLI runs.

Plots never feed back into CSV content and are rendered deterministically
(fixed hash salt, no embedded dates) so reruns produce identical bytes.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

__all__ = ["save_profile_plot", "save_fringe_plot", "save_ray_plot"]

_RC = {"svg.hashsalt": "cosmocell", "figure.figsize": (6.0, 4.0)}


def _save(fig, path) -> None:
    fig.savefig(path, format="svg", metadata={"Date": None})
    plt.close(fig)


def save_profile_plot(design, path) -> None:
    """n(z) plus, where defined, the control-intensity and attenuator curves."""
    with plt.rc_context(_RC):
        n_rows = 1 + (design.I_profile is not None)
        fig, axes = plt.subplots(n_rows, 1, sharex=True, squeeze=False)
        ax = axes[0][0]
        ax.plot(design.grid, design.n_profile.values, color="tab:blue")
        ax.set_ylabel("n(z)")
        ax.set_title(f"{design.kind} cell, L = {design.L:g} m ({design.profile_form})")
        if design.I_profile is not None:
            ax2 = axes[1][0]
            ax2.plot(design.grid, design.I_profile, color="tab:orange", label="I(z)")
            if design.T_profile is not None:
                ax2.plot(design.grid, design.T_profile, color="tab:green", label="T(z)")
            ax2.set_ylabel("control curves")
            ax2.legend(loc="upper left")
        axes[-1][0].set_xlabel("z (m)")
        fig.tight_layout()
        _save(fig, path)


def save_fringe_plot(scan, path) -> None:
    with plt.rc_context(_RC):
        fig, ax = plt.subplots()
        x = scan.sweep_values
        ax.plot(x, scan.p_plus, color="tab:blue", label="p+")
        ax.plot(x, scan.p_minus, color="tab:red", label="p-")
        if scan.config.n0 > 0:
            axc = ax.twinx()
            axc.plot(x, scan.counts_plus, ".", color="tab:blue", markersize=3)
            axc.plot(x, scan.counts_minus, ".", color="tab:red", markersize=3)
            axc.set_ylabel(f"counts (n0 = {scan.config.n0})")
        xlabel = "HL" if scan.sweep_kind == "hubble" else "piezo phase (rad)"
        ax.set_xlabel(xlabel)
        ax.set_ylabel("detection probability")
        ax.set_ylim(-0.05, 1.05)
        ax.legend(loc="upper right")
        ax.set_title(f"scheme {scan.config.scheme} fringe scan")
        fig.tight_layout()
        _save(fig, path)


def save_ray_plot(rays, medium, path) -> None:
    with plt.rc_context(_RC):
        fig, ax = plt.subplots()
        for ray in rays:
            style = "-" if ray.status != "captured" else "--"
            ax.plot(ray.points[:, 0], ray.points[:, 1], style, linewidth=0.9)
        if medium.capture_radius:
            th = np.linspace(0.0, 2.0 * np.pi, 128)
            r = medium.domain[0]
            ax.plot(r * np.cos(th), r * np.sin(th), color="black", linewidth=1.2)
        ax.set_aspect("equal")
        ax.set_xlabel("x (m)")
        ax.set_ylabel("y (m)")
        ax.set_title(f"{medium.label} medium rays (dashed = captured)")
        fig.tight_layout()
        _save(fig, path)
