#!/usr/bin/env python3
"""Sweep the expansion-rate knob for a dS cell and tabulate the design.

For each HL the script designs the cell (index profile, control-beam
intensity, attenuator), then reports the exit-plane index, the peak beam
intensity, and the accumulated phase difference against the empty cell in
units of pi.  The HL = 0.01 and 0.1 rows reproduce the headline numbers:
n(L) = 1.000025 / 1.0025 and a phase swing of about 21 pi between them.
"""

import argparse

import numpy as np

from cosmocell import SpacetimeSpec, design_cell, phase_difference_closed


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--cell-length", type=float, default=0.01, help="L in meters")
    ap.add_argument("--lambda0", type=float, default=780e-9, help="vacuum wavelength in meters")
    ap.add_argument("--hl-min", type=float, default=0.01)
    ap.add_argument("--hl-max", type=float, default=0.5)
    ap.add_argument("--steps", type=int, default=12)
    args = ap.parse_args()

    L, lam = args.cell_length, args.lambda0
    print(f"dS cell design sweep: L = {L} m, lambda0 = {lam} m")
    print(f"{'HL':>8} {'n(L)':>14} {'I_max [C]':>12} {'dphi/pi':>12}")
    for HL in np.geomspace(args.hl_min, args.hl_max, args.steps):
        H = HL / L
        design = design_cell(SpacetimeSpec(kind="dS", H=H), L=L)
        dphi = phase_difference_closed(H, L, lam)
        print(
            f"{HL:8.4f} {design.n_profile.values[-1]:14.9f} "
            f"{design.I_profile[-1]:12.6g} {dphi / np.pi:12.6f}"
        )


if __name__ == "__main__":
    main()
