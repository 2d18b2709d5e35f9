#!/usr/bin/env python3
"""Deflection angles in the BH-analog medium: traced vs quadrature vs 4M/b.

Traces rays through n(r) = (M + 2r)^3 / (4 r^2 (2r - M)) over a range of
impact parameters and compares three numbers at each b: the ray-traced
deflection (Richardson-extrapolated to infinite launch radius), the
turning-point quadrature, and the weak-field expansion.  The two internal
routes agree to ~1e-4 or better; both sit above 4M/b by the second-order
term (15 pi / 4)(M/b)^2, which is why a bare 4M/b comparison misses at the
percent level even for b = 100M.
"""

import argparse
import math

from cosmocell import (
    SpacetimeSpec,
    circular_orbit_radius,
    critical_impact_parameter,
    deflection_angle,
    radial_medium,
    turning_point_deflection,
)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--mass", type=float, default=1.0)
    ap.add_argument(
        "-b", "--impact", type=float, nargs="+",
        default=[10.0, 20.0, 50.0, 100.0, 200.0, 500.0],
    )
    args = ap.parse_args()

    M = args.mass
    medium = radial_medium(SpacetimeSpec(kind="BH", M=M))
    print(f"BH-analog medium, M = {M}")
    print(f"photon-sphere analog radius : {circular_orbit_radius(medium):.9f}"
          f"  (exact (1 + sqrt3/2) M = {(1.0 + math.sqrt(3.0) / 2.0) * M:.9f})")
    print(f"critical impact parameter   : {critical_impact_parameter(medium):.9f}"
          f"  (exact 3 sqrt3 M = {3.0 * math.sqrt(3.0) * M:.9f})")
    print()
    print(f"{'b/M':>8} {'traced':>12} {'quadrature':>12} {'4M/b':>10} "
          f"{'+2nd order':>12} {'excess/4M/b':>12}")
    for b in sorted(args.impact):
        traced = deflection_angle(medium, b)
        if traced.captured:
            print(f"{b / M:8.2f} {'captured':>12}")
            continue
        quad = turning_point_deflection(medium, b)
        first = 4.0 * M / b
        second = first + (15.0 * math.pi / 4.0) * (M / b) ** 2
        print(
            f"{b / M:8.2f} {traced.angle:12.8f} {quad:12.8f} {first:10.6f} "
            f"{second:12.8f} {(traced.angle - first) / first:12.4%}"
        )


if __name__ == "__main__":
    main()
