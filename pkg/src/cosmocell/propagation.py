"""Optical phase through the cell and the expanding-universe analog.

For light of vacuum wavelength lambda0 crossing a cell with axial index
n(z), the accumulated phase is phi = (2 pi / lambda0) * int n dz and the
excess over vacuum is delta_phi = (2 pi / lambda0) * int (n - 1) dz.  For
the curved-universe profile n = 1 + H^2 z^2 / 4 this has the closed form

    delta_phi = pi H^2 L^3 / (6 lambda0).

A time-dependent RW cell n(t) = a(t) redshifts light: the frequency ratio
between emission and observation equals the scale-factor ratio.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from scipy.integrate import simpson

from .spacetimes import DomainError, IndexProfile, SpacetimeSpec, rw_index

__all__ = [
    "PhaseResult",
    "optical_phase",
    "phase_difference_closed",
    "redshift_factor",
]


@dataclass(frozen=True)
class PhaseResult:
    """Accumulated phase and its excess over vacuum, in radians."""

    phi: float
    delta_phi: float
    lambda0: float
    method: str


def _check_wavelength(lambda0: float) -> None:
    if not (math.isfinite(lambda0) and lambda0 > 0):
        raise DomainError(f"wavelength must satisfy 0 < lambda0, got {lambda0!r}")


def optical_phase(profile: IndexProfile, lambda0: float) -> PhaseResult:
    """Quadrature phase over the sampled profile (composite Simpson)."""
    _check_wavelength(lambda0)
    z, n = profile.positions, profile.values
    if z.size < 3:
        raise DomainError("phase quadrature needs at least 3 profile samples")
    k0 = 2.0 * math.pi / lambda0
    phi = k0 * float(simpson(n, x=z))
    delta = k0 * float(simpson(n - 1.0, x=z))
    return PhaseResult(phi=phi, delta_phi=delta, lambda0=lambda0, method="quadrature")


def phase_difference_closed(H: float, L: float, lambda0: float) -> float:
    """delta_phi = pi H^2 L^3 / (6 lambda0) for the quadratic cell profile."""
    _check_wavelength(lambda0)
    if not (math.isfinite(L) and L > 0):
        raise DomainError(f"cell length must satisfy 0 < L, got {L!r}")
    if not (math.isfinite(H) and H >= 0):
        raise DomainError(f"H >= 0 violated: H = {H!r}")
    return math.pi * H * H * L**3 / (6.0 * lambda0)


def redshift_factor(spec: SpacetimeSpec, t_emit: float, t_obs: float) -> float:
    """Frequency ratio nu_emit / nu_obs = a(t_obs) / a(t_emit) for an RW cell.

    Values > 1 are redshifts (expanding a); the factor equals 1 + z in the
    usual cosmological notation.
    """
    if spec.kind != "RW":
        raise DomainError(f"redshift_factor applies to RW only, got kind {spec.kind!r}")
    if not (t_emit <= t_obs):
        raise DomainError(
            f"emission must precede observation: t_emit = {t_emit!r}, t_obs = {t_obs!r}"
        )
    a_emit = rw_index(spec, t_emit)
    a_obs = rw_index(spec, t_obs)
    return a_obs / a_emit
