"""Vapor-cell medium design.

The experiment replaces the spherically symmetric n(r) by an axial profile
n(z) in a narrow cylindrical cell of length L (s-wave / radial propagation
approximation), and realizes n(z) by two control beams whose intensity is
sculpted along the axis by a gradient attenuator.  The index responds
linearly to the control intensity:

    n(z) = 1 + I(z) cos(theta) / C,

so the curved-universe cell (n2 = 1 + H^2 z^2 / 4) needs the quadratic
intensity I_c1(z) = I_c2(z) = C H^2 z^2 / (4 cos theta).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .spacetimes import (
    SINGULAR_GUARD,
    DomainError,
    IndexProfile,
    SpacetimeSpec,
)

__all__ = [
    "CellDesign",
    "axial_profile",
    "control_intensity_profile",
    "index_from_intensity",
    "intensity_from_index",
    "attenuator_profile",
    "design_cell",
]

PROFILE_FORMS = ("quadratic", "exact")


@dataclass(frozen=True)
class CellDesign:
    """A cell profile plus the control-beam curves that realize it.

    I_profile / T_profile are None when the linear intensity model cannot
    produce the profile (n < 1 kinds) or carries no information (all-zero
    intensity for the flat cell).
    """

    kind: str
    L: float
    grid: np.ndarray
    n_profile: IndexProfile
    theta: float
    C_const: float
    I_profile: Optional[np.ndarray]
    T_profile: Optional[np.ndarray]
    profile_form: str


def _check_cell_args(L: float, grid_size: int) -> None:
    if not (isinstance(L, (int, float)) and math.isfinite(L) and L > 0):
        raise DomainError(f"cell length must satisfy 0 < L, got {L!r}")
    if grid_size < 2:
        raise DomainError(f"grid_size must be >= 2, got {grid_size}")


def axial_profile(
    spec: SpacetimeSpec, L: float, grid_size: int = 1001, form: str = "quadratic"
) -> IndexProfile:
    """Axial index n(z) on a uniform grid over [0, L].

    The curved-universe cell uses by default the quadratic profile
    n2(z) = 1 + H^2 z^2 / 4 (form="quadratic"); form="exact" substitutes the
    full catalog closed form with r -> z.  Kinds whose closed form is
    singular at z = 0 (the BH families) and RW have no axial cell profile.
    """
    _check_cell_args(L, grid_size)
    if form not in PROFILE_FORMS:
        raise DomainError(f"profile form must be one of {PROFILE_FORMS}, got {form!r}")
    kind, H = spec.kind, spec.H
    z = np.linspace(0.0, L, grid_size)

    if kind == "Min":
        closed = lambda x: np.ones_like(np.asarray(x, dtype=float))
        return IndexProfile(z, np.ones_like(z), (0.0, L), closed_form=closed)
    if kind == "dS":
        if H * L >= 2.0:
            raise DomainError(f"HL<2 violated for the dS cell: HL = {H * L:.6g}")
        if form == "quadratic":
            closed = lambda x: 1.0 + 0.25 * H * H * np.asarray(x, dtype=float) ** 2
        else:
            if H * L >= 2.0 * (1.0 - SINGULAR_GUARD):
                raise DomainError(
                    f"exact dS profile singular at z = 2/H = {2.0 / H:.12g}"
                )
            closed = lambda x: 1.0 / (1.0 - 0.25 * H * H * np.asarray(x, dtype=float) ** 2)
        return IndexProfile(z, closed(z), (0.0, L), closed_form=closed)
    if kind == "AdS":
        closed = lambda x: 1.0 / (1.0 + 0.25 * H * H * np.asarray(x, dtype=float) ** 2)
        return IndexProfile(z, closed(z), (0.0, L), closed_form=closed)
    if kind in ("BH", "dSBH", "AdSBH"):
        raise DomainError(
            f"{kind} has no axial cell profile: closed form singular at z = 0 "
            "(needs z > M/2) so the domain constraint fails on [0, L]"
        )
    raise DomainError("RW has no static axial profile; use rw_index(spec, t)")


def _check_beam_geometry(C_const: float, theta: float) -> float:
    if not (math.isfinite(C_const) and C_const > 0):
        raise DomainError(f"medium constant C must be > 0, got {C_const!r}")
    if not math.isfinite(theta) or abs(theta) >= 0.5 * math.pi:
        raise DomainError(
            f"control-beam geometry error: need |theta| < pi/2, got theta = {theta!r}"
        )
    c = math.cos(theta)
    if c <= 0.0:
        raise DomainError(f"control-beam geometry error: cos(theta) <= 0 at {theta!r}")
    return c


def control_intensity_profile(
    H: float, C_const: float, theta: float, grid
) -> np.ndarray:
    """Common intensity of the two control beams: I(z) = C H^2 z^2 / (4 cos theta)."""
    c = _check_beam_geometry(C_const, theta)
    if not (math.isfinite(H) and H >= 0):
        raise DomainError(f"H >= 0 violated: H = {H!r}")
    z = np.asarray(grid, dtype=float)
    return C_const * H * H * z * z / (4.0 * c)


def index_from_intensity(I, C_const: float, theta: float):
    """Linear medium response n = 1 + I cos(theta) / C."""
    c = _check_beam_geometry(C_const, theta)
    I = np.asarray(I, dtype=float)
    if np.any(I < 0) or not np.all(np.isfinite(I)):
        raise DomainError("intensity must be finite and >= 0")
    return 1.0 + I * c / C_const


def intensity_from_index(n, C_const: float, theta: float):
    """Inverse of index_from_intensity; needs n >= 1 (no negative intensities)."""
    c = _check_beam_geometry(C_const, theta)
    n = np.asarray(n, dtype=float)
    if np.any(n < 1.0):
        raise DomainError(
            "n < 1 cannot be produced by the linear intensity model (I >= 0)"
        )
    return (n - 1.0) * C_const / c


def attenuator_profile(I) -> np.ndarray:
    """Attenuator transmission T(z) = I(z)/I(L), the manufacturable curve.

    Convention: normalization is to the exit-face intensity I(L) (equal to
    the maximum for the monotone quadratic profile).  An all-zero intensity
    (flat cell, no beams) returns T = 1 identically.
    """
    I = np.asarray(I, dtype=float)
    if I.size == 0:
        raise DomainError("empty intensity profile")
    if np.any(I < 0) or not np.all(np.isfinite(I)):
        raise DomainError("intensity must be finite and >= 0")
    if I[-1] == 0.0:
        if np.any(I > 0):
            raise DomainError(
                "attenuator normalization: I(L) must be the profile maximum"
            )
        return np.ones_like(I)
    T = I / I[-1]
    if np.any(T > 1.0 + 1e-12):
        raise DomainError("attenuator normalization: I(L) must be the profile maximum")
    return T


def design_cell(
    spec: SpacetimeSpec,
    L: float,
    grid_size: int = 1001,
    theta: float = 0.0,
    C_const: float = 1.0,
    form: str = "quadratic",
) -> CellDesign:
    """Full cell design: profile plus (where realizable) beam curves."""
    profile = axial_profile(spec, L, grid_size=grid_size, form=form)
    values = profile.values
    if np.all(values >= 1.0):
        if form == "quadratic" or spec.kind == "Min":
            # design route: the control-beam curve computed straight from z
            I = control_intensity_profile(spec.H, C_const, theta, profile.positions)
        else:
            I = intensity_from_index(values, C_const, theta)
        T = attenuator_profile(I) if I[-1] > 0 else None
    else:
        I = None
        T = None
    return CellDesign(
        kind=spec.kind,
        L=float(L),
        grid=profile.positions,
        n_profile=profile,
        theta=float(theta),
        C_const=float(C_const),
        I_profile=I,
        T_profile=T,
        profile_form=form,
    )
