"""Gradient-index ray tracing through the catalog media.

Rays validate the mimicked geometries: the ODE d/ds(n dx/ds) = grad n is
integrated in a plane through the symmetry center (all catalog media are
spherically symmetric, so every ray is planar).  The Bouguer invariant
n(r) r sin(psi) -- the optical angular momentum -- is conserved along any
radial-index ray and its drift is the integration-error proxy.

Two independent routes to the deflection angle are kept side by side:
the traced asymptote change (with Richardson extrapolation in the launch
radius) and a turning-point quadrature of the exact orbit integral.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional, Union

import numpy as np
from scipy.integrate import quad, solve_ivp
from scipy.optimize import brentq, minimize_scalar

from .spacetimes import SINGULAR_GUARD, DomainError, IndexProfile, SpacetimeSpec

__all__ = [
    "RadialMedium",
    "Ray",
    "DeflectionResult",
    "radial_medium",
    "medium_from_profile",
    "trace_ray",
    "deflection_angle",
    "circular_orbit_radius",
    "critical_impact_parameter",
    "turning_point_deflection",
]

_QUAD_OPTS = dict(epsabs=1e-13, epsrel=1e-12, limit=200)


@dataclass(frozen=True)
class RadialMedium:
    """Radially symmetric index n(r) with derivative, ready for tracing."""

    n: Callable[[float], float]
    dn_dr: Callable[[float], float]
    domain: tuple
    char_length: float
    capture_radius: Optional[float] = None
    label: str = ""


@dataclass(frozen=True)
class Ray:
    """A traced ray: arc length, positions, unit directions, Bouguer drift.

    status is "completed" (arc budget reached), "exited" (left the outer
    domain edge) or "captured" (reached the inner stop radius).
    """

    s: np.ndarray
    points: np.ndarray
    directions: np.ndarray
    bouguer: float
    bouguer_rel_drift: np.ndarray
    status: str
    medium: str = ""

    @property
    def max_drift(self) -> float:
        return float(np.max(np.abs(self.bouguer_rel_drift)))


@dataclass(frozen=True)
class DeflectionResult:
    b: float
    angle: Optional[float]
    captured: bool
    status: str
    far_field_radius: float


def radial_medium(spec: SpacetimeSpec) -> RadialMedium:
    """Closed-form n(r) and analytic dn/dr for a catalog kind."""
    H, M = spec.H, spec.M
    kind = spec.kind
    char = M if M > 0 else (1.0 / H if H > 0 else 1.0)

    if kind == "Min":
        return RadialMedium(lambda r: 1.0, lambda r: 0.0, (0.0, math.inf), char, None, kind)
    if kind == "dS":
        hi = (2.0 / H) * (1.0 - SINGULAR_GUARD) if H > 0 else math.inf

        def n_ds(r: float) -> float:
            return 1.0 / (1.0 - 0.25 * H * H * r * r)

        return RadialMedium(
            n_ds, lambda r: n_ds(r) ** 2 * H * H * r / 2.0, (0.0, hi), char, None, kind
        )
    if kind == "AdS":

        def n_ads(r: float) -> float:
            return 1.0 / (1.0 + 0.25 * H * H * r * r)

        return RadialMedium(
            n_ads, lambda r: -(n_ads(r) ** 2) * H * H * r / 2.0, (0.0, math.inf), char, None, kind
        )
    if kind == "BH":
        lo = 0.5 * M * (1.0 + SINGULAR_GUARD)

        def n_bh(r: float) -> float:
            return (M + 2.0 * r) ** 3 / (4.0 * r * r * (2.0 * r - M))

        def dn_bh(r: float) -> float:
            return n_bh(r) * (6.0 / (M + 2.0 * r) - 2.0 / r - 2.0 / (2.0 * r - M))

        return RadialMedium(n_bh, dn_bh, (lo, math.inf), char, M, kind)
    if kind == "dSBH":
        lo = 0.5 * M * (1.0 + SINGULAR_GUARD)
        return RadialMedium(
            lambda r: 1.0 + 0.25 * H * H * r * r + 2.0 * M / r,
            lambda r: 0.5 * H * H * r - 2.0 * M / (r * r),
            (lo, math.inf),
            char,
            M,
            kind,
        )
    if kind == "AdSBH":
        lo = 0.5 * M * (1.0 + SINGULAR_GUARD)
        # n = 1 - H^2 r^2/4 + 2M/r crosses zero at the positive root of
        # (H^2/4) r^3 - r - 2M; the medium ends just inside it.
        roots = np.roots([0.25 * H * H, 0.0, -1.0, -2.0 * M])
        real = [float(z.real) for z in roots if abs(z.imag) < 1e-9 * (1.0 + abs(z)) and z.real > 0]
        hi = min(real) * (1.0 - 1e-9) if real else math.inf
        return RadialMedium(
            lambda r: 1.0 - 0.25 * H * H * r * r + 2.0 * M / r,
            lambda r: -0.5 * H * H * r - 2.0 * M / (r * r),
            (lo, hi),
            char,
            M,
            kind,
        )
    raise DomainError(f"no static radial medium for kind {kind!r}")


def medium_from_profile(
    profile: IndexProfile, char_length: Optional[float] = None
) -> RadialMedium:
    """Wrap an IndexProfile for tracing; derivative by central differences.

    The profile must carry a closed form (sampled data is not smooth enough
    for the ray equations).
    """
    if profile.closed_form is None:
        raise DomainError("ray tracing needs a closed-form profile, not samples")
    f = profile.closed_form
    lo, hi = profile.domain
    if char_length is None:
        char_length = profile.positions[-1] if math.isinf(hi) else hi

    def dn(r: float) -> float:
        h = max(abs(r), char_length) * 6.0e-6
        if r - h <= lo:
            return (f(r + h) - f(r)) / h
        if r + h >= hi:
            return (f(r) - f(r - h)) / h
        return (f(r + h) - f(r - h)) / (2.0 * h)

    return RadialMedium(
        lambda r: float(f(r)), dn, (lo, hi), float(char_length), None, "profile"
    )


def _as_medium(medium: Union[RadialMedium, IndexProfile]) -> RadialMedium:
    if isinstance(medium, RadialMedium):
        return medium
    if isinstance(medium, IndexProfile):
        return medium_from_profile(medium)
    raise TypeError(f"expected RadialMedium or IndexProfile, got {type(medium)!r}")


def _rhs(medium: RadialMedium):
    n, dn = medium.n, medium.dn_dr

    def rhs(s, y):
        x, yy, px, py = y
        r = math.hypot(x, yy)
        nr = n(r)
        if r > 0.0:
            g = dn(r) / r
            gx, gy = g * x, g * yy
        else:
            gx = gy = 0.0
        return (px / nr, py / nr, gx, gy)

    return rhs


def _events(medium: RadialMedium, stop_hi: Optional[float]):
    events = []
    labels = []
    stop_lo = medium.capture_radius
    if stop_lo is None and medium.domain[0] > 0.0:
        stop_lo = medium.domain[0] * (1.0 + 1e-12)
    if stop_lo is not None and stop_lo > 0.0:

        def hit_inner(s, y, _lo=stop_lo):
            return math.hypot(y[0], y[1]) - _lo

        hit_inner.terminal = True
        hit_inner.direction = -1
        events.append(hit_inner)
        labels.append("captured")
    if stop_hi is not None and math.isfinite(stop_hi):

        def hit_outer(s, y, _hi=stop_hi):
            return math.hypot(y[0], y[1]) - _hi

        hit_outer.terminal = True
        hit_outer.direction = 1
        events.append(hit_outer)
        labels.append("exited")
    return events, labels


def _check_start(medium: RadialMedium, r0: float) -> None:
    lo, hi = medium.domain
    if not (lo < r0 < hi):
        raise DomainError(
            f"ray start radius {r0:.6g} outside medium domain ({lo:.6g}, {hi:.6g})"
        )


def trace_ray(
    medium: Union[RadialMedium, IndexProfile],
    start,
    direction,
    arc_budget: float,
    n_samples: int = 800,
    rtol: float = 1e-10,
    atol: float = 1e-10,
) -> Ray:
    """Integrate the planar ray equations from `start` along `direction`.

    State is (x, y, p_x, p_y) with p = n dx/ds, so dp/ds = grad n and
    dx/ds = p/n; arc_budget is the maximum path length.  The returned
    drift array is (B(s) - B(0)) / |B(0)| with B = x p_y - y p_x (scaled
    by n0 r0 instead when the ray is aimed exactly at the center).
    """
    med = _as_medium(medium)
    start = np.asarray(start, dtype=float)
    d = np.asarray(direction, dtype=float)
    if start.shape != (2,) or d.shape != (2,):
        raise DomainError("ray start and direction must be 2-vectors (planar tracing)")
    dnorm = math.hypot(d[0], d[1])
    if dnorm == 0.0 or not np.all(np.isfinite(d)) or not np.all(np.isfinite(start)):
        raise DomainError("ray direction must be a finite nonzero vector")
    if not (math.isfinite(arc_budget) and arc_budget > 0):
        raise DomainError(f"arc budget must be > 0, got {arc_budget!r}")
    d = d / dnorm
    r0 = math.hypot(start[0], start[1])
    _check_start(med, r0)

    n0 = med.n(r0)
    y0 = np.array([start[0], start[1], n0 * d[0], n0 * d[1]])
    hi = med.domain[1]
    stop_hi = hi * (1.0 - 1e-12) if math.isfinite(hi) else None
    if stop_hi is not None and r0 >= stop_hi:
        stop_hi = hi  # start sits on the shaved edge; don't fire immediately
    events, labels = _events(med, stop_hi)
    sol = solve_ivp(
        _rhs(med),
        (0.0, arc_budget),
        y0,
        method="DOP853",
        rtol=rtol,
        atol=atol,
        t_eval=np.linspace(0.0, arc_budget, n_samples),
        events=events,
    )
    if not sol.success and sol.status != 1:
        raise DomainError(f"ray integration failed: {sol.message}")

    s = sol.t
    Y = sol.y
    status = "completed"
    if sol.status == 1:
        for k, lab in enumerate(labels):
            if sol.t_events[k].size:
                status = lab
                te, ye = sol.t_events[k][0], sol.y_events[k][0]
                if s.size == 0 or te > s[-1]:
                    s = np.append(s, te)
                    Y = np.column_stack([Y, ye]) if Y.size else ye[:, None]
                break

    pts = Y[:2].T.copy()
    mom = Y[2:].T.copy()
    pnorm = np.hypot(mom[:, 0], mom[:, 1])
    dirs = mom / pnorm[:, None]
    B = pts[:, 0] * mom[:, 1] - pts[:, 1] * mom[:, 0]
    B0 = n0 * (start[0] * d[1] - start[1] * d[0])
    scale = abs(B0) if B0 != 0.0 else n0 * r0
    drift = (B - B0) / scale
    return Ray(
        s=s,
        points=pts,
        directions=dirs,
        bouguer=B0,
        bouguer_rel_drift=drift,
        status=status,
        medium=med.label,
    )


def _shoot_for_angle(
    med: RadialMedium, b: float, R: float, rtol: float, atol: float
):
    """One far-field shot; returns (status, signed direction change).

    Natural (adaptive) solver steps are kept so the direction angle can be
    unwrapped safely even for rays that loop near a critical orbit.
    """
    x0 = -math.sqrt(R * R - b * b)
    n0 = med.n(R)
    y0 = np.array([x0, b, n0, 0.0])
    events, labels = _events(med, R * (1.0 + 1e-9))
    arc_budget = 6.0 * R + 200.0 * med.char_length
    sol = solve_ivp(
        _rhs(med),
        (0.0, arc_budget),
        y0,
        method="DOP853",
        rtol=rtol,
        atol=atol,
        events=events,
    )
    if not sol.success and sol.status != 1:
        raise DomainError(f"ray integration failed: {sol.message}")
    status = "budget_exhausted"
    if sol.status == 1:
        for k, lab in enumerate(labels):
            if sol.t_events[k].size:
                status = lab
                break
    Y = sol.y
    if sol.status == 1 and sol.y_events:
        for k, lab in enumerate(labels):
            if sol.t_events[k].size:
                Y = np.column_stack([Y, sol.y_events[k][0]])
                break
    psi = np.unwrap(np.arctan2(Y[3], Y[2]))
    return status, float(psi[-1] - psi[0])


def deflection_angle(
    medium: Union[RadialMedium, IndexProfile],
    b: float,
    far_field_factor: float = 1e4,
    rtol: float = 1e-10,
    atol: float = 1e-10,
) -> DeflectionResult:
    """Asymptotic deflection for impact parameter b (positive = toward center).

    Shoots from launch radius R = far_field_factor x characteristic length
    and again from 2R, then Richardson-extrapolates (2*alpha_2R - alpha_R)
    to remove the O(1/R) finite-launch bias.  A ray that reaches the inner
    stop radius is reported as captured, with no angle.
    """
    med = _as_medium(medium)
    if not (math.isfinite(b) and b > 0):
        raise DomainError(f"impact parameter must be > 0, got {b!r}")
    R1 = far_field_factor * med.char_length
    R2 = 2.0 * R1
    lo, hi = med.domain
    if R2 * (1.0 + 1e-6) >= hi:
        raise DomainError(
            f"far-field radius {R2:.6g} outside medium domain; "
            "deflection is undefined for bounded media"
        )
    if b >= R1:
        raise DomainError(f"impact parameter {b:.6g} not below far-field radius {R1:.6g}")

    angles = []
    for R in (R1, R2):
        status, dpsi = _shoot_for_angle(med, b, R, rtol, atol)
        if status == "captured":
            return DeflectionResult(b, None, True, "captured", R1)
        if status != "exited":
            return DeflectionResult(b, None, False, status, R1)
        angles.append(-dpsi)
    return DeflectionResult(b, 2.0 * angles[1] - angles[0], False, "ok", R1)


def circular_orbit_radius(
    medium: Union[RadialMedium, IndexProfile],
    bracket: Optional[tuple] = None,
) -> float:
    """Radius where d(n r)/dr = 0 — the closed circular-ray orbit."""
    med = _as_medium(medium)
    g = lambda r: med.n(r) + r * med.dn_dr(r)
    if bracket is None:
        lo = med.domain[0]
        if lo <= 0.0:
            raise DomainError(
                "no default bracket for media regular at the origin; pass one"
            )
        bracket = (lo * 1.02, 100.0 * med.char_length)
    a, bb = bracket
    if g(a) * g(bb) > 0:
        raise DomainError(
            f"d(n r)/dr does not change sign on [{a:.6g}, {bb:.6g}]: no circular orbit"
        )
    return float(brentq(g, a, bb, rtol=4.0 * np.finfo(float).eps, xtol=1e-300))


def _nr_minimum(med: RadialMedium):
    """(r*, n(r*) r*) minimizing the optical angular momentum function."""
    lo, hi = med.domain
    lo_eff = lo * (1.0 + 1e-9) if lo > 0 else 1e-12 * med.char_length
    hi_eff = min(hi, 1e3 * med.char_length) if math.isfinite(hi) else 1e3 * med.char_length
    res = minimize_scalar(
        lambda r: med.n(r) * r,
        bounds=(lo_eff, hi_eff),
        method="bounded",
        options={"xatol": 1e-12 * med.char_length},
    )
    return float(res.x), float(res.fun)


def critical_impact_parameter(medium: Union[RadialMedium, IndexProfile]) -> float:
    """min over r of n(r) r: rays with b below this have no turning point."""
    med = _as_medium(medium)
    return _nr_minimum(med)[1]


def turning_point_deflection(medium: Union[RadialMedium, IndexProfile], b: float) -> float:
    """Deflection by exact orbit quadrature — the independent oracle.

    alpha = 2 * int_{r0}^inf b dr / (r sqrt(n^2 r^2 - b^2)) - pi with r0 the
    outer turning point n(r0) r0 = b.  The inverse-square-root endpoint is
    regularized by the substitution x = sqrt(r - r0).
    """
    med = _as_medium(medium)
    if not (math.isfinite(b) and b > 0):
        raise DomainError(f"impact parameter must be > 0, got {b!r}")
    if math.isfinite(med.domain[1]):
        raise DomainError("quadrature deflection needs an unbounded medium domain")
    r_star, nr_min = _nr_minimum(med)
    if nr_min >= b:
        raise DomainError(
            f"no turning point: b = {b:.6g} at or below critical {nr_min:.6g}"
        )
    hi_b = max(1e6 * med.char_length, 10.0 * b)
    f_tp = lambda r: med.n(r) * r - b
    r0 = brentq(f_tp, r_star, hi_b, rtol=4.0 * np.finfo(float).eps, xtol=1e-300)

    def integrand(r: float) -> float:
        nr = med.n(r) * r
        return b / (r * math.sqrt(nr * nr - b * b))

    def near(x: float) -> float:
        return 2.0 * x * integrand(r0 + x * x)

    part1, _ = quad(near, 0.0, math.sqrt(r0), **_QUAD_OPTS)
    part2, _ = quad(integrand, 2.0 * r0, np.inf, **_QUAD_OPTS)
    return 2.0 * (part1 + part2) - math.pi
