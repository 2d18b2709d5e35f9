"""Catalog of static, spherically symmetric metrics and their optical media.

A metric ds^2 = -f(rbar) c^2 dt^2 + drbar^2/f(rbar) + rbar^2 dOmega^2 can be
mimicked by a dielectric.  In the original (areal) radial coordinate the
required index tensor is anisotropic; switching to the isotropic radial
coordinate r, defined by dr/r = drbar/(rbar sqrt(f)) with r -> rbar in the
flat limit, makes the spatial metric conformally flat and the medium a scalar
graded index

    n(r) = rbar(r) / (r sqrt(f(rbar(r)))).

Two independent routes to n(r) are provided and are used as mutual oracles:

* ``closed_form_index`` -- the catalog closed forms (exact for Min/BH/dS/AdS,
  leading order for the mixed dSBH/AdSBH families, see LEADING_ORDER_KINDS);
* ``numeric_index`` -- first principles: adaptive quadrature of
  d ln r = drbar/(rbar sqrt(f)) plus root-finding to invert the transform.
  This route never touches the catalog closed forms.

For the mixed families the transform normalization is not fixed by the flat
limit at either end alone; we anchor at the balance radius
rbar_a = (2M/H^2)^(1/3), where the curvature and mass deficits of f are equal,
with the offset taken from the two pure closed-form transforms evaluated
there.  That convention reduces exactly to the pure dS/AdS and pure BH
transforms when M -> 0 or H -> 0.

Units are lab SI: H in 1/m, M in m (geometric length), radii in m.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

import numpy as np
from scipy.integrate import quad
from scipy.optimize import brentq

__all__ = [
    "KINDS",
    "STATIC_KINDS",
    "LEADING_ORDER_KINDS",
    "SINGULAR_GUARD",
    "DomainError",
    "SpacetimeSpec",
    "StaticMetric",
    "IndexProfile",
    "TensorIndex",
    "static_metric",
    "closed_form_index",
    "isotropic_transform",
    "log_radius_ratio",
    "inverse_isotropic_transform",
    "numeric_index",
    "tensor_index",
    "rw_index",
]

KINDS = ("Min", "BH", "dS", "dSBH", "AdS", "AdSBH", "RW")
STATIC_KINDS = ("Min", "BH", "dS", "dSBH", "AdS", "AdSBH")

# Families whose catalog closed form is a leading-order expansion, not exact.
LEADING_ORDER_KINDS = frozenset({"dSBH", "AdSBH"})

# Relative refusal distance from singular radii (r = 2/H, r = M/2): we raise
# instead of returning huge index values.
SINGULAR_GUARD = 1e-6

_QUAD_OPTS = dict(epsabs=1e-13, epsrel=1e-12, limit=200)
_BRENTQ_RTOL = 4.0 * np.finfo(float).eps

_USES_H = frozenset({"dS", "AdS", "dSBH", "AdSBH"})
_USES_M = frozenset({"BH", "dSBH", "AdSBH"})


class DomainError(ValueError):
    """Evaluation outside a static region, a chart image, or a profile domain."""


@dataclass(frozen=True)
class SpacetimeSpec:
    """A named metric family with its parameters.

    kind          one of KINDS
    H             curvature scale [1/m] (dS/AdS families)
    M             mass parameter as a geometric length [m] (BH families)
    scale_factor  a(t) for the RW (expanding universe) family only
    t_domain      validity interval of a(t)
    """

    kind: str
    H: float = 0.0
    M: float = 0.0
    scale_factor: Optional[Callable[[float], float]] = None
    t_domain: tuple[float, float] = (-math.inf, math.inf)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise DomainError(
                f"unknown spacetime kind {self.kind!r}; expected one of {KINDS}"
            )
        for name in ("H", "M"):
            value = getattr(self, name)
            if not (isinstance(value, (int, float)) and math.isfinite(value)):
                raise DomainError(f"{name} must be finite, got {value!r}")
            if value < 0:
                raise DomainError(f"{name} >= 0 violated: {name}={value}")
        if self.H != 0.0 and self.kind not in _USES_H:
            raise DomainError(f"kind {self.kind} does not use H; H must be 0")
        if self.M != 0.0 and self.kind not in _USES_M:
            raise DomainError(f"kind {self.kind} does not use M; M must be 0")
        if self.kind == "RW":
            if self.scale_factor is None:
                raise DomainError("RW requires a scale_factor a(t)")
        elif self.scale_factor is not None:
            raise DomainError("scale_factor is only meaningful for kind RW")
        lo, hi = self.t_domain
        if not lo < hi:
            raise DomainError(f"empty time domain {self.t_domain}")


@dataclass(frozen=True)
class StaticMetric:
    """Lapse f(rbar) and the open interval of rbar where f > 0."""

    f: Callable[[float], float]
    domain: tuple[float, float]
    spec: Optional[SpacetimeSpec] = None


def lapse(spec: SpacetimeSpec) -> Callable[[float], float]:
    H, M = spec.H, spec.M
    if spec.kind == "Min":
        return lambda rbar: 1.0
    if spec.kind == "BH":
        return lambda rbar: 1.0 - 2.0 * M / rbar
    if spec.kind == "dS":
        return lambda rbar: 1.0 - H * H * rbar * rbar
    if spec.kind == "AdS":
        return lambda rbar: 1.0 + H * H * rbar * rbar
    if spec.kind == "dSBH":
        return lambda rbar: 1.0 - H * H * rbar * rbar - 2.0 * M / rbar
    if spec.kind == "AdSBH":
        return lambda rbar: 1.0 + H * H * rbar * rbar - 2.0 * M / rbar
    raise DomainError("RW is not static; use rw_index(spec, t)")


def _positive_real_roots(coeffs):
    roots = np.roots(coeffs)
    out = sorted(
        float(z.real) for z in roots if abs(z.imag) < 1e-12 * max(1.0, abs(z)) and z.real > 0
    )
    return out


def static_domain(spec: SpacetimeSpec) -> tuple[float, float]:
    """Open interval of rbar with f > 0 (the static region)."""
    H, M = spec.H, spec.M
    kind = spec.kind
    if kind in ("dSBH", "AdSBH"):
        if M == 0.0:
            kind = "dS" if kind == "dSBH" else "AdS"
        elif H == 0.0:
            kind = "BH"
    if kind == "Min":
        return (0.0, math.inf)
    if kind == "BH":
        return (2.0 * M, math.inf) if M > 0 else (0.0, math.inf)
    if kind == "dS":
        return (0.0, 1.0 / H) if H > 0 else (0.0, math.inf)
    if kind == "AdS":
        return (0.0, math.inf)
    if kind == "dSBH":
        # horizons: roots of -H^2 x^3 + x - 2M = 0 with f > 0 in between
        roots = _positive_real_roots([-H * H, 0.0, 1.0, -2.0 * M])
        if len(roots) < 2:
            raise DomainError(
                "no static region: horizon condition 3*sqrt(3)*H*M < 1 violated "
                f"(H*M = {H * M:.6g})"
            )
        return (roots[0], roots[-1])
    if kind == "AdSBH":
        roots = _positive_real_roots([H * H, 0.0, 1.0, -2.0 * M])
        return (roots[0], math.inf)
    raise DomainError("RW is not static")


def static_metric(spec: SpacetimeSpec) -> StaticMetric:
    if spec.kind == "RW":
        raise DomainError("RW is not static; use rw_index(spec, t)")
    return StaticMetric(f=lapse(spec), domain=static_domain(spec), spec=spec)


# --------------------------------------------------------------------------
# catalog closed forms


def closed_form_index(spec: SpacetimeSpec, r: float) -> float:
    """Catalog index n(r) in the isotropic radial coordinate.

    Exact for Min, BH, dS, AdS; leading order (kind in LEADING_ORDER_KINDS)
    for the mixed families.  Refuses evaluation within SINGULAR_GUARD relative
    distance of the singular radii r = 2/H (dS) and r = M/2 (BH families).
    """
    kind, H, M = spec.kind, spec.H, spec.M
    if kind == "RW":
        raise DomainError("RW has no static index profile; use rw_index(spec, t)")
    if not (isinstance(r, (int, float)) and math.isfinite(r)) or r < 0:
        raise DomainError(f"radius must be finite and >= 0, got {r!r}")
    if kind == "Min":
        return 1.0
    if kind == "dS":
        x = H * r
        if x >= 2.0 * (1.0 - SINGULAR_GUARD):
            raise DomainError(
                f"dS index singular at r = 2/H = {2.0 / H:.12g}; "
                f"refusing within {SINGULAR_GUARD:g} relative distance"
            )
        return 1.0 / (1.0 - 0.25 * x * x)
    if kind == "AdS":
        x = H * r
        return 1.0 / (1.0 + 0.25 * x * x)
    # BH-family rows: valid for r > M/2
    if M > 0 and r <= 0.5 * M * (1.0 + SINGULAR_GUARD):
        raise DomainError(
            f"BH-family index singular at r = M/2 = {0.5 * M:.12g}; "
            f"refusing within {SINGULAR_GUARD:g} relative distance"
        )
    if kind == "BH":
        if M == 0.0:
            return 1.0
        return (M + 2.0 * r) ** 3 / (4.0 * r * r * (2.0 * r - M))
    mass_term = 2.0 * M / r if M > 0 else 0.0
    if kind == "dSBH":
        return 1.0 + 0.25 * H * H * r * r + mass_term
    if kind == "AdSBH":
        return 1.0 - 0.25 * H * H * r * r + mass_term
    raise DomainError(f"unhandled kind {kind!r}")


# --------------------------------------------------------------------------
# isotropic transform: quadrature machinery

# Pure closed-form transforms rbar -> r, written in cancellation-free form.
# These are used (a) as the analytic fast path of isotropic_transform for the
# pure kinds and (b) to set the balance-anchor offset of the mixed kinds.


def _r_of_rbar_ds(H: float, rbar: float) -> float:
    return 2.0 * rbar / (1.0 + math.sqrt(1.0 - H * H * rbar * rbar))


def _r_of_rbar_ads(H: float, rbar: float) -> float:
    return 2.0 * rbar / (1.0 + math.sqrt(1.0 + H * H * rbar * rbar))


def _r_of_rbar_bh(M: float, rbar: float) -> float:
    return 0.5 * ((rbar - M) + math.sqrt(rbar * (rbar - 2.0 * M)))


def _g_integrand(f: Callable[[float], float]) -> Callable[[float], float]:
    def g(s: float) -> float:
        if s == 0.0:
            return 0.0  # limit for f(0)=1 kinds; never hit otherwise
        fs = f(s)
        if fs <= 0.0:
            raise DomainError(
                "horizon crossing during transform integration (f <= 0 at "
                f"rbar = {s:.12g})"
            )
        return (1.0 / math.sqrt(fs) - 1.0) / s

    return g


def _quad_plain(g, a, b):
    if a == b:
        return 0.0
    val, _ = quad(g, a, b, **_QUAD_OPTS)
    return val


def _quad_sqrt_lower(g, a, b, s0):
    """integral of g over [a, b] with an integrable 1/sqrt(s - s0) edge, s0 <= a."""
    if a == b:
        return 0.0
    ta, tb = math.sqrt(a - s0), math.sqrt(b - s0)
    val, _ = quad(lambda t: g(s0 + t * t) * 2.0 * t, ta, tb, **_QUAD_OPTS)
    return val


def _quad_sqrt_upper(g, a, b, s1):
    """integral of g over [a, b] with an integrable 1/sqrt(s1 - s) edge, s1 >= b."""
    if a == b:
        return 0.0
    ua, ub = math.sqrt(s1 - b), math.sqrt(s1 - a)
    val, _ = quad(lambda u: g(s1 - u * u) * 2.0 * u, ua, ub, **_QUAD_OPTS)
    return val


def _effective_kind(spec: SpacetimeSpec) -> str:
    kind = spec.kind
    if kind in ("dSBH", "AdSBH"):
        if spec.M == 0.0:
            return "dS" if kind == "dSBH" else "AdS"
        if spec.H == 0.0:
            return "BH"
    return kind


def _balance_anchor(spec: SpacetimeSpec) -> float:
    return (2.0 * spec.M / (spec.H * spec.H)) ** (1.0 / 3.0)


def _require_spec(metric: StaticMetric) -> SpacetimeSpec:
    if metric.spec is None:
        raise DomainError(
            "transform quadrature needs a catalog StaticMetric (spec attached)"
        )
    return metric.spec


def _check_rbar(metric: StaticMetric, rbar: float) -> None:
    lo, hi = metric.domain
    if not (isinstance(rbar, (int, float)) and math.isfinite(rbar)):
        raise DomainError(f"rbar must be finite, got {rbar!r}")
    if rbar == 0.0 and lo == 0.0:
        return  # origin reached as a limit for the flat-anchored kinds
    if not (lo < rbar < hi):
        raise DomainError(
            f"rbar = {rbar:.12g} outside the static region ({lo:.12g}, {hi:.12g})"
        )


def log_radius_ratio(metric: StaticMetric, rbar: float) -> float:
    """ln(r/rbar) by adaptive quadrature of (1/sqrt(f) - 1)/s.

    Anchors: the origin for Min/dS/AdS (flat-limit normalization), infinity
    for BH, and the balance radius for the mixed families (offset from the
    pure closed forms).  Integrable 1/sqrt(f) horizon edges are handled with
    sqrt substitutions.
    """
    spec = _require_spec(metric)
    _check_rbar(metric, rbar)
    kind = _effective_kind(spec)
    H, M = spec.H, spec.M
    g = _g_integrand(metric.f)

    if kind == "Min" or (H == 0.0 and M == 0.0):
        return 0.0
    if kind == "AdS":
        return _quad_plain(g, 0.0, rbar)
    if kind == "dS":
        hor = 1.0 / H
        cut = 0.9 * hor
        if rbar <= cut:
            return _quad_plain(g, 0.0, rbar)
        return _quad_plain(g, 0.0, cut) + _quad_sqrt_upper(g, cut, rbar, hor)
    if kind == "BH":
        hor = 2.0 * M
        cut = max(10.0 * M, 2.0 * rbar)
        near = _quad_sqrt_lower(g, rbar, cut, hor)
        tail, _ = quad(g, cut, np.inf, **_QUAD_OPTS)
        return -(near + tail)

    # mixed families: balance anchor
    anchor = _balance_anchor(spec)
    if metric.f(anchor) <= 0.0:
        raise DomainError(
            "balance anchor inside a horizon: near-extremal product "
            f"H*M = {H * M:.6g} (need H*M < 2^-2.5 ~ 0.1768)"
        )
    if spec.kind == "dSBH":
        offset = math.log(_r_of_rbar_ds(H, anchor) / anchor) + math.log(
            _r_of_rbar_bh(M, anchor) / anchor
        )
    else:
        offset = math.log(_r_of_rbar_ads(H, anchor) / anchor) + math.log(
            _r_of_rbar_bh(M, anchor) / anchor
        )
    a, b = (anchor, rbar) if rbar >= anchor else (rbar, anchor)
    sign = 1.0 if rbar >= anchor else -1.0
    lo, hi = metric.domain
    mid = 0.5 * (a + b)
    lower = _quad_sqrt_lower(g, a, mid, lo)
    if spec.kind == "dSBH":
        upper = _quad_sqrt_upper(g, mid, b, hi)
    else:
        upper = _quad_plain(g, mid, b)
    return offset + sign * (lower + upper)


def isotropic_transform(metric: StaticMetric, rbar: float) -> float:
    """Map the areal radius rbar to the isotropic radius r.

    Normalized so r -> rbar in the flat limit.  Analytic closed forms for the
    pure Min/dS/AdS families; adaptive integration of d ln r otherwise.
    """
    spec = _require_spec(metric)
    if rbar == 0.0 and metric.domain[0] == 0.0:
        return 0.0
    _check_rbar(metric, rbar)
    kind = _effective_kind(spec)
    if kind == "Min":
        return float(rbar)
    if kind == "dS":
        return _r_of_rbar_ds(spec.H, rbar)
    if kind == "AdS":
        return _r_of_rbar_ads(spec.H, rbar)
    return rbar * math.exp(log_radius_ratio(metric, rbar))


def _chart_image_guards(metric: StaticMetric):
    """Bracketing interval in rbar for inverting the transform, plus the
    corresponding guard on r where the chart image ends."""
    spec = metric.spec
    lo, hi = metric.domain
    kind = _effective_kind(spec)
    if kind in ("dS", "AdS"):
        # both pure curved kinds map onto r in (0, 2/H)
        edge = 2.0 / spec.H
        if kind == "dS":
            hi_b = (1.0 / spec.H) * (1.0 - 1e-13)
            return 0.0, hi_b, edge
        return 0.0, math.inf, edge
    if kind == "BH":
        lo_b = 2.0 * spec.M * (1.0 + 1e-13)
        return lo_b, math.inf, None
    if spec.kind == "dSBH":
        width = hi - lo
        return lo + 1e-13 * width, hi - 1e-13 * width, None
    # AdSBH
    return lo * (1.0 + 1e-13), math.inf, None


def inverse_isotropic_transform(metric: StaticMetric, r: float) -> float:
    """Invert r -> rbar by root-finding on the quadrature route.

    This is the first-principles inversion used by numeric_index; it never
    consults the analytic pure-kind inverses.
    """
    spec = _require_spec(metric)
    if not (isinstance(r, (int, float)) and math.isfinite(r)) or r <= 0:
        raise DomainError(f"isotropic radius must be finite and > 0, got {r!r}")
    kind = _effective_kind(spec)
    if kind == "Min":
        return float(r)

    lo_b, hi_b, edge = _chart_image_guards(metric)
    if edge is not None and r >= edge * (1.0 - SINGULAR_GUARD):
        raise DomainError(
            f"r = {r:.12g} at/beyond the isotropic chart image edge 2/H = "
            f"{edge:.12g} (guard {SINGULAR_GUARD:g} relative)"
        )
    if kind == "BH" and r <= 0.5 * spec.M * (1.0 + SINGULAR_GUARD):
        raise DomainError(
            f"r = {r:.12g} at/below the chart image edge M/2 = {0.5 * spec.M:.12g}"
        )

    log_r = math.log(r)

    def G(rbar: float) -> float:
        return log_radius_ratio(metric, rbar) + math.log(rbar) - log_r

    if kind == "dS":
        lo_eval = min(r, hi_b) * 1e-8
        if G(hi_b) < 0.0:
            raise DomainError(
                f"r = {r:.12g} beyond the dS chart image (outer edge ~ "
                f"{r * math.exp(G(hi_b)):.12g})"
            )
        lo_use, hi_use = lo_eval, hi_b
    elif kind == "AdS" or spec.kind == "AdSBH":
        lo_use = r if kind == "AdS" else lo_b
        scale = max(r, 2.0 * spec.M, 1.0 / spec.H if spec.H > 0 else 0.0)
        hi_use = 2.0 * scale
        for _ in range(80):
            if G(hi_use) > 0.0:
                break
            hi_use *= 2.0
        else:
            raise DomainError(
                f"r = {r:.12g} beyond the chart image (r_max ~ "
                f"{r * math.exp(G(hi_use)):.12g})"
            )
        if kind != "AdS" and G(lo_use) > 0.0:
            raise DomainError(
                f"r = {r:.12g} below the chart image of the horizon "
                f"(inner edge ~ {r * math.exp(G(lo_use)):.12g})"
            )
    elif kind == "BH":
        lo_use = lo_b
        hi_use = max(4.0 * spec.M, 2.0 * r)
        for _ in range(80):
            if G(hi_use) > 0.0:
                break
            hi_use *= 2.0
        if G(lo_use) > 0.0:
            raise DomainError(
                f"r = {r:.12g} below the chart image of the horizon "
                f"(edge ~ {r * math.exp(G(lo_use)):.12g})"
            )
    else:  # dSBH: bounded static strip
        lo_use, hi_use = lo_b, hi_b
        if G(lo_use) > 0.0:
            raise DomainError(
                f"r = {r:.12g} below the chart image of the inner horizon "
                f"(edge ~ {r * math.exp(G(lo_use)):.12g})"
            )
        if G(hi_use) < 0.0:
            raise DomainError(
                f"r = {r:.12g} beyond the chart image of the outer horizon "
                f"(edge ~ {r * math.exp(G(hi_use)):.12g})"
            )

    rbar = brentq(G, lo_use, hi_use, rtol=_BRENTQ_RTOL, xtol=1e-300, maxiter=200)
    return float(rbar)


def numeric_index(metric: StaticMetric, r: float) -> float:
    """First-principles index n(r) = rbar(r) / (r sqrt(f(rbar(r)))).

    Independent oracle for closed_form_index: the transform is inverted by
    quadrature + root-finding for every kind, never via the catalog forms.
    """
    spec = _require_spec(metric)
    kind = _effective_kind(spec)
    if kind == "Min":
        return 1.0
    if r == 0.0 and metric.domain[0] == 0.0:
        return 1.0
    rbar = inverse_isotropic_transform(metric, r)
    fs = metric.f(rbar)
    if fs <= 0.0:
        raise DomainError(f"f <= 0 at rbar = {rbar:.12g}")
    return rbar / (r * math.sqrt(fs))


# --------------------------------------------------------------------------
# tensor index (pre- and post-transform charts)

_G00_NOTE = "g00 is the positive lapse f: ds^2 = -g00 c^2 dt^2 + g_ij dx^i dx^j"
_GAMMA_NOTE = {
    "cartesian": "gamma = 1 (Cartesian lab coordinates)",
    "spherical": "gamma = r^4 sin^2(theta) (spherical lab coordinates)",
}


@dataclass(frozen=True)
class TensorIndex:
    """n^ij = (sqrt(-g)/sqrt(gamma)) g^ij / g00 at one spatial point."""

    components: np.ndarray
    chart: str
    form: str  # "static" (areal chart) or "isotropic"
    point: tuple
    gamma_convention: str
    g00_convention: str = _G00_NOTE


def tensor_index(
    metric: StaticMetric,
    point: Sequence[float],
    chart: str = "cartesian",
    form: str = "static",
) -> TensorIndex:
    """Evaluate the index tensor in the chosen chart.

    form="static": point is (rbar, theta, phi) [spherical] or (x, y, z) in the
    areal chart [cartesian]; the result is the anisotropic pre-transform
    tensor.  form="isotropic": point is in isotropic coordinates and the
    cartesian result is n(r) * identity (scalar medium).
    """
    spec = _require_spec(metric)
    if chart not in ("spherical", "cartesian"):
        raise DomainError(f"chart must be spherical or cartesian, got {chart!r}")
    if form not in ("static", "isotropic"):
        raise DomainError(f"form must be static or isotropic, got {form!r}")
    pt = tuple(float(c) for c in point)
    if len(pt) != 3:
        raise DomainError("point must have 3 components")

    if form == "static":
        if chart == "spherical":
            rbar, theta = pt[0], pt[1]
            _check_rbar(metric, rbar)
            s = math.sin(theta)
            if s == 0.0:
                raise DomainError("spherical chart degenerate at sin(theta) = 0")
            fv = metric.f(rbar)
            comps = np.diag(
                [1.0, 1.0 / (fv * rbar * rbar), 1.0 / (fv * rbar * rbar * s * s)]
            )
        else:
            x = np.asarray(pt, dtype=float)
            rbar = float(np.linalg.norm(x))
            if rbar == 0.0:
                comps = np.eye(3)
            else:
                _check_rbar(metric, rbar)
                fv = metric.f(rbar)
                xhat = x / rbar
                comps = (np.eye(3) + (fv - 1.0) * np.outer(xhat, xhat)) / fv
    else:
        if chart == "cartesian":
            r = float(np.linalg.norm(np.asarray(pt, dtype=float)))
            comps = numeric_index(metric, r) * np.eye(3)
        else:
            r, theta = pt[0], pt[1]
            s = math.sin(theta)
            if s == 0.0:
                raise DomainError("spherical chart degenerate at sin(theta) = 0")
            n = numeric_index(metric, r)
            comps = n * np.diag([1.0, 1.0 / (r * r), 1.0 / (r * r * s * s)])

    return TensorIndex(
        components=comps,
        chart=chart,
        form=form,
        point=pt,
        gamma_convention=_GAMMA_NOTE[chart],
    )


# --------------------------------------------------------------------------
# expanding universe


def rw_index(spec: SpacetimeSpec, t: float) -> float:
    """Index of the homogeneous time-varying medium: n(t) = a(t)."""
    if spec.kind != "RW":
        raise DomainError(f"rw_index needs kind RW, got {spec.kind}")
    lo, hi = spec.t_domain
    if not (lo <= t <= hi):
        raise DomainError(f"t = {t:.12g} outside scale-factor domain [{lo}, {hi}]")
    a = float(spec.scale_factor(t))
    if not (math.isfinite(a) and a > 0.0):
        raise DomainError(f"RW scale factor must be positive: a({t:.6g}) = {a!r}")
    return a


# --------------------------------------------------------------------------
# sampled profiles


@dataclass(frozen=True)
class IndexProfile:
    """Scalar index samples on a strictly increasing position grid."""

    positions: np.ndarray
    values: np.ndarray
    domain: tuple[float, float]
    closed_form: Optional[Callable] = None

    def __post_init__(self):
        pos = np.asarray(self.positions, dtype=float)
        val = np.asarray(self.values, dtype=float)
        object.__setattr__(self, "positions", pos)
        object.__setattr__(self, "values", val)
        if pos.ndim != 1 or val.shape != pos.shape or pos.size == 0:
            raise DomainError("profile needs matching 1-d position/value arrays")
        if not np.all(np.diff(pos) > 0):
            raise DomainError("profile positions must be strictly increasing")
        if not (np.all(np.isfinite(val)) and np.all(val > 0)):
            raise DomainError("profile invariant n > 0 violated")
        lo, hi = self.domain
        if pos[0] < lo or pos[-1] > hi:
            raise DomainError(
                f"profile samples outside domain [{lo:.12g}, {hi:.12g}]"
            )

    @property
    def samples(self) -> np.ndarray:
        return np.column_stack((self.positions, self.values))

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        lo, hi = self.domain
        if np.any(x < lo) or np.any(x > hi):
            raise DomainError(f"evaluation outside domain [{lo:.12g}, {hi:.12g}]")
        if self.closed_form is not None:
            return self.closed_form(x)
        return np.interp(x, self.positions, self.values)
