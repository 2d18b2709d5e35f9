"""Mach-Zehnder detection statistics for the two probe schemes.

Scheme I sends one photon through a cell whose medium is in a cat state of
the flat (n1) and curved (n2) profiles; scheme II splits the photon itself
over a flat arm and a curved arm.  Both printed probability laws are
implemented verbatim as contracts:

    scheme I :  P+- = (2 +- sqrt(2 + 2 cos dphi)) / 4
    scheme II:  P+- = (1 +- cos dphi) / 2

A third, clearly separate route — an explicit joint photon x medium
amplitude model with beam-splitter unitaries and a branch overlap
eta = <n1|n2> — is kept as a cross-check.  With a definite n2 medium it
reduces exactly to scheme II; with an eta=0 cat it gives
p+ = (3 + cos dphi)/4, which meets the scheme I law at dphi = 0 and pi
but not in between (0.75 vs (2+sqrt 2)/4 at pi/2).  That discrepancy is
pinned by tests and surfaced in the docs rather than resolved.

Conventions (recorded in scan metadata): the piezo adds phase to the
reference arm, so signals depend on dphi - piezo; splitters are lossless
50/50 with transmitted amplitude 1/sqrt2 and reflected i/sqrt2, and ports
are labeled so dphi = 0 sends everything to +.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .propagation import phase_difference_closed
from .spacetimes import DomainError

__all__ = [
    "SCHEMES",
    "MEDIUM_STATES",
    "MZIConfig",
    "DetectionStats",
    "SweepSpec",
    "FringeScan",
    "scheme1_probabilities",
    "scheme2_probabilities",
    "joint_state_probabilities",
    "probabilities",
    "detection_stats",
    "fringe_scan",
]

SCHEMES = ("I", "II", "joint_model")
MEDIUM_STATES = ("cat", "definite_n1", "definite_n2")
SAMPLING_MODES = ("deterministic_mean", "poisson")
SWEEP_KINDS = ("piezo", "hubble")

_T = 1.0 / math.sqrt(2.0)  # transmitted amplitude
_R = 1j / math.sqrt(2.0)  # reflected amplitude


def scheme2_probabilities(delta_phi: float, piezo: float = 0.0):
    """Path-superposition law P+- = (1 +- cos(dphi - piezo)) / 2."""
    c = math.cos(delta_phi - piezo)
    return (0.5 * (1.0 + c), 0.5 * (1.0 - c))


def scheme1_probabilities(delta_phi: float, piezo: float = 0.0):
    """Cat-state-medium law P+- = (2 +- sqrt(2 + 2 cos(dphi - piezo))) / 4."""
    root = math.sqrt(max(0.0, 2.0 + 2.0 * math.cos(delta_phi - piezo)))
    return (0.25 * (2.0 + root), 0.25 * (2.0 - root))


def joint_state_probabilities(
    delta_phi: float,
    piezo: float = 0.0,
    eta: float = 0.0,
    medium: str = "cat",
):
    """Explicit joint photon x medium model (the cross-check route).

    The photon enters the upper port of a 50/50 splitter; the cell sits in
    the upper arm and imprints phase 0 on the n1 branch and delta_phi on
    the n2 branch; the piezo phase rides the lower (reference) arm.  Medium
    branches have overlap <n1|n2> = eta, handled through the Gram matrix
    when squaring amplitudes; port probabilities are renormalized because
    tracing out a non-orthogonal branch basis is not norm-preserving.
    """
    if medium not in MEDIUM_STATES:
        raise DomainError(f"medium state must be one of {MEDIUM_STATES}, got {medium!r}")
    if not (0.0 <= eta <= 1.0):
        raise DomainError(f"0 <= eta <= 1 violated: eta = {eta!r}")
    if medium == "cat":
        norm = 1.0 / math.sqrt(2.0 + 2.0 * eta)
        branch_amp = np.array([norm, norm], dtype=complex)
    elif medium == "definite_n1":
        branch_amp = np.array([1.0, 0.0], dtype=complex)
    else:
        branch_amp = np.array([0.0, 1.0], dtype=complex)

    cell = np.exp(1j * np.array([0.0, delta_phi]))  # per-branch cell phase
    upper = _T * cell * branch_amp
    lower = _R * np.exp(1j * piezo) * branch_amp
    # recombiner: |upper> -> (i|+> + |->)/sqrt2, |lower> -> (|+> + i|->)/sqrt2
    c_plus = _R * upper + _T * lower
    c_minus = _T * upper + _R * lower

    gram = np.array([[1.0, eta], [eta, 1.0]])
    w_plus = float(np.real(np.conj(c_plus) @ gram @ c_plus))
    w_minus = float(np.real(np.conj(c_minus) @ gram @ c_minus))
    total = w_plus + w_minus
    return (w_plus / total, w_minus / total)


@dataclass(frozen=True)
class MZIConfig:
    """Interferometer settings for a fringe scan."""

    scheme: str = "II"
    piezo_phase: float = 0.0
    n0: int = 0
    eta: float = 0.0
    medium_state: str = "cat"
    sampling: str = "deterministic_mean"
    seed: int = 0

    def __post_init__(self):
        if self.scheme not in SCHEMES:
            raise DomainError(f"scheme must be one of {SCHEMES}, got {self.scheme!r}")
        if self.medium_state not in MEDIUM_STATES:
            raise DomainError(
                f"medium state must be one of {MEDIUM_STATES}, got {self.medium_state!r}"
            )
        if self.sampling not in SAMPLING_MODES:
            raise DomainError(
                f"sampling must be one of {SAMPLING_MODES}, got {self.sampling!r}"
            )
        if not (isinstance(self.n0, int) and self.n0 >= 0):
            raise DomainError(f"n0 >= 0 violated: n0 = {self.n0!r}")
        if not (0.0 <= self.eta <= 1.0):
            raise DomainError(f"0 <= eta <= 1 violated: eta = {self.eta!r}")
        if not math.isfinite(self.piezo_phase):
            raise DomainError(f"piezo phase must be finite, got {self.piezo_phase!r}")


def probabilities(config: MZIConfig, delta_phi: float, piezo: Optional[float] = None):
    """Dispatch (p_plus, p_minus) for the configured scheme."""
    if piezo is None:
        piezo = config.piezo_phase
    if config.scheme == "I":
        return scheme1_probabilities(delta_phi, piezo)
    if config.scheme == "II":
        return scheme2_probabilities(delta_phi, piezo)
    return joint_state_probabilities(
        delta_phi, piezo, eta=config.eta, medium=config.medium_state
    )


@dataclass(frozen=True)
class DetectionStats:
    """Per-point detection record; counts are integers, means are not."""

    delta_phi: float
    p_plus: float
    p_minus: float
    counts_plus: int
    counts_minus: int
    mean_plus: float
    mean_minus: float


def detection_stats(
    config: MZIConfig,
    delta_phi: float,
    piezo: Optional[float] = None,
    rng: Optional[np.random.Generator] = None,
) -> DetectionStats:
    p_plus, p_minus = probabilities(config, delta_phi, piezo)
    mean_plus = config.n0 * p_plus
    mean_minus = config.n0 * p_minus
    if config.sampling == "poisson":
        if rng is None:
            rng = np.random.Generator(np.random.PCG64(config.seed))
        counts = (int(rng.poisson(mean_plus)), int(rng.poisson(mean_minus)))
    else:
        counts = (int(round(mean_plus)), int(round(mean_minus)))
    return DetectionStats(
        delta_phi=delta_phi,
        p_plus=p_plus,
        p_minus=p_minus,
        counts_plus=counts[0],
        counts_minus=counts[1],
        mean_plus=mean_plus,
        mean_minus=mean_minus,
    )


@dataclass(frozen=True)
class SweepSpec:
    """What to sweep: piezo phase (rad) or the dimensionless product HL."""

    kind: str
    start: float
    stop: float
    steps: int

    def __post_init__(self):
        if self.kind not in SWEEP_KINDS:
            raise DomainError(f"sweep kind must be one of {SWEEP_KINDS}, got {self.kind!r}")
        if self.steps < 2:
            raise DomainError(f"sweep needs steps >= 2, got {self.steps}")
        if not (math.isfinite(self.start) and math.isfinite(self.stop)):
            raise DomainError("sweep range must be finite")
        if self.kind == "hubble":
            if self.start < 0 or self.stop < 0:
                raise DomainError("hubble sweep needs HL >= 0")
            if max(self.start, self.stop) >= 2.0:
                raise DomainError(
                    f"HL<2 violated in hubble sweep: max HL = {max(self.start, self.stop):.6g}"
                )

    @property
    def values(self) -> np.ndarray:
        return np.linspace(self.start, self.stop, self.steps)


@dataclass(frozen=True)
class FringeScan:
    """One scan: per-row swept value, phase, probabilities, counts, means."""

    sweep_kind: str
    sweep_values: np.ndarray
    delta_phi: np.ndarray
    p_plus: np.ndarray
    p_minus: np.ndarray
    counts_plus: np.ndarray
    counts_minus: np.ndarray
    mean_plus: np.ndarray
    mean_minus: np.ndarray
    config: MZIConfig
    L: float
    lambda0: float

    def __len__(self) -> int:
        return int(self.sweep_values.size)


def fringe_scan(
    config: MZIConfig,
    sweep: SweepSpec,
    H: float,
    L: float,
    lambda0: float,
) -> FringeScan:
    """Sweep the piezo (fixed medium) or HL (fixed piezo) and tabulate counts.

    A hubble sweep reinterprets each swept value v as HL, i.e. H = v / L;
    a piezo sweep keeps delta_phi fixed at the closed-form cell value for
    the given (H, L, lambda0).  Poisson sampling uses one generator for the
    whole scan (PCG64 seeded from config.seed), drawing the two ports
    independently in row order.
    """
    values = sweep.values
    if sweep.kind == "hubble":
        dphi = np.array(
            [phase_difference_closed(v / L, L, lambda0) for v in values]
        )
        piezos = np.full_like(values, config.piezo_phase)
    else:
        base = phase_difference_closed(H, L, lambda0)
        dphi = np.full_like(values, base)
        piezos = values

    rng = (
        np.random.Generator(np.random.PCG64(config.seed))
        if config.sampling == "poisson"
        else None
    )
    rows = [
        detection_stats(config, float(dp), piezo=float(pz), rng=rng)
        for dp, pz in zip(dphi, piezos)
    ]
    return FringeScan(
        sweep_kind=sweep.kind,
        sweep_values=values,
        delta_phi=np.array([r.delta_phi for r in rows]),
        p_plus=np.array([r.p_plus for r in rows]),
        p_minus=np.array([r.p_minus for r in rows]),
        counts_plus=np.array([r.counts_plus for r in rows], dtype=np.int64),
        counts_minus=np.array([r.counts_minus for r in rows], dtype=np.int64),
        mean_plus=np.array([r.mean_plus for r in rows]),
        mean_minus=np.array([r.mean_minus for r in rows]),
        config=config,
        L=L,
        lambda0=lambda0,
    )
