"""cosmocell: curved-spacetime media design and interferometer simulation.

Converts static spherically-symmetric metrics into graded-index profiles,
designs vapor-cell control-beam intensities realizing them, propagates phases
and rays through the resulting media, and simulates Mach-Zehnder detection
statistics for definite and superposed media.
"""

__version__ = "0.1.0"

from .interferometer import (  # noqa: F401
    FringeScan,
    MZIConfig,
    SweepSpec,
    fringe_scan,
    joint_state_probabilities,
    scheme1_probabilities,
    scheme2_probabilities,
)
from .medium import CellDesign, axial_profile, design_cell  # noqa: F401
from .propagation import (  # noqa: F401
    PhaseResult,
    optical_phase,
    phase_difference_closed,
    redshift_factor,
)
from .rays import (  # noqa: F401
    DeflectionResult,
    RadialMedium,
    Ray,
    circular_orbit_radius,
    critical_impact_parameter,
    deflection_angle,
    radial_medium,
    trace_ray,
    turning_point_deflection,
)
from .spacetimes import (  # noqa: F401
    KINDS,
    LEADING_ORDER_KINDS,
    DomainError,
    IndexProfile,
    SpacetimeSpec,
    StaticMetric,
    closed_form_index,
    isotropic_transform,
    numeric_index,
    rw_index,
    static_metric,
    tensor_index,
)
