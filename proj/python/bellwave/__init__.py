"""Bell-CHSH correlations of entangled Dirac wavepackets."""

from ._core import (
    DegenerateDenominatorError,
    NonConvergenceError,
    UndefinedDetectionTime,
    ValidationError,
    bell,
    bell_limit_infinity,
    classical_crossing,
    correlator,
    correlator_numeric,
    detection_time,
    from_dimensionless,
    hermite_rule,
    kappa_star,
    sweep,
    to_dimensionless,
)

__all__ = [
    "DegenerateDenominatorError",
    "NonConvergenceError",
    "UndefinedDetectionTime",
    "ValidationError",
    "bell",
    "bell_limit_infinity",
    "classical_crossing",
    "correlator",
    "correlator_numeric",
    "detection_time",
    "from_dimensionless",
    "hermite_rule",
    "kappa_star",
    "sweep",
    "to_dimensionless",
]
