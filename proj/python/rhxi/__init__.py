"""Vertical-line integrals of the completed-zeta ratio.

Thin re-export of the compiled extension; values come back both as floats
and as decimal strings that carry the full working precision.
"""

from ._core import (  # noqa: F401
    CalibrationError,
    CircleContainsMultipleZeros,
    DomainError,
    MaxPanelsExceeded,
    NearPoleOnContour,
    NearZeroDivisor,
    NoSignChange,
    NonFiniteIntegrand,
    PoleError,
    PrecisionError,
    RhxiError,
    UsageError,
    __version__,
    closed_form_j,
    default_eps_grid,
    f_ratio,
    i_of_eps,
    j_of_eps,
    log_gamma,
    reference_value,
    residue_at,
    scan_zeros,
    sweep,
    xi,
    zeta,
)

__all__ = [
    "CalibrationError",
    "CircleContainsMultipleZeros",
    "DomainError",
    "MaxPanelsExceeded",
    "NearPoleOnContour",
    "NearZeroDivisor",
    "NoSignChange",
    "NonFiniteIntegrand",
    "PoleError",
    "PrecisionError",
    "RhxiError",
    "UsageError",
    "__version__",
    "closed_form_j",
    "default_eps_grid",
    "f_ratio",
    "i_of_eps",
    "j_of_eps",
    "log_gamma",
    "reference_value",
    "residue_at",
    "scan_zeros",
    "sweep",
    "xi",
    "zeta",
]
