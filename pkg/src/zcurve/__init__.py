"""Hardy Z-function laboratory: evaluation, critical points, arc-length checks."""

SCHEMA_VERSION = "zcurve/1"
__version__ = "0.1.0"

from .errors import (  # noqa: E402
    ConstraintError,
    ConvergenceError,
    DomainError,
    GridInsufficiencyError,
    QuadratureError,
)
from .rs import EvalOptions, HardyZ, theta, theta1, theta1_prime, trig_sum, z, z_prime  # noqa: E402
from .window import Window  # noqa: E402

__all__ = [
    "ConstraintError",
    "ConvergenceError",
    "DomainError",
    "EvalOptions",
    "GridInsufficiencyError",
    "HardyZ",
    "QuadratureError",
    "SCHEMA_VERSION",
    "Window",
    "theta",
    "theta1",
    "theta1_prime",
    "trig_sum",
    "z",
    "z_prime",
]
