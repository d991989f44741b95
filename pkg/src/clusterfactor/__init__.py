"""Resource estimates for fault-tolerant factoring on a topological cluster-state machine."""

from .model import (
    AboveThresholdError,
    CodeDistance,
    DegenerateError,
    DistillationInsufficientError,
    ErrorBudget,
    EstimationError,
    HardwareProfile,
    PhysicalConstants,
    ProblemInstance,
    UnsatisfiableBoundError,
)
from .pipeline import Metric, ResourceReport, estimate, max_L_within

__all__ = [
    "AboveThresholdError",
    "CodeDistance",
    "DegenerateError",
    "DistillationInsufficientError",
    "ErrorBudget",
    "EstimationError",
    "HardwareProfile",
    "Metric",
    "PhysicalConstants",
    "ProblemInstance",
    "ResourceReport",
    "UnsatisfiableBoundError",
    "estimate",
    "max_L_within",
]
