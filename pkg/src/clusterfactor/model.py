"""Domain types and the logical-cell error scaling law.

All quantities are dimensionless probabilities or counts unless a unit is in
the name. Logarithms are base 10 throughout the package.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


class EstimationError(ValueError):
    """Base class for domain errors raised by the estimator."""

    kind = "estimation-error"


class AboveThresholdError(EstimationError):
    kind = "above-threshold"


class DegenerateError(EstimationError):
    kind = "degenerate"


class DistillationInsufficientError(EstimationError):
    kind = "distillation-insufficient"


class UnsatisfiableBoundError(EstimationError):
    kind = "bound-unsatisfiable"


@dataclass(frozen=True)
class ProblemInstance:
    L: int
    p: float

    def __post_init__(self):
        if int(self.L) != self.L or self.L < 2:
            raise ValueError(f"L must be an integer >= 2, got {self.L}")
        if not 0 <= self.p < 1:
            raise ValueError(f"p must satisfy 0 <= p < 1, got {self.p}")


@dataclass(frozen=True)
class PhysicalConstants:
    """Threshold-law constants: p_f = C1 * (C2 p / p_th) ** floor((d+1)/2)."""

    p_th: float = 0.0062
    C1: float = 0.13
    C2: float = 0.61

    def __post_init__(self):
        if not 0 < self.p_th < 1:
            raise ValueError(f"p_th must lie in (0, 1), got {self.p_th}")
        if self.C1 <= 0 or self.C2 <= 0:
            raise ValueError("C1 and C2 must be positive")

    @property
    def p_max(self) -> float:
        """Physical error rate at which the suppression base reaches 1."""
        return self.p_th / self.C2

    def check_subthreshold(self, p: float) -> None:
        if p < 0:
            raise ValueError(f"p must be non-negative, got {p}")
        if self.C2 * p >= self.p_th:
            raise AboveThresholdError(
                f"above threshold: C2*p = {self.C2 * p:.4g} >= p_th = {self.p_th:.4g}"
            )


@dataclass(frozen=True)
class HardwareProfile:
    T: float = 10e-9  # seconds per cluster layer
    M: float = 0.010  # module edge, meters
    c_f: float = 2.0e8  # meters / second

    def __post_init__(self):
        if self.T <= 0 or self.M <= 0 or self.c_f <= 0:
            raise ValueError("T, M and c_f must be strictly positive")


@dataclass(frozen=True)
class CodeDistance:
    d: int

    def __post_init__(self):
        if int(self.d) != self.d or self.d < 1:
            raise ValueError(f"code distance must be an integer >= 1, got {self.d}")

    def __int__(self):
        return self.d


@dataclass(frozen=True)
class ErrorBudget:
    delta_gate: float

    def __post_init__(self):
        if not 0 < self.delta_gate < 1:
            raise ValueError(f"delta_gate must lie in (0, 1), got {self.delta_gate}")


DEFAULT_CONSTANTS = PhysicalConstants()
DEFAULT_HARDWARE = HardwareProfile()


def _check_L(L: int) -> None:
    if int(L) != L or L < 2:
        raise ValueError(f"L must be an integer >= 2, got {L}")


def target_gate_error(L: int) -> ErrorBudget:
    """Per-gate budget 1/(640 L^4): 10% total failure spread over K*Q = 64 L^4 gates."""
    _check_L(L)
    return ErrorBudget(1.0 / (640 * int(L) ** 4))


def logical_cell_failure(d: int | CodeDistance, p: float, k: PhysicalConstants = DEFAULT_CONSTANTS) -> float:
    d = int(d)
    if d < 1:
        raise ValueError(f"code distance must be >= 1, got {d}")
    k.check_subthreshold(p)
    return k.C1 * (k.C2 * p / k.p_th) ** ((d + 1) // 2)


def gate_failure(p_f: float, Lambda: int, V: int) -> float:
    """Failure probability of a gate spanning Lambda*V independent logical cells."""
    if not 0 <= p_f <= 1:
        raise ValueError(f"p_f must lie in [0, 1], got {p_f}")
    if Lambda < 1 or V < 1:
        raise ValueError("Lambda and V must be >= 1")
    if p_f == 1:
        return 1.0
    # 1 - (1 - p_f)^n without cancellation for tiny p_f
    return -math.expm1(Lambda * V * math.log1p(-p_f))


def _budget_met(d: int, L: int, Lambda: int, V: int, p: float, k: PhysicalConstants) -> bool:
    return gate_failure(logical_cell_failure(d, p, k), Lambda, V) <= target_gate_error(L).delta_gate


def closed_form_distance(L: int, Lambda: int, V: int, p: float, k: PhysicalConstants = DEFAULT_CONSTANTS) -> int:
    """Ceiling formula for d, clamped at 1, without the exact budget recheck."""
    _check_L(L)
    if Lambda < 1 or V < 1:
        raise ValueError("Lambda and V must be >= 1")
    k.check_subthreshold(p)
    if p == 0:
        return 1
    arg = 640 * k.C1 * int(L) ** 4 * Lambda * V
    if arg <= 1:
        raise DegenerateError(f"degenerate: 640*C1*L^4*Lambda*V = {arg:.4g} <= 1")
    num = 2 * math.log10(arg)
    den = math.log10(k.p_th) - math.log10(k.C2 * p)
    return max(1, math.ceil(num / den - 1))


def required_distance(L: int, Lambda: int, V: int, p: float, k: PhysicalConstants = DEFAULT_CONSTANTS) -> CodeDistance:
    """Smallest code distance meeting the per-gate budget.

    Starts from the ceiling formula and steps d upward while the exact
    ``gate_failure`` check still exceeds ``target_gate_error(L)``; the formula
    relies on 1-(1-x)^n ~ n x and a continuous exponent, so it can land one
    parity step short.
    """
    d = closed_form_distance(L, Lambda, V, p, k)
    while not _budget_met(d, L, Lambda, V, p, k):
        d += 1
    return CodeDistance(d)
