"""Algorithm layer: Beauregard circuit shape and Solovay-Kitaev sequence length.

Every algorithmic gate is pessimistically treated as a full-length sequence of
Rz(pi/8) primitives.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .model import ErrorBudget, _check_L


@dataclass(frozen=True)
class CircuitShape:
    K: int  # depth in logical gate steps
    Q: int  # logical qubits


@dataclass(frozen=True)
class SKLength:
    Lambda: int

    def __post_init__(self):
        if self.Lambda < 1:
            raise ValueError(f"Lambda must be >= 1, got {self.Lambda}")


def circuit_shape(L: int) -> CircuitShape:
    _check_L(L)
    L = int(L)
    return CircuitShape(K=32 * L**3, Q=2 * L)


def sk_sequence_length(delta: ErrorBudget | float) -> SKLength:
    """Lambda = ceil(19.6 log10(1/delta) - 10.5), at least 1."""
    eps = delta.delta_gate if isinstance(delta, ErrorBudget) else float(delta)
    if not 0 < eps < 1:
        raise ValueError(f"delta must lie in (0, 1), got {eps}")
    raw = 19.6 * -math.log10(eps) - 10.5
    return SKLength(max(1, math.ceil(raw)))
