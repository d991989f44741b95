"""Concatenated |A>/|Y> magic-state distillation.

Per level the residual error maps p -> 35 p^3 for |A> (15-to-1) and
p -> 7 p^3 for |Y> (7-to-1). Level selection starts at 1: injected states are
always distilled at least once before touching data.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .model import DistillationInsufficientError

MAX_LEVEL = 3


class StateKind(str, enum.Enum):
    A = "A"
    Y = "Y"

    @property
    def prefactor(self) -> int:
        return 35 if self is StateKind.A else 7


@dataclass(frozen=True)
class DistillationState:
    kind: StateKind
    level: int
    residual: float


@dataclass(frozen=True)
class DistillationPlan:
    level_A: int
    level_Y: int
    residual_A: float
    residual_Y: float

    @property
    def footprint_level(self) -> int:
        return max(self.level_A, self.level_Y)


@dataclass(frozen=True)
class RedundancyModel:
    """Spare-circuit layout of the level-2 gate block.

    ``circuit_fail_scale`` is the constant in "circuit failure probability
    O(p)"; a distillation circuit fails with probability scale * p.
    """

    a_slots: int = 17
    a_required: int = 15
    y_corr_slots: int = 15
    y_corr_demand_prob: float = 0.5
    top_y_demand_prob: float = 0.5
    top_y_slots: int = 8
    top_y_required: int = 7
    circuit_fail_scale: float = 1.0

    def __post_init__(self):
        if self.a_slots < self.a_required or self.top_y_slots < self.top_y_required:
            raise ValueError("slots must be at least the required count")
        for prob in (self.y_corr_demand_prob, self.top_y_demand_prob):
            if not 0 <= prob <= 1:
                raise ValueError("demand probabilities must lie in [0, 1]")
        if self.circuit_fail_scale < 0:
            raise ValueError("circuit_fail_scale must be non-negative")

    def circuit_fail(self, p: float) -> float:
        return min(1.0, self.circuit_fail_scale * p)


DEFAULT_REDUNDANCY = RedundancyModel()


def _kind(kind) -> StateKind:
    return kind if isinstance(kind, StateKind) else StateKind(kind)


def residual_after(kind: StateKind | str, l: int, p: float) -> float:
    """Closed form prefactor^((3^l - 1)/2) * p^(3^l), clamped to 1."""
    kind = _kind(kind)
    if l < 0:
        raise ValueError(f"level must be >= 0, got {l}")
    if not 0 <= p < 1:
        raise ValueError(f"p must satisfy 0 <= p < 1, got {p}")
    if p == 0:
        return 0.0
    n = 3**l
    log_r = (n - 1) // 2 * math.log(kind.prefactor) + n * math.log(p)
    if log_r >= 0:
        return 1.0
    power = p**n
    if power < 1e-290:
        # p^n underflows long before the product does
        return math.exp(log_r)
    return float(kind.prefactor ** ((n - 1) // 2)) * power


def iterate_residual(kind: StateKind | str, l: int, p: float) -> float:
    """Apply the one-level recursion l times; independent check of residual_after."""
    kind = _kind(kind)
    r = p
    for _ in range(l):
        r = min(1.0, kind.prefactor * r**3)
    return r


def select_level(kind: StateKind | str, p: float, p_f: float) -> DistillationState:
    kind = _kind(kind)
    if not 0 <= p < 1:
        raise ValueError(f"p must satisfy 0 <= p < 1, got {p}")
    if not 0 <= p_f < 1:
        raise ValueError(f"p_f must satisfy 0 <= p_f < 1, got {p_f}")
    for level in range(1, MAX_LEVEL + 1):
        r = residual_after(kind, level, p)
        if r <= p_f:
            return DistillationState(kind, level, r)
    raise DistillationInsufficientError(
        f"distillation-insufficient: |{kind.value}> residual "
        f"{residual_after(kind, MAX_LEVEL, p):.3g} at level {MAX_LEVEL} exceeds p_f = {p_f:.3g}"
    )


def plan_for(p: float, p_f: float) -> DistillationPlan:
    a = select_level(StateKind.A, p, p_f)
    y = select_level(StateKind.Y, p, p_f)
    return DistillationPlan(a.level, y.level, a.residual, y.residual)


def binomial_tail(n: int, q: float, k_min: int) -> float:
    """P(X >= k_min) for X ~ Binomial(n, q), summed exactly term by term."""
    if k_min <= 0:
        return 1.0
    return math.fsum(math.comb(n, k) * q**k * (1 - q) ** (n - k) for k in range(k_min, n + 1))


def shortage_prob_A(p: float, model: RedundancyModel = DEFAULT_REDUNDANCY) -> float:
    """Probability that fewer than ``a_required`` of ``a_slots`` level-1 |A> circuits succeed."""
    if not 0 <= p < 1:
        raise ValueError(f"p must satisfy 0 <= p < 1, got {p}")
    spare = model.a_slots - model.a_required
    return binomial_tail(model.a_slots, model.circuit_fail(p), spare + 1)


def shortage_prob_A_leading(p: float, model: RedundancyModel = DEFAULT_REDUNDANCY) -> float:
    spare = model.a_slots - model.a_required
    return math.comb(model.a_slots, spare + 1) * model.circuit_fail(p) ** (spare + 1)


def shortage_prob_Ycorr(p: float, model: RedundancyModel = DEFAULT_REDUNDANCY) -> float:
    """Leading order: every correction demanded and one of the level-1 |Y> circuits failed."""
    if not 0 <= p < 1:
        raise ValueError(f"p must satisfy 0 <= p < 1, got {p}")
    n = model.y_corr_slots
    return n * model.circuit_fail(p) * model.y_corr_demand_prob**n


def shortage_prob_Ycorr_exact(p: float, model: RedundancyModel = DEFAULT_REDUNDANCY) -> float:
    """Sum over demand m of P(demand = m) * P(failures > n - m)."""
    if not 0 <= p < 1:
        raise ValueError(f"p must satisfy 0 <= p < 1, got {p}")
    n = model.y_corr_slots
    h = model.y_corr_demand_prob
    q = model.circuit_fail(p)
    return math.fsum(
        math.comb(n, m) * h**m * (1 - h) ** (n - m) * binomial_tail(n, q, n - m + 1)
        for m in range(n + 1)
    )


def shortage_prob_topY(p: float, model: RedundancyModel = DEFAULT_REDUNDANCY) -> float:
    """Final Rz(pi/4) correction demanded while too few level-1 |Y> feeds survived."""
    if not 0 <= p < 1:
        raise ValueError(f"p must satisfy 0 <= p < 1, got {p}")
    spare = model.top_y_slots - model.top_y_required
    return model.top_y_demand_prob * binomial_tail(model.top_y_slots, model.circuit_fail(p), spare + 1)
