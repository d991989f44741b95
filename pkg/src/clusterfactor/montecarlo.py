"""Monte Carlo check of the spare-distillery shortage probabilities.

Each trial is one logical time step of one level-2 gate block. Trials are
split into fixed-size chunks, each seeded from a child of the master
``SeedSequence``, so results depend only on (seed, trials) and not on how
chunks are scheduled.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .distillation import DEFAULT_REDUNDANCY, RedundancyModel

CHUNK = 1 << 21


@dataclass(frozen=True)
class SimConfig:
    p_circuit_fail: float
    trials: int
    seed: int = 0
    model: RedundancyModel = field(default=DEFAULT_REDUNDANCY)

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError(f"trials must be >= 1, got {self.trials}")
        if not 0 <= self.p_circuit_fail <= 1:
            raise ValueError(f"p_circuit_fail must lie in [0, 1], got {self.p_circuit_fail}")


@dataclass(frozen=True)
class Estimate:
    rate: float
    stderr: float
    events: int
    trials: int

    @classmethod
    def from_counts(cls, events: int, trials: int) -> "Estimate":
        r = events / trials
        return cls(r, math.sqrt(r * (1 - r) / trials), events, trials)

    def within(self, exact: float, sigmas: float = 3.0) -> bool:
        """Two-sided z check against ``exact``, using the stderr implied by ``exact``.

        The observed-rate stderr collapses at low event counts, so it is only reported.
        """
        se = math.sqrt(exact * (1 - exact) / self.trials)
        return abs(self.rate - exact) <= sigmas * se


@dataclass(frozen=True)
class SimResult:
    shortage_A: Estimate
    shortage_Ycorr: Estimate
    top_Y_shortage: Estimate


def _chunk_counts(rng: np.random.Generator, n: int, q: float, m: RedundancyModel) -> np.ndarray:
    fail_a = rng.binomial(m.a_slots, q, n)
    short_a = np.count_nonzero(fail_a > m.a_slots - m.a_required)

    demand = rng.binomial(m.y_corr_slots, m.y_corr_demand_prob, n)
    fail_y = rng.binomial(m.y_corr_slots, q, n)
    short_y = np.count_nonzero(fail_y > m.y_corr_slots - demand)

    top_demand = rng.random(n) < m.top_y_demand_prob
    fail_top = rng.binomial(m.top_y_slots, q, n)
    short_top = np.count_nonzero(top_demand & (fail_top > m.top_y_slots - m.top_y_required))
    return np.array([short_a, short_y, short_top], dtype=np.int64)


def simulate(cfg: SimConfig) -> SimResult:
    n_chunks = -(-cfg.trials // CHUNK)
    children = np.random.SeedSequence(cfg.seed).spawn(n_chunks)
    counts = np.zeros(3, dtype=np.int64)
    remaining = cfg.trials
    for child in children:
        n = min(CHUNK, remaining)
        counts += _chunk_counts(np.random.default_rng(child), n, cfg.p_circuit_fail, cfg.model)
        remaining -= n
    a, y, top = (int(c) for c in counts)
    return SimResult(
        Estimate.from_counts(a, cfg.trials),
        Estimate.from_counts(y, cfg.trials),
        Estimate.from_counts(top, cfg.trials),
    )
