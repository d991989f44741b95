"""Grids of estimates over (L, p), iso-contours in L, and step detection.

Contours are exact integer boundaries in L, one per sampled p: the cost
surfaces are step functions of d and the distillation level, so nothing is
interpolated.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .model import (
    DEFAULT_CONSTANTS,
    DEFAULT_HARDWARE,
    EstimationError,
    HardwareProfile,
    PhysicalConstants,
    ProblemInstance,
)
from .pipeline import L_MAX_SEARCH, Metric, ResourceReport, estimate, max_L_within

DEFAULT_L_AXIS = (4, 8192, 64)
DEFAULT_P_AXIS = (1e-5, 6e-3, 64)


@dataclass(frozen=True)
class CellError:
    kind: str
    message: str


Cell = ResourceReport | CellError


@dataclass(frozen=True)
class SweepGrid:
    L_values: tuple[int, ...]
    p_values: tuple[float, ...]
    cells: tuple[tuple[Cell, ...], ...]  # cells[i][j] is (L_values[i], p_values[j])

    def row(self, L: int) -> tuple[Cell, ...]:
        return self.cells[self.L_values.index(L)]


@dataclass(frozen=True)
class Discontinuity:
    p_lo: float
    p_hi: float
    level_lo: int
    level_hi: int
    d_lo: int
    d_hi: int

    @property
    def level_changed(self) -> bool:
        return self.level_lo != self.level_hi


@dataclass(frozen=True)
class ContourPoint:
    p: float
    L_boundary: int | None
    error: CellError | None = None


@dataclass(frozen=True)
class ContourLine:
    metric: Metric
    threshold: float
    points: tuple[ContourPoint, ...]
    discontinuities: tuple[Discontinuity, ...] = field(default=())

    @property
    def unit(self) -> str:
        return self.metric.unit


def log_axis(lo: float, hi: float, n: int, integer: bool = False) -> list:
    """n log-spaced samples from lo to hi inclusive; integer axes are rounded and deduplicated."""
    if n <= 0:
        return []
    if n == 1:
        vals = [lo]
    else:
        vals = list(np.geomspace(lo, hi, n))
    if integer:
        return sorted({int(round(v)) for v in vals})
    return [float(v) for v in vals]


def _check_axis(values: Sequence, name: str) -> None:
    if any(b <= a for a, b in zip(values, values[1:])):
        raise ValueError(f"{name} axis must be strictly increasing")


def evaluate_cell(L: int, p: float, k: PhysicalConstants = DEFAULT_CONSTANTS,
                  hw: HardwareProfile = DEFAULT_HARDWARE) -> Cell:
    try:
        return estimate(ProblemInstance(L, p), k, hw)
    except EstimationError as exc:
        return CellError(exc.kind, str(exc))


def _row(args) -> tuple[Cell, ...]:
    L, p_values, k, hw = args
    return tuple(evaluate_cell(L, p, k, hw) for p in p_values)


def sweep(L_axis: Sequence[int], p_axis: Sequence[float], k: PhysicalConstants = DEFAULT_CONSTANTS,
          hw: HardwareProfile = DEFAULT_HARDWARE, workers: int | None = None) -> SweepGrid:
    """Evaluate every (L, p) pair; rows run in worker processes when ``workers`` > 1."""
    L_values = tuple(int(L) for L in L_axis)
    p_values = tuple(float(p) for p in p_axis)
    _check_axis(L_values, "L")
    _check_axis(p_values, "p")
    jobs = [(L, p_values, k, hw) for L in L_values]
    if workers and workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = tuple(pool.map(_row, jobs))
    else:
        rows = tuple(_row(job) for job in jobs)
    return SweepGrid(L_values, p_values, rows)


def find_discontinuities(p_values: Sequence[float], cells: Sequence[Cell]) -> list[Discontinuity]:
    """Adjacent samples whose footprint level or code distance differ."""
    out = []
    for (p0, c0), (p1, c1) in zip(zip(p_values, cells), zip(p_values[1:], cells[1:])):
        if not isinstance(c0, ResourceReport) or not isinstance(c1, ResourceReport):
            continue
        lv0, lv1 = c0.plan.footprint_level, c1.plan.footprint_level
        if lv0 != lv1 or c0.d != c1.d:
            out.append(Discontinuity(p0, p1, lv0, lv1, c0.d.d, c1.d.d))
    return out


def level_jumps(grid: SweepGrid, L: int) -> list[Discontinuity]:
    """Points along p at fixed L where the distillation level steps."""
    return [j for j in find_discontinuities(grid.p_values, grid.row(L)) if j.level_changed]


def contour(metric: Metric | str, threshold: float, p_axis: Sequence[float],
            k: PhysicalConstants = DEFAULT_CONSTANTS, hw: HardwareProfile = DEFAULT_HARDWARE,
            L_max: int = L_MAX_SEARCH) -> ContourLine:
    metric = Metric(metric)
    p_values = [float(p) for p in p_axis]
    _check_axis(p_values, "p")
    points = []
    boundary_cells: list[Cell] = []
    for p in p_values:
        try:
            L_b = max_L_within(threshold, p, metric, k, hw, L_max=L_max)
        except EstimationError as exc:
            err = CellError(exc.kind, str(exc))
            points.append(ContourPoint(p, None, err))
            boundary_cells.append(err)
            continue
        points.append(ContourPoint(p, L_b))
        boundary_cells.append(evaluate_cell(L_b, p, k, hw))
    return ContourLine(metric, threshold, tuple(points),
                       tuple(find_discontinuities(p_values, boundary_cells)))


def contour_is_consistent(line: ContourLine, k: PhysicalConstants = DEFAULT_CONSTANTS,
                          hw: HardwareProfile = DEFAULT_HARDWARE, L_max: int = L_MAX_SEARCH) -> bool:
    """Metric <= threshold at each boundary and > threshold one bit further."""
    for pt in line.points:
        if pt.L_boundary is None:
            continue
        here = evaluate_cell(pt.L_boundary, pt.p, k, hw)
        if not isinstance(here, ResourceReport) or line.metric.of(here) > line.threshold:
            return False
        if pt.L_boundary < L_max:
            nxt = evaluate_cell(pt.L_boundary + 1, pt.p, k, hw)
            if isinstance(nxt, ResourceReport) and line.metric.of(nxt) <= line.threshold:
                return False
    return True
