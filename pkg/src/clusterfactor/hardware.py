"""Photonic-module counts, machine dimensions and runtime."""

from __future__ import annotations

from dataclasses import dataclass

from .layout import ClusterGeometry, logical_cell_edge
from .model import DEFAULT_HARDWARE, HardwareProfile, _check_L

SECONDS_PER_YEAR = 365.25 * 86400
REFERENCE_GATE_TIME = 10e-9


@dataclass(frozen=True)
class ModuleBreakdown:
    optical_lines: int
    detection_modules: int
    source_modules: int
    preparation_modules: int
    total: int


@dataclass(frozen=True)
class MachineDimensions:
    S_x_m: float
    S_y_m: float
    S_z_max_m: float


@dataclass(frozen=True)
class RuntimeReport:
    seconds: float
    years: float
    temporal_overhead: float
    qubit_overhead: float | None = None


def module_count(N1: int, N2: int) -> ModuleBreakdown:
    """Modules for an N1 x N2 unit-cell cross-section.

    Detector lines split evenly between two- and four-detector readout, i.e.
    three detectors per line on average; the line count is always odd, so
    the split is taken as that average rather than a floor/ceil partition.
    """
    if N1 < 1 or N2 < 1:
        raise ValueError(f"N1 and N2 must be >= 1, got {N1}, {N2}")
    lines = (2 * N1 + 1) * (2 * N2 + 1)
    detection = 3 * lines
    prep = 2 * (N1 + 2) * (N2 + 1) + 2 * (N2 + 2) * (N1 + 1)
    return ModuleBreakdown(
        optical_lines=lines,
        detection_modules=detection,
        source_modules=lines,
        preparation_modules=prep,
        total=12 + 14 * N1 + 14 * N2 + 20 * N1 * N2,
    )


def machine_dimensions(geom: ClusterGeometry, hw: HardwareProfile = DEFAULT_HARDWARE) -> MachineDimensions:
    return MachineDimensions(
        S_x_m=geom.N1 * hw.M,
        S_y_m=geom.N2 * hw.M,
        S_z_max_m=2 * hw.T * hw.c_f,
    )


def runtime(L: int, Lambda: int, D: int, d: int, T: float, total_modules: int | None = None) -> RuntimeReport:
    """Wall-clock time 32 L^3 * Lambda * D * (5d/4) * 2T.

    Overheads compare against the bare circuit: 32 L^3 steps at 10 ns, and 2L
    qubits.
    """
    _check_L(L)
    if Lambda < 1 or D < 1 or int(d) < 1 or T <= 0:
        raise ValueError("Lambda, D, d must be >= 1 and T > 0")
    L = int(L)
    layers = 32 * L**3 * Lambda * D * logical_cell_edge(d)
    seconds = float(layers * 2) * T
    bare = 32 * L**3 * REFERENCE_GATE_TIME
    return RuntimeReport(
        seconds=seconds,
        years=seconds / SECONDS_PER_YEAR,
        temporal_overhead=seconds / bare,
        qubit_overhead=None if total_modules is None else total_modules / (2 * L),
    )
