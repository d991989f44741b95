"""End-to-end estimate for one (L, p) point.

Code distance depends on the gate footprint volume, the footprint depends on
the distillation level, and the level depends on the logical-cell error that
the distance buys. ``estimate`` resolves this by raising the level from 1
until the residual conditions hold; the level only ever goes up, so the loop
runs at most three times.
"""

from __future__ import annotations

import enum
import functools
import math
from dataclasses import asdict, dataclass
from fractions import Fraction

from .decomposition import circuit_shape, sk_sequence_length
from .distillation import (
    DEFAULT_REDUNDANCY,
    MAX_LEVEL,
    DistillationPlan,
    RedundancyModel,
    plan_for,
    shortage_prob_A,
    shortage_prob_Ycorr,
)
from .hardware import (
    MachineDimensions,
    ModuleBreakdown,
    RuntimeReport,
    machine_dimensions,
    module_count,
    runtime,
)
from .layout import ClusterGeometry, GateFootprint, cluster_geometry, footprint
from .model import (
    DEFAULT_CONSTANTS,
    DEFAULT_HARDWARE,
    CodeDistance,
    EstimationError,
    HardwareProfile,
    PhysicalConstants,
    ProblemInstance,
    UnsatisfiableBoundError,
    gate_failure,
    logical_cell_failure,
    required_distance,
    target_gate_error,
)

L_MAX_SEARCH = 2**20


@dataclass(frozen=True)
class ResourceReport:
    input: ProblemInstance
    constants: PhysicalConstants
    hardware: HardwareProfile
    delta_gate: float
    Lambda: int
    plan: DistillationPlan
    d: CodeDistance
    p_f: float
    footprint: GateFootprint
    geometry: ClusterGeometry
    modules: ModuleBreakdown
    dimensions: MachineDimensions
    runtime: RuntimeReport
    shortage_A: float
    shortage_Ycorr: float

    def to_dict(self) -> dict:
        g = self.geometry
        shape = circuit_shape(self.input.L)
        return {
            "input": {"L_bits": self.input.L, "p": self.input.p},
            "constants": asdict(self.constants),
            "hardware": {"T_s": self.hardware.T, "M_m": self.hardware.M, "c_f_m_per_s": self.hardware.c_f},
            "K_steps": shape.K,
            "Q_qubits": shape.Q,
            "delta_gate": self.delta_gate,
            "Lambda": self.Lambda,
            "plan": {**asdict(self.plan), "footprint_level": self.plan.footprint_level},
            "d": self.d.d,
            "p_f": self.p_f,
            "footprint": {
                "level": self.footprint.level,
                "V_cells": self.footprint.V,
                "D_cells": self.footprint.D,
                "A_height_cells": self.footprint.A_height,
                "qubits_per_block": self.footprint.qubits_per_block,
            },
            "geometry": {
                "cells_line": g.cells_line,
                "cells_height": g.cells_height,
                "edge_unit_cells": str(g.edge_unit_cells),
                "N1_unit_cells": g.N1,
                "N2_unit_cells": g.N2,
                "depth_logical_cells": g.depth_logical_cells,
                "depth_unit_cells": g.depth_unit_cells,
            },
            "modules": asdict(self.modules),
            "dimensions": asdict(self.dimensions),
            "runtime": {
                "runtime_seconds": self.runtime.seconds,
                "runtime_years": self.runtime.years,
                "temporal_overhead": self.runtime.temporal_overhead,
                "qubit_overhead": self.runtime.qubit_overhead,
            },
            "shortage_A": self.shortage_A,
            "shortage_Ycorr": self.shortage_Ycorr,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "ResourceReport":
        fp = data["footprint"]
        g = data["geometry"]
        rt = data["runtime"]
        hw = data["hardware"]
        plan = data["plan"]
        return cls(
            input=ProblemInstance(data["input"]["L_bits"], data["input"]["p"]),
            constants=PhysicalConstants(**data["constants"]),
            hardware=HardwareProfile(T=hw["T_s"], M=hw["M_m"], c_f=hw["c_f_m_per_s"]),
            delta_gate=data["delta_gate"],
            Lambda=data["Lambda"],
            plan=DistillationPlan(plan["level_A"], plan["level_Y"], plan["residual_A"], plan["residual_Y"]),
            d=CodeDistance(data["d"]),
            p_f=data["p_f"],
            footprint=GateFootprint(
                level=fp["level"], V=fp["V_cells"], D=fp["D_cells"],
                A_height=fp["A_height_cells"], qubits_per_block=fp["qubits_per_block"],
            ),
            geometry=ClusterGeometry(
                cells_line=g["cells_line"],
                cells_height=g["cells_height"],
                edge_unit_cells=Fraction(g["edge_unit_cells"]),
                N1=g["N1_unit_cells"],
                N2=g["N2_unit_cells"],
                depth_logical_cells=g["depth_logical_cells"],
                depth_unit_cells=g["depth_unit_cells"],
            ),
            modules=ModuleBreakdown(**data["modules"]),
            dimensions=MachineDimensions(**data["dimensions"]),
            runtime=RuntimeReport(
                seconds=rt["runtime_seconds"],
                years=rt["runtime_years"],
                temporal_overhead=rt["temporal_overhead"],
                qubit_overhead=rt["qubit_overhead"],
            ),
            shortage_A=data["shortage_A"],
            shortage_Ycorr=data["shortage_Ycorr"],
        )


def check_report(report: ResourceReport) -> None:
    """Raise AssertionError unless the report is sound and recomputable from its input."""
    assert gate_failure(report.p_f, report.Lambda, report.footprint.V) <= report.delta_gate
    assert report.plan.residual_A <= report.p_f
    assert report.plan.residual_Y <= report.p_f
    assert report.footprint.level == report.plan.footprint_level
    again = estimate(report.input, report.constants, report.hardware)
    assert again == report, "report does not match a fresh estimate of its input"


@functools.lru_cache(maxsize=65536)
def _estimate(inst: ProblemInstance, k: PhysicalConstants, hw: HardwareProfile,
              model: RedundancyModel) -> ResourceReport:
    L, p = inst.L, inst.p
    k.check_subthreshold(p)
    delta = target_gate_error(L)
    Lambda = sk_sequence_length(delta).Lambda

    level = 1
    seen = set()
    while True:
        assert level not in seen, "distillation level oscillated"
        seen.add(level)
        fp = footprint(level)
        d = required_distance(L, Lambda, fp.V, p, k)
        p_f = logical_cell_failure(d, p, k)
        plan = plan_for(p, p_f)
        if plan.footprint_level == level:
            break
        # the new level needs a larger V, hence a larger d and smaller p_f
        assert plan.footprint_level > level and plan.footprint_level <= MAX_LEVEL
        level = plan.footprint_level

    geom = cluster_geometry(L, d, Lambda, fp)
    modules = module_count(geom.N1, geom.N2)
    return ResourceReport(
        input=inst,
        constants=k,
        hardware=hw,
        delta_gate=delta.delta_gate,
        Lambda=Lambda,
        plan=plan,
        d=d,
        p_f=p_f,
        footprint=fp,
        geometry=geom,
        modules=modules,
        dimensions=machine_dimensions(geom, hw),
        runtime=runtime(L, Lambda, fp.D, d.d, hw.T, total_modules=modules.total),
        shortage_A=shortage_prob_A(p, model),
        shortage_Ycorr=shortage_prob_Ycorr(p, model),
    )


def estimate(inst: ProblemInstance, k: PhysicalConstants = DEFAULT_CONSTANTS,
             hw: HardwareProfile = DEFAULT_HARDWARE,
             model: RedundancyModel = DEFAULT_REDUNDANCY) -> ResourceReport:
    return _estimate(inst, k, hw, model)


class Metric(str, enum.Enum):
    runtime = "runtime"
    modules = "modules"
    sx = "sx"
    sy = "sy"

    @property
    def unit(self) -> str:
        return {"runtime": "s", "modules": "modules", "sx": "m", "sy": "m"}[self.value]

    def of(self, report: ResourceReport) -> float:
        if self is Metric.runtime:
            return report.runtime.seconds
        if self is Metric.modules:
            return report.modules.total
        if self is Metric.sx:
            return report.dimensions.S_x_m
        return report.dimensions.S_y_m


def metric_value(L: int, p: float, metric: Metric | str, k: PhysicalConstants = DEFAULT_CONSTANTS,
                 hw: HardwareProfile = DEFAULT_HARDWARE) -> float:
    """Metric at (L, p); +inf where three distillation levels are not enough."""
    metric = Metric(metric)
    try:
        return metric.of(estimate(ProblemInstance(L, p), k, hw))
    except EstimationError as exc:
        if exc.kind == "distillation-insufficient":
            return math.inf
        raise


def max_L_within(bound: float, p: float, metric: Metric | str = Metric.runtime,
                 k: PhysicalConstants = DEFAULT_CONSTANTS, hw: HardwareProfile = DEFAULT_HARDWARE,
                 L_max: int = L_MAX_SEARCH) -> int:
    """Largest L in [2, L_max] whose metric stays within ``bound``.

    Doubling brackets the boundary, integer bisection narrows it, and the
    answer is confirmed by evaluating L and L + 1 directly.
    """
    def ok(L: int) -> bool:
        return metric_value(L, p, metric, k, hw) <= bound

    if not ok(2):
        raise UnsatisfiableBoundError(f"bound unsatisfiable: {metric} at L=2 already exceeds {bound}")
    lo, hi = 2, 4
    while hi <= L_max and ok(hi):
        lo, hi = hi, hi * 2
    if hi > L_max:
        if ok(L_max):
            return L_max
        hi = L_max
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if ok(mid):
            lo = mid
        else:
            hi = mid
    # a non-monotone step would show up here; walk to the true local edge
    while lo > 2 and not ok(lo):
        lo -= 1
    while lo < L_max and ok(lo + 1):
        lo += 1
    return lo
