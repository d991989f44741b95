"""Braided Rz(pi/8) footprints and the cluster geometry they imply.

Sizes are in logical cells unless the name says unit cells. A logical cell has
edge 5d/4 unit cells, which is fractional for d not divisible by 4, so
unit-cell quantities are carried as Fractions and rounded up only at the
final physical counts.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .model import CodeDistance, _check_L


@dataclass(frozen=True)
class GateFootprint:
    level: int
    V: int  # logical cells per gate
    D: int  # temporal depth, logical cells
    A_height: int  # cross-section height, logical cells
    qubits_per_block: int
    width_per_qubit: int = 2

    @property
    def block_volume(self) -> int:
        """Volume of the repeating cuboid, shared by ``qubits_per_block`` gates."""
        return self.D * self.A_height * self.width_per_qubit * self.qubits_per_block


# level 3 is an extrapolation: only V and D are given; height = ceil(V / (2 D))
FOOTPRINTS = {
    1: GateFootprint(level=1, V=210, D=5, A_height=21, qubits_per_block=1),
    2: GateFootprint(level=2, V=1386, D=9, A_height=77, qubits_per_block=4),
    3: GateFootprint(level=3, V=10000, D=15, A_height=334, qubits_per_block=4),
}


def footprint(level: int) -> GateFootprint:
    try:
        return FOOTPRINTS[level]
    except KeyError:
        raise ValueError(f"footprint level must be 1, 2 or 3, got {level}") from None


def logical_cell_edge(d: int | CodeDistance) -> Fraction:
    """Edge of a logical cell in unit cells: d + d/4."""
    d = int(d)
    return Fraction(5 * d, 4)


@dataclass(frozen=True)
class ClusterGeometry:
    cells_line: int
    cells_height: int
    edge_unit_cells: Fraction
    N1: int
    N2: int
    depth_logical_cells: int
    depth_unit_cells: int


def cluster_geometry(L: int, d: int | CodeDistance, Lambda: int, fp: GateFootprint) -> ClusterGeometry:
    _check_L(L)
    L, d = int(L), int(d)
    if d < 1 or Lambda < 1:
        raise ValueError("d and Lambda must be >= 1")
    edge = logical_cell_edge(d)
    cells_line = 4 * L
    depth_logical = 32 * L**3 * Lambda * fp.D
    return ClusterGeometry(
        cells_line=cells_line,
        cells_height=fp.A_height,
        edge_unit_cells=edge,
        N1=math.ceil(cells_line * edge),
        N2=math.ceil(fp.A_height * edge),
        depth_logical_cells=depth_logical,
        depth_unit_cells=math.ceil(depth_logical * edge),
    )
