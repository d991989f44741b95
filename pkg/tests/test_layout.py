from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from clusterfactor.layout import FOOTPRINTS, cluster_geometry, footprint, logical_cell_edge


@pytest.mark.parametrize(
    "level, V, D, A",
    [(1, 210, 5, 21), (2, 1386, 9, 77), (3, 10000, 15, 334)],
)
def test_catalog(level, V, D, A):
    fp = footprint(level)
    assert (fp.V, fp.D, fp.A_height) == (V, D, A)


@pytest.mark.parametrize("level", [0, 4])
def test_catalog_rejects_unknown_level(level):
    with pytest.raises(ValueError):
        footprint(level)


def test_footprint_self_consistency():
    assert FOOTPRINTS[1].V == 5 * 21 * 2 == FOOTPRINTS[1].block_volume
    assert FOOTPRINTS[2].block_volume == 9 * 77 * 8 == 4 * FOOTPRINTS[2].V
    # level 3 height is the ceiling of V / (2 D)
    fp3 = FOOTPRINTS[3]
    assert fp3.A_height == -(-fp3.V // (2 * fp3.D))


def test_edge():
    assert logical_cell_edge(32) == 40
    assert logical_cell_edge(33) == Fraction(165, 4)


def test_geometry_examples():
    g = cluster_geometry(1024, 32, 281, footprint(2))
    assert (g.N1, g.N2) == (163_840, 3_080)
    assert g.depth_unit_cells == 32 * 1024**3 * 281 * 9 * 40
    assert g.depth_unit_cells == pytest.approx(3.4758e15, rel=1e-4)
    g = cluster_geometry(2, 4, 1, footprint(1))
    assert (g.N1, g.N2, g.cells_line, g.cells_height) == (40, 105, 8, 21)


def test_fractional_edge_rounds_up_only_at_the_end():
    g = cluster_geometry(1024, 33, 281, footprint(2))
    assert g.N1 == 168_960  # 4L * 165/4 is integral
    assert g.N2 == 3_177  # 77 * 165/4 = 3176.25
    assert g.depth_unit_cells == 32 * 1024**3 * 281 * 9 * 165 // 4


@given(L=st.integers(2, 5000), d=st.integers(1, 100), lvl=st.sampled_from([1, 2, 3]))
def test_linear_in_d(L, d, lvl):
    fp = footprint(lvl)
    g1 = cluster_geometry(L, d, 10, fp)
    g4 = cluster_geometry(L, 4 * d, 10, fp)
    assert g4.N1 == 4 * g1.N1 or g1.N1 == 5 * L * d  # N1 = 5Ld exactly
    assert g1.N1 == 5 * L * d
    assert g4.N2 == 5 * d * fp.A_height
    assert g1.N2 == -(-5 * d * fp.A_height // 4)
