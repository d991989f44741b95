import pytest
from hypothesis import given
from hypothesis import strategies as st

from clusterfactor.hardware import SECONDS_PER_YEAR, machine_dimensions, module_count, runtime
from clusterfactor.layout import cluster_geometry, footprint
from clusterfactor.model import HardwareProfile


def test_module_count_unit():
    m = module_count(1, 1)
    assert m.total == 60
    assert (m.optical_lines, m.detection_modules, m.source_modules, m.preparation_modules) == (9, 27, 9, 24)


def test_module_count_headline_cross_section():
    # 12 + 14*163840 + 14*3080 + 20*163840*3080
    assert module_count(163_840, 3_080).total == 10_094_880_892


@pytest.mark.parametrize("n1, n2", [(0, 5), (5, 0), (-1, 3)])
def test_module_count_rejects(n1, n2):
    with pytest.raises(ValueError):
        module_count(n1, n2)


def test_breakdown_identity_exhaustive():
    for n1 in range(1, 51):
        for n2 in range(1, 51):
            m = module_count(n1, n2)
            lines = (2 * n1 + 1) * (2 * n2 + 1)
            assert 4 * lines + m.preparation_modules == 12 + 14 * n1 + 14 * n2 + 20 * n1 * n2
            assert m.detection_modules + m.source_modules + m.preparation_modules == m.total


@given(st.integers(100, 10**6), st.integers(100, 10**6))
def test_module_count_quadratic(n1, n2):
    ratio = module_count(2 * n1, 2 * n2).total / module_count(n1, n2).total
    assert ratio == pytest.approx(4, rel=0.01)


def test_dimensions():
    dims = machine_dimensions(cluster_geometry(1024, 32, 281, footprint(2)), HardwareProfile())
    assert dims.S_x_m == pytest.approx(1638.4)
    assert dims.S_y_m == pytest.approx(30.8)
    assert dims.S_z_max_m == pytest.approx(4.0)


def test_runtime_examples():
    r = runtime(1024, 281, 9, 32, 10e-9)
    assert r.seconds == pytest.approx(6.9517e7, rel=1e-4)
    assert r.years == pytest.approx(2.2028488435792837, rel=1e-12)
    assert runtime(1024, 281, 9, 17, 10e-9).seconds == pytest.approx(3.6930705791385600e7, rel=1e-12)
    assert runtime(2, 1, 1, 4, 1.0).seconds == 2560


def test_runtime_overheads():
    r = runtime(1024, 281, 9, 32, 10e-9, total_modules=10_094_957_772)
    assert r.temporal_overhead == pytest.approx(r.seconds / (32 * 1024**3 * 10e-9))
    assert r.qubit_overhead == pytest.approx(10_094_957_772 / 2048)
    assert SECONDS_PER_YEAR == 31_557_600


@given(L=st.integers(2, 4096), lam=st.integers(1, 400), D=st.sampled_from([5, 9, 15]), d=st.integers(1, 80))
def test_runtime_strictly_increasing(L, lam, D, d):
    base = runtime(L, lam, D, d, 1e-8).seconds
    assert runtime(L + 1, lam, D, d, 1e-8).seconds > base
    assert runtime(L, lam + 1, D, d, 1e-8).seconds > base
    assert runtime(L, lam, D + 1, d, 1e-8).seconds > base
    assert runtime(L, lam, D, d + 1, 1e-8).seconds > base
    assert runtime(L, lam, D, d, 2e-8).seconds > base
