import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from clusterfactor.model import (
    AboveThresholdError,
    CodeDistance,
    DegenerateError,
    ErrorBudget,
    HardwareProfile,
    PhysicalConstants,
    ProblemInstance,
    closed_form_distance,
    gate_failure,
    logical_cell_failure,
    required_distance,
    target_gate_error,
)
from oracles import brute_distance

K = PhysicalConstants()


def test_defaults():
    assert (K.p_th, K.C1, K.C2) == (0.0062, 0.13, 0.61)
    hw = HardwareProfile()
    assert (hw.T, hw.M, hw.c_f) == (10e-9, 0.010, 2.0e8)


@pytest.mark.parametrize("kwargs", [dict(p_th=0), dict(p_th=1), dict(C1=0), dict(C2=-1)])
def test_constants_validated(kwargs):
    with pytest.raises(ValueError):
        PhysicalConstants(**kwargs)


def test_domain_types_validated():
    with pytest.raises(ValueError):
        ProblemInstance(1, 1e-3)
    with pytest.raises(ValueError):
        ProblemInstance(8, 1.0)
    with pytest.raises(ValueError):
        CodeDistance(0)
    with pytest.raises(ValueError):
        ErrorBudget(1.0)
    with pytest.raises(ValueError):
        HardwareProfile(T=0)


@pytest.mark.parametrize(
    "L, expected",
    [(2, 1 / 10240), (1024, 1.4210854715202004e-15), (768, 4.491331860607053e-15)],
)
def test_target_gate_error(L, expected):
    assert target_gate_error(L).delta_gate == pytest.approx(expected, rel=1e-12)


def test_target_gate_error_rejects_small_L():
    with pytest.raises(ValueError):
        target_gate_error(1)


def test_logical_cell_failure_examples():
    assert logical_cell_failure(32, 6.2e-4) == pytest.approx(4.777720201362871e-21, rel=1e-12)
    p = 1e-3
    assert logical_cell_failure(1, p) == pytest.approx(0.13 * 0.61 * p / 0.0062)
    near = K.p_max * (1 - 1e-12)
    assert logical_cell_failure(40, near) == pytest.approx(0.13, rel=1e-9)


def test_logical_cell_failure_guards():
    with pytest.raises(AboveThresholdError):
        logical_cell_failure(5, K.p_max)
    with pytest.raises(ValueError):
        logical_cell_failure(5, -1e-3)


def test_gate_failure_examples():
    assert gate_failure(0.0, 281, 1386) == 0.0
    assert gate_failure(3e-4, 1, 1) == pytest.approx(3e-4, rel=1e-12)
    # mpmath: 1 - (1 - 1e-6)^389466
    assert gate_failure(1e-6, 281, 1386) == pytest.approx(0.32258161249606863, rel=1e-12)


@pytest.mark.parametrize("p, expected", [(6.2e-4, 33), (6.2e-5, 17)])
def test_required_distance_headline(p, expected):
    assert brute_distance(1024, 281, 1386, p) == expected
    assert required_distance(1024, 281, 1386, p).d == expected


def test_closed_form_lands_one_short_at_headline():
    # continuous-exponent formula gives 32, but floor((32+1)/2) = 16 misses the budget
    assert closed_form_distance(1024, 281, 1386, 6.2e-4) == 32
    assert gate_failure(logical_cell_failure(32, 6.2e-4), 281, 1386) > target_gate_error(1024).delta_gate


def test_required_distance_small_p_clamps():
    assert required_distance(1024, 281, 1386, 1e-300).d == 1
    assert required_distance(1024, 281, 1386, 0.0).d == 1


def test_required_distance_errors():
    with pytest.raises(AboveThresholdError):
        required_distance(64, 100, 210, 0.0102)
    with pytest.raises(DegenerateError):
        required_distance(2, 1, 1, 1e-3, PhysicalConstants(C1=1e-5))


def test_closed_form_vs_oracle_random_grid():
    rng = random.Random(20240601)
    for _ in range(100):
        L = rng.randint(4, 4096)
        p = 10 ** rng.uniform(-6, math.log10(K.p_th / 2))
        Lam, V = 281, 1386
        closed = closed_form_distance(L, Lam, V, p)
        oracle = brute_distance(L, Lam, V, p)
        assert abs(closed - oracle) <= 1
        assert required_distance(L, Lam, V, p).d == oracle


ps = st.floats(min_value=1e-7, max_value=9e-3)
Ls = st.integers(min_value=2, max_value=1 << 16)


@settings(max_examples=200, deadline=None)
@given(L=Ls, p=ps, lam=st.integers(1, 500), v=st.sampled_from([210, 1386, 10000]))
def test_budget_soundness(L, p, lam, v):
    d = required_distance(L, lam, v, p)
    assert gate_failure(logical_cell_failure(d, p), lam, v) <= target_gate_error(L).delta_gate
    if d.d > 1:
        # minimality: one step down breaks the budget or stays above the closed form's start
        smaller = gate_failure(logical_cell_failure(d.d - 1, p), lam, v)
        assert smaller > target_gate_error(L).delta_gate or d.d == closed_form_distance(L, lam, v, p)


@settings(max_examples=200, deadline=None)
@given(L=Ls, p=ps, lam=st.integers(1, 500))
def test_required_distance_monotone(L, p, lam):
    d = required_distance(L, lam, 1386, p).d
    assert required_distance(L + 1, lam, 1386, p).d >= d
    assert required_distance(L, lam + 1, 1386, p).d >= d
    assert required_distance(L, lam, 10000, p).d >= d
    assert required_distance(L, lam, 1386, min(p * 1.1, 0.0101)).d >= d


@given(p=st.floats(1e-8, 0.01), d=st.integers(1, 60))
def test_cell_failure_monotone(p, d):
    f = logical_cell_failure(d, p)
    assert logical_cell_failure(d, p * 1.01) > f
    assert logical_cell_failure(d + 2, p) < f
