from fractions import Fraction
from math import exp, factorial

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from rexosc.algebra import Poly, RationalFunction
from rexosc.combinatorics import EMPTY, MayaDiagram, Partition, maya_from_index_set, partitions_up_to
from rexosc.errors import DomainError
from rexosc.coherent import (
    Grid,
    annihilator_eigen_residual,
    bound_state_coefficient,
    canonical_coherent,
    classical_checks,
    coefficient_defect,
    coherent_csv,
    coherent_eval,
    generating_eval,
    generating_series,
    prefactor,
    series_eigen_defect,
    series_pde_defect,
    tdse_residual,
)

L22 = Partition((2, 2))
M23 = maya_from_index_set({2, 3})


def test_prefactor_of_worked_example():
    d = Poly([3, 0, 0, 0, 4])
    pre = prefactor(L22)
    assert set(pre.terms) == {-2, -1, 0}
    assert pre.terms[0] == RationalFunction(Poly([1]))
    assert pre.terms[-1] == RationalFunction(Poly([0, 0, 0, -16]), d)
    assert pre.terms[-2] == RationalFunction(Poly([12, 0, 24]), d)


def test_prefactor_of_empty_partition_is_one():
    assert prefactor(EMPTY).terms == {0: RationalFunction(Poly([1]))}


def test_bound_state_coefficients():
    Z = MayaDiagram.trivial()
    for n in range(8):
        assert bound_state_coefficient(Z, n) == Fraction(1, 2 ** n * factorial(n))
    assert bound_state_coefficient(M23, 0) == 24
    with pytest.raises(DomainError):
        bound_state_coefficient(M23, 2)
    with pytest.raises(DomainError):
        bound_state_coefficient(M23, -1)


def test_truncation_below_bound_rejected():
    with pytest.raises(DomainError):
        generating_series(L22, 3)


def test_series_json_shape():
    data = generating_series(L22, 6).to_json()
    assert data["partition"] == [2, 2]
    assert set(data["prefactor"]) == {"-2", "-1", "0"}


@pytest.mark.parametrize("lam", list(partitions_up_to(4)))
def test_series_identities_small(lam):
    M = MayaDiagram(lam, 0)
    assert series_pde_defect(M, 8) == []
    assert coefficient_defect(M, 8) == []
    qc = lam.first + lam.length
    for q in range(max(qc, 1), max(qc, 1) + 3):
        assert series_eigen_defect(M, q, 8) == []


def test_pde_needs_doubled_euler_operator():
    # with z d/dz instead of 2 z d/dz only the z^0 coefficient survives
    assert series_pde_defect(MayaDiagram.trivial(), 6, factor=1) == [1, 2, 3, 4, 5, 6]


def test_series_identities_with_translated_diagram():
    assert series_pde_defect(M23, 8) == []
    assert series_eigen_defect(M23, 4, 8) == []
    assert coefficient_defect(M23, 8) == []


def test_series_eigen_rejects_non_critical_degree():
    with pytest.raises(DomainError):
        series_eigen_defect(M23, 3, 8)


def test_classical_reductions():
    assert classical_checks(12) == {"lowering": True, "raising": True, "energy": True}


# -- numerics -------------------------------------------------------------------


def test_worked_example_value_at_origin():
    assert abs(coherent_eval(L22, 1, 0.0, 0.0) - 5 * exp(-0.25)) < 1e-14


@given(st.floats(-3, 3), st.floats(0.1, 2), st.floats(0, 2 * np.pi))
def test_time_zero_is_generating_function(x, r, angle):
    alpha = r * np.exp(1j * angle)
    v = coherent_eval(L22, alpha, x, 0.0)
    assert abs(v - generating_eval(L22, x, alpha)) <= 1e-12 * max(1.0, abs(v))


def test_canonical_reduction_at_random_points():
    rng = np.random.default_rng(7)
    x = rng.uniform(-4, 4, 1000)
    t = rng.uniform(0, 2 * np.pi, 1000)
    alpha = rng.uniform(-2, 2, 1000) + 1j * rng.uniform(-2, 2, 1000)
    diff = np.abs(coherent_eval(EMPTY, alpha, x, t) - canonical_coherent(x, t, alpha))
    assert diff.max() < 1e-12


def test_tdse_residuals():
    assert tdse_residual(EMPTY, 1) < 1e-6
    assert tdse_residual(L22, 1) < 1e-6
    assert tdse_residual(EMPTY, 0) < 1e-10


def test_tdse_residual_small_grid():
    assert tdse_residual(Partition((1,)), 0.5, Grid(-3, 3, 30, 0, 0.5, 41)) < 1e-5


def test_annihilator_eigen_residuals():
    rng = np.random.default_rng(11)
    samples = np.column_stack([rng.uniform(-4, 4, 100), rng.uniform(0, 2 * np.pi, 100)])
    assert annihilator_eigen_residual(EMPTY, 1, 0.7 + 0.2j, samples) < 1e-10
    assert annihilator_eigen_residual(L22, 4, 1, samples) < 1e-8


def test_numeric_errors():
    with pytest.raises(DomainError):
        coherent_eval(L22, 0, 0.0, 0.0)
    with pytest.raises(DomainError):
        annihilator_eigen_residual(L22, 3, 1, [(0.0, 0.0)])
    with pytest.raises(DomainError):
        Grid(n_x=4)
    with pytest.raises(DomainError):
        # H for the partition (1) is 2x, so x = 0 is a pole
        coherent_eval(Partition((1,)), 1, 0.0, 0.0)


def test_csv_header_and_rows():
    text = coherent_csv(EMPTY, 1, Grid(-1, 1, 8, 0, 1, 8))
    lines = text.splitlines()
    assert lines[0] == "x,t,re,im,abs2"
    assert len(lines) == 1 + 64
