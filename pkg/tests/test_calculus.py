import numpy as np
import pytest

from annulus_bounds.calculus import (
    auto_grid,
    cauchy_matrix_function,
    cauchy_point,
    conjugate_transform,
    conjugate_transform_exact,
    conjugate_transform_matrix,
    double_layer_transform,
    double_layer_transform_matrix,
    monomial_transform_stack,
)
from annulus_bounds.errors import PointOutside, SpectrumOutside
from annulus_bounds.functions import LaurentFunction, evaluate, random_laurent
from annulus_bounds.geometry import build_grid, make_annulus
from annulus_bounds.membership import sample_quantum

ANN = make_annulus(2.0)
GRID = build_grid(ANN, 512)
RNG = np.random.default_rng(17)


def interior_points(n):
    rho = RNG.uniform(ANN.r * 1.15, ANN.R * 0.85, n)
    return rho * np.exp(2j * np.pi * RNG.random(n))


def test_cauchy_point_reproduces_laurent_values():
    f = random_laurent(-3, 3, ANN, seed=0)
    for z in interior_points(12):
        assert cauchy_point(f, complex(z), GRID) == pytest.approx(f(complex(z)), abs=1e-10)


def test_cauchy_point_outside_raises():
    f = LaurentFunction({1: 1.0})
    with pytest.raises(PointOutside):
        cauchy_point(f, 2.5 + 0j, GRID)
    with pytest.raises(PointOutside):
        cauchy_point(f, 0.1j, GRID)


def test_cauchy_matrix_function_matches_powers():
    A = sample_quantum(5, ANN.R, 0.1, seed=3)
    for k in range(-3, 4):
        got = cauchy_matrix_function(LaurentFunction({k: 1.0}), A, GRID)
        want = np.linalg.matrix_power(A, k)
        assert np.abs(got - want).max() < 1e-11 * max(1.0, np.linalg.norm(want, 2))


def test_cauchy_matrix_function_is_linear():
    A = sample_quantum(4, ANN.R, 0.1, seed=4)
    f = LaurentFunction({-2: 0.3j, 0: 1.0, 1: -0.5})
    direct = (
        0.3j * np.linalg.matrix_power(A, -2)
        + np.eye(4)
        - 0.5 * A
    )
    assert np.abs(cauchy_matrix_function(f, A, GRID) - direct).max() < 1e-11


def test_spectrum_outside_raises():
    A = np.diag([3.0 + 0j, 1.0])
    with pytest.raises(SpectrumOutside):
        cauchy_matrix_function(LaurentFunction({1: 1.0}), A, GRID)


def test_conjugate_transform_exact_structure():
    R2 = ANN.R * ANN.R
    g = conjugate_transform_exact(LaurentFunction({1: 2.0 + 1j}), ANN)
    # z -> conj(c) R^{-2} z^{-1} for a degree-one monomial.
    assert g.coeff(-1) == pytest.approx((2.0 - 1j) / R2)
    assert g.coeff(0) == 0.0 and g.coeff(1) == 0.0
    g0 = conjugate_transform_exact(LaurentFunction({0: 1.0 - 0.5j}), ANN)
    assert g0.coeff(0) == pytest.approx(1.0 + 0.5j)


def test_conjugate_transform_quadrature_matches_exact():
    f = random_laurent(-4, 4, ANN, seed=8)
    g = conjugate_transform_exact(f, ANN)
    for z in interior_points(10):
        assert conjugate_transform(f, complex(z), GRID) == pytest.approx(
            g(complex(z)), abs=1e-9
        )


def test_conjugate_transform_matrix_matches_exact():
    A = sample_quantum(4, ANN.R, 0.1, seed=12)
    f = random_laurent(-3, 3, ANN, seed=13)
    g = conjugate_transform_exact(f, ANN)
    got = conjugate_transform_matrix(f, A, GRID)
    want = cauchy_matrix_function(g, A, GRID)
    assert np.abs(got - want).max() < 1e-9


def test_double_layer_transform_splits():
    f = random_laurent(-3, 3, ANN, seed=21)
    g = conjugate_transform_exact(f, ANN)
    for z in interior_points(10):
        S = double_layer_transform(f, complex(z), GRID)
        assert S == pytest.approx(f(complex(z)) + np.conj(g(complex(z))), abs=1e-9)


def test_unit_function_maps_to_two():
    one = LaurentFunction({0: 1.0})
    for z in interior_points(20):
        assert double_layer_transform(one, complex(z), GRID) == pytest.approx(2.0, abs=1e-11)
    A = sample_quantum(6, ANN.R, 0.1, seed=30)
    S = double_layer_transform_matrix(one, A, GRID)
    assert np.abs(S - 2 * np.eye(6)).max() < 1e-11


def test_monomial_stack_matches_cauchy_calls():
    A = sample_quantum(4, ANN.R, 0.1, seed=2)
    stack = monomial_transform_stack(GRID, A, -2, 2)
    assert sorted(stack) == [-2, -1, 0, 1, 2]
    for k, M in stack.items():
        direct = cauchy_matrix_function(LaurentFunction({k: 1.0}), A, GRID)
        assert np.abs(M - direct).max() < 1e-13


def test_auto_grid_probes():
    A = sample_quantum(4, ANN.R, 0.1, seed=6)
    g1 = auto_grid(ANN, A=A)
    assert g1.n_per_circle >= 64
    # Converged grid keeps the monomial oracle tight.
    got = cauchy_matrix_function(LaurentFunction({2: 1.0}), A, g1)
    assert np.abs(got - A @ A).max() < 1e-9
    g2 = auto_grid(ANN, z=1.0 + 0.2j)
    assert g2.n_per_circle >= 64
    with pytest.raises(ValueError):
        auto_grid(ANN)


def test_evaluate_on_grid_nodes_consistent():
    # Sanity coupling between the function module and the grids: evaluating
    # on grid nodes equals evaluating on the raw sigma array.
    f = random_laurent(-2, 2, ANN, seed=40)
    vals = evaluate(f, GRID.sigma)
    for j in (0, 17, 700):
        assert vals[j] == pytest.approx(f(complex(GRID.sigma[j])))
