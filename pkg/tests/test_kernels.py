import numpy as np
import pytest

from annulus_bounds.errors import OnBoundary, ResolventSingular, SingularMatrix
from annulus_bounds.geometry import Circle, boundary_sample, build_grid, integrate, integrate_matrices, make_annulus
from annulus_bounds.kernels import (
    double_layer_kernel,
    double_layer_kernel_matrix,
    factored_kernel_numerical,
    factored_kernel_quantum,
    kernel_stack,
    psd_check,
    resolvent_stack,
    shifted_kernel_numerical,
    shifted_kernel_quantum,
    shifted_stack_numerical,
    shifted_stack_quantum,
    stack_psd_report,
)
from annulus_bounds.membership import sample_numerical, sample_quantum

R = 2.0
ANN = make_annulus(R)
GRID = build_grid(ANN, 256)


def closed_form_outer_at_r(theta):
    # Kernel on the outer circle evaluated at z = r, directly from the
    # Poisson-type formula.
    den = R**4 - 2 * R * R * np.cos(theta) + 1.0
    return (R / np.pi) * (R * R - np.cos(theta)) / den


def test_scalar_kernel_closed_forms_at_inner_radius():
    z = ANN.r
    for theta in (0.3, 1.1, 2.0, 4.4):
        outer = boundary_sample(ANN, Circle.OUTER, theta)
        assert double_layer_kernel(outer, z) == pytest.approx(
            closed_form_outer_at_r(theta), abs=1e-14
        )
        inner = boundary_sample(ANN, Circle.INNER, theta)
        # Constant along the inner circle (away from the node at theta=0).
        assert double_layer_kernel(inner, z) == pytest.approx(-R / (2 * np.pi), abs=1e-14)


def test_kernel_mass_is_two():
    for z in (1.0, -0.8 + 0.9j, 1.4j):
        vals = np.array([double_layer_kernel(GRID.sample(j), z) for j in range(len(GRID))])
        assert integrate(GRID, vals) == pytest.approx(2.0, abs=1e-10)


def test_on_boundary_raises():
    s = GRID.sample(3)
    with pytest.raises(OnBoundary):
        double_layer_kernel(s, complex(s.sigma))


def test_matrix_kernel_is_hermitian_and_matches_scalar():
    rng = np.random.default_rng(2)
    A = sample_quantum(5, R, 0.1, seed=9)
    for j in (1, 100, 300, 500):
        s = GRID.sample(j)
        M = double_layer_kernel_matrix(s, A)
        assert np.abs(M - M.conj().T).max() < 1e-14
        z = complex(rng.uniform(0.7, 1.6) * np.exp(2j * np.pi * rng.random()))
        assert double_layer_kernel_matrix(s, np.array([[z]]))[0, 0] == pytest.approx(
            double_layer_kernel(s, z), abs=1e-13
        )


def test_resolvent_singular_on_spectrum():
    A = np.diag([2.0 + 0j, 0.9])  # eigenvalue sits exactly on the outer circle
    s = boundary_sample(ANN, Circle.OUTER, 0.0)
    with pytest.raises(ResolventSingular):
        double_layer_kernel_matrix(s, A)


def test_singular_matrix_rejected_by_shifted_kernels():
    A = np.zeros((3, 3), dtype=complex)
    s = boundary_sample(ANN, Circle.OUTER, 0.5)
    with pytest.raises(SingularMatrix):
        shifted_kernel_numerical(s, A)


@pytest.mark.parametrize("seed", [0, 1, 2])
def test_factored_forms_match_direct(seed):
    Aq = sample_quantum(4, R, 0.1, seed=seed)
    An = sample_numerical(4, R, 0.1, seed=seed)
    for j in (0, 64, 256, 400):
        s = GRID.sample(j)
        nq = shifted_kernel_quantum(s, Aq)
        nn = shifted_kernel_numerical(s, An)
        assert np.abs(nq - factored_kernel_quantum(s, Aq)).max() < 1e-12
        assert np.abs(nn - factored_kernel_numerical(s, An)).max() < 1e-12
        if s.circle == Circle.INNER:
            assert np.abs(nq - factored_kernel_quantum(s, Aq, inverse_form=True)).max() < 1e-12
            assert np.abs(nn - factored_kernel_numerical(s, An, inverse_form=True)).max() < 1e-12
        else:
            with pytest.raises(ValueError):
                factored_kernel_quantum(s, Aq, inverse_form=True)


def test_shifted_stacks_are_psd_for_members():
    Aq = sample_quantum(6, R, 0.1, seed=5)
    An = sample_numerical(6, R, 0.1, seed=5)
    rep_q = stack_psd_report(shifted_stack_quantum(GRID, Aq))
    rep_n = stack_psd_report(shifted_stack_numerical(GRID, An))
    assert rep_q.passed and rep_q.min_eigenvalue > -1e-9
    assert rep_n.passed and rep_n.min_eigenvalue > -1e-9
    assert rep_q.asymmetry < 1e-12 and rep_n.asymmetry < 1e-12


def test_quantum_stack_not_psd_outside_class():
    # ||A|| = 3.7 > R, so the quantum kernel must lose positivity even though
    # the spectrum (eigenvalues +-1) is well inside the ring.
    A = np.array([[0.0, 3.7], [1 / 3.7, 0.0]], dtype=complex)
    rep = stack_psd_report(shifted_stack_quantum(GRID, A))
    assert rep.min_eigenvalue < -1e-6
    assert not rep.passed


def test_stack_mass_identities():
    Aq = sample_quantum(4, R, 0.1, seed=21)
    An = sample_numerical(4, R, 0.1, seed=21)
    eye = np.eye(4)
    mass_q = integrate_matrices(GRID, shifted_stack_quantum(GRID, Aq))
    mass_n = integrate_matrices(GRID, shifted_stack_numerical(GRID, An))
    assert np.abs(mass_q - 2 * eye).max() < 1e-10
    assert np.abs(mass_n - 4 * eye).max() < 1e-10


def test_stacks_match_per_node_calls():
    A = sample_quantum(3, R, 0.1, seed=1)
    ks = kernel_stack(GRID, A)
    rs = resolvent_stack(GRID, A)
    assert ks.shape == (len(GRID), 3, 3)
    assert rs.shape == (len(GRID), 3, 3)
    for j in (2, 77, 311):
        s = GRID.sample(j)
        assert np.abs(ks[j] - double_layer_kernel_matrix(s, A)).max() < 1e-13
        assert np.abs(rs[j] - np.linalg.inv(s.sigma * np.eye(3) - A)).max() < 1e-11


def test_psd_check_reports_negative_direction():
    H = np.diag([1.0, -0.5])
    rep = psd_check(H)
    assert not rep.passed
    assert rep.min_eigenvalue == pytest.approx(-0.5)
    ok = psd_check(np.eye(3))
    assert ok.passed and ok.min_eigenvalue == pytest.approx(1.0)
