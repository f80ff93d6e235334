import numpy as np
import pytest

from annulus_bounds.bounds import (
    OperatorClass,
    bound_report,
    centering_constant,
    centering_constant_inner,
    k_upper_closed_form,
    k_upper_from_ab,
    min_shift_norm,
    unit_centered_gap,
    verify_conjugate_bounds,
    verify_double_layer_numerical,
    verify_double_layer_quantum,
)
from annulus_bounds.calculus import auto_grid
from annulus_bounds.errors import NegativeInput, NotMember, NotNormalized
from annulus_bounds.functions import LaurentFunction, random_laurent
from annulus_bounds.geometry import make_annulus
from annulus_bounds.membership import sample_numerical, sample_quantum

ANN = make_annulus(2.0)


def test_centering_constants_explicit():
    f = LaurentFunction({0: 2.0 + 3.0j, 1: 1.0})
    assert centering_constant(f, ANN) == pytest.approx((2.0 + 3.0j) * 3.0 / 5.0)
    assert centering_constant_inner(f, ANN) == pytest.approx(2 * (2.0 + 3.0j))
    g = LaurentFunction({1: 5.0})  # no constant term
    assert centering_constant(g, ANN) == 0.0
    assert centering_constant_inner(g, ANN) == 0.0


@pytest.mark.parametrize("R", [1.2, 2.0, 5.0])
def test_unit_centered_gap_closed_form(R):
    ann = make_annulus(R)
    assert unit_centered_gap(ann) == pytest.approx(2.0 / (R * R + 1.0), abs=1e-12)


def test_verify_conjugate_bounds_random():
    for seed in range(8):
        f = random_laurent(-4, 4, ANN, seed=seed)
        check = verify_conjugate_bounds(f, ANN)
        assert check.passed
        assert check.sup_g <= 1.0 + 1e-6
        assert check.sup_centered <= check.bound + 1e-6
        assert check.bound == pytest.approx(0.4)
        assert check.cross_check_error < 1e-8


def test_verify_conjugate_bounds_requires_normalization():
    with pytest.raises(NotNormalized):
        verify_conjugate_bounds(LaurentFunction({1: 3.0}), ANN)


def test_conjugate_bound_sharp_for_constants():
    check = verify_conjugate_bounds(LaurentFunction({0: 1.0}), ANN)
    # The constant function attains the centered bound exactly.
    assert check.sup_centered == pytest.approx(0.4, abs=1e-9)
    assert check.sup_g == pytest.approx(1.0, abs=1e-12)


def test_min_shift_norm_diagonal_cases():
    c, v = min_shift_norm(np.diag([4.0 + 0j, 0.0]))
    assert v == pytest.approx(2.0, abs=1e-7)
    assert c == pytest.approx(2.0 + 0j, abs=1e-6)
    c2, v2 = min_shift_norm(np.diag([2.0 + 0j, -2.0 + 0j]))
    assert v2 == pytest.approx(2.0, abs=1e-8)
    assert abs(c2) < 1e-6


def test_transform_norm_checks():
    Aq = sample_quantum(5, 2.0, 0.1, seed=3)
    An = sample_numerical(5, 2.0, 0.1, seed=3)
    gq = auto_grid(ANN, A=Aq)
    gn = auto_grid(ANN, A=An)
    for seed in range(5):
        f = random_laurent(-3, 3, ANN, seed=seed)
        cq = verify_double_layer_quantum(f, Aq, gq)
        assert cq.passed and cq.norm <= 2.0 + 1e-6
        cn = verify_double_layer_numerical(f, An, gn)
        assert cn.passed and cn.norm <= 4.0 + 1e-6


def test_transform_norm_check_rejects_non_members():
    A = np.array([[0.0, 3.7], [1 / 3.7, 0.0]])  # not a quantum member at R=2
    g = auto_grid(ANN, A=A)
    f = random_laurent(-2, 2, ANN, seed=0)
    with pytest.raises(NotMember):
        verify_double_layer_quantum(f, A, g)
    # ... but it is fine for the numerical check.
    assert verify_double_layer_numerical(f, A, g).passed


def test_k_upper_from_ab():
    assert k_upper_from_ab(0.0, 0.0) == 1.0  # the max(1, .) floor
    assert k_upper_from_ab(1.0, 2.0) == pytest.approx(1.0 + np.sqrt(3.0))
    with pytest.raises(NegativeInput):
        k_upper_from_ab(-0.1, 1.0)
    with pytest.raises(NegativeInput):
        k_upper_from_ab(1.0, -1e-3)


def test_k_upper_closed_form_values():
    assert k_upper_closed_form(2.0, OperatorClass.QUANTUM) == pytest.approx(
        1.0 + np.sqrt(1.4), abs=1e-12
    )
    assert k_upper_closed_form(2.0, "numerical") == pytest.approx(
        2.0 + np.sqrt(4.4), abs=1e-12
    )
    # Large R: both limits, 2 and 4.
    assert k_upper_closed_form(1e6, "quantum") == pytest.approx(2.0, abs=1e-9)
    assert k_upper_closed_form(1e6, "numerical") == pytest.approx(4.0, abs=1e-9)


def test_bound_report_quantum_member():
    A = sample_quantum(4, 2.0, 0.1, seed=11)
    rep = bound_report(LaurentFunction({1: 1.0}), A, 2.0)
    assert rep.class_used == OperatorClass.QUANTUM
    # Conjugate transform of z (sup-normalized) peaks at 1/R^2 on the inner
    # circle, and its best center is 0.
    assert rep.b == pytest.approx(0.25, abs=1e-8)
    assert abs(rep.c2) < 1e-12
    assert rep.gamma == 0.0 and rep.gamma1 == 0.0
    assert 1.0 <= rep.k_upper_eq10 <= rep.k_upper_closed + 1e-8
    assert rep.k_upper_closed == pytest.approx(1.0 + np.sqrt(1.4))


def test_bound_report_numerical_fallback():
    A = np.array([[0.0, 3.7], [1 / 3.7, 0.0]])
    rep = bound_report(LaurentFunction({1: 1.0, -1: 0.3}), A, 2.0)
    assert rep.class_used == OperatorClass.NUMERICAL
    assert rep.k_upper_closed == pytest.approx(2.0 + np.sqrt(4.4))
    assert 1.0 <= rep.k_upper_eq10 <= rep.k_upper_closed + 1e-8
