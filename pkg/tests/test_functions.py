import numpy as np
import pytest

from annulus_bounds.errors import DegenerateFunction, EvalAtZero
from annulus_bounds.functions import (
    LaurentFunction,
    add_constant,
    boundary_sup,
    evaluate,
    from_triples,
    invert,
    normalized,
    random_laurent,
    rotate,
    scale,
    to_triples,
)
from annulus_bounds.geometry import make_annulus

RNG = np.random.default_rng(11)


def naive_eval(coeffs, z):
    return sum(c * z**k for k, c in coeffs.items())


def test_evaluate_matches_naive_sum():
    coeffs = {-3: 0.2 - 1j, -1: 1.5, 0: -0.7j, 2: 0.25 + 0.25j}
    f = LaurentFunction(coeffs)
    z = RNG.standard_normal(40) + 1j * RNG.standard_normal(40)
    z = z[np.abs(z) > 0.1]
    got = evaluate(f, z)
    want = naive_eval(coeffs, z)
    assert np.allclose(got, want, rtol=1e-13, atol=1e-13)
    # Scalar call agrees with the vector path.
    assert f(z[0]) == pytest.approx(want[0])


def test_evaluate_at_zero_raises_only_with_negative_exponents():
    with pytest.raises(EvalAtZero):
        LaurentFunction({-1: 1.0})(0.0)
    assert LaurentFunction({0: 2.0, 3: 1.0})(0.0) == pytest.approx(2.0)


def test_exponent_metadata():
    f = LaurentFunction({2: 1.0, -5: 3.0, 0: 0.5})
    assert f.k_min == -5 and f.k_max == 2
    assert f.coeff(2) == 1.0
    assert f.coeff(7) == 0.0


def test_boundary_sup_against_dense_mesh():
    ann = make_annulus(1.9)
    for seed in range(6):
        f = random_laurent(-3, 3, ann, seed=seed)
        sup = boundary_sup(f, ann)
        th = 2 * np.pi * np.arange(20001) / 20001
        brute = max(
            np.abs(evaluate(f, ann.R * np.exp(1j * th))).max(),
            np.abs(evaluate(f, ann.r * np.exp(1j * th))).max(),
        )
        # The refined sup can only exceed a mesh maximum.
        assert sup >= brute - 1e-12
        assert sup <= brute + 1e-6


def test_boundary_sup_known_value():
    # |z + 1/z| on both circles of A_R peaks at R + 1/R.
    ann = make_annulus(2.0)
    f = LaurentFunction({1: 1.0, -1: 1.0})
    assert boundary_sup(f, ann) == pytest.approx(2.5, abs=1e-10)


def test_rotate_scale_invert_add():
    ann = make_annulus(2.0)
    f = LaurentFunction({-2: 1j, 1: 2.0})
    phi = 0.7
    w = np.exp(1j * phi)
    z = 1.3 * np.exp(0.4j)
    assert rotate(f, phi)(z) == pytest.approx(f(w * z))
    assert scale(f, 3.0 - 1j)(z) == pytest.approx((3.0 - 1j) * f(z))
    assert invert(f)(z) == pytest.approx(f(1.0 / z))
    assert add_constant(f, 2.5j)(z) == pytest.approx(f(z) + 2.5j)
    # Inverting swaps the exponent window.
    assert invert(f).k_min == -1 and invert(f).k_max == 2
    del ann


def test_normalized_unit_sup():
    ann = make_annulus(2.0)
    f = LaurentFunction({1: 3.0, 0: -1j})
    g = normalized(f, ann)
    assert boundary_sup(g, ann) == pytest.approx(1.0, abs=1e-12)
    with pytest.raises(DegenerateFunction):
        normalized(LaurentFunction({0: 0.0, 2: 0.0}), ann)


def test_random_laurent_is_seeded_and_normalized():
    ann = make_annulus(1.5)
    f1 = random_laurent(-2, 4, ann, seed=42)
    f2 = random_laurent(-2, 4, ann, seed=42)
    f3 = random_laurent(-2, 4, ann, seed=43)
    assert f1.coeffs == f2.coeffs
    assert f1.coeffs != f3.coeffs
    assert f1.k_min >= -2 and f1.k_max <= 4
    assert boundary_sup(f1, ann) == pytest.approx(1.0, abs=1e-12)


def test_triples_round_trip():
    f = LaurentFunction({-1: 1 - 2j, 3: 0.5})
    triples = to_triples(f)
    assert from_triples(triples).coeffs == f.coeffs
    # Duplicate exponents accumulate.
    g = from_triples([(1, 1.0, 0.0), (1, 0.0, 2.0)])
    assert g.coeff(1) == pytest.approx(1.0 + 2.0j)
