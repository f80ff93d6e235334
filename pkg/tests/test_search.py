import numpy as np
import pytest

from annulus_bounds.calculus import auto_grid
from annulus_bounds.errors import DegenerateFunction
from annulus_bounds.functions import LaurentFunction
from annulus_bounds.geometry import make_annulus
from annulus_bounds.membership import sample_quantum
from annulus_bounds.search import (
    SCAN_CSV_HEADER,
    gain,
    scan,
    scan_csv,
    search_lower_bound,
)

ANN = make_annulus(2.0)
FLIP = np.array([[0.0, 1.99], [1 / 1.99, 0.0]], dtype=complex)  # FLIP^2 = I


def test_gain_explicit_value():
    # f = z + 1/z sends FLIP to 2*FLIP, and peaks at R + 1/R on the boundary.
    grid = auto_grid(ANN, A=FLIP)
    f = LaurentFunction({1: 1.0, -1: 1.0})
    assert gain(f, FLIP, grid) == pytest.approx(2 * 1.99 / 2.5, abs=1e-10)
    # Constants are never amplified.
    assert gain(LaurentFunction({0: 3.0}), FLIP, grid) == pytest.approx(1.0, abs=1e-12)


def test_gain_rejects_zero_function():
    grid = auto_grid(ANN, A=FLIP)
    with pytest.raises(DegenerateFunction):
        gain(LaurentFunction({1: 0.0}), FLIP, grid)


def test_search_is_deterministic():
    r1 = search_lower_bound(FLIP, ANN, -1, 1, iters=80, restarts=2, seed=9)
    r2 = search_lower_bound(FLIP, ANN, -1, 1, iters=80, restarts=2, seed=9)
    assert r1.k_lower == r2.k_lower
    assert r1.best_f.coeffs == r2.best_f.coeffs
    assert r1.iterations_used == r2.iterations_used
    assert r1.seed == 9


def test_search_meets_known_witness():
    res = search_lower_bound(FLIP, ANN, -2, 2, seed=0)
    assert res.k_lower >= 1.592 - 1e-6
    assert res.best_f.k_min >= -2 and res.best_f.k_max <= 2
    assert res.iterations_used > 0


def test_search_rejects_empty_range():
    with pytest.raises(ValueError):
        search_lower_bound(FLIP, ANN, 2, -2)


def test_search_never_beats_its_own_upper_bound():
    from annulus_bounds.bounds import bound_report

    A = sample_quantum(4, 2.0, 0.1, seed=14)
    res = search_lower_bound(A, ANN, -2, 2, iters=120, restarts=3, seed=14)
    rep = bound_report(res.best_f, A, 2.0)
    # Lower bound from a witness can never exceed the bound computed for it.
    assert res.k_lower <= rep.k_upper_eq10 + 1e-8
    assert res.k_lower <= rep.k_upper_closed + 1e-8


def test_scan_rows_and_csv_determinism():
    args = dict(samples_per_R=2, degree=1, iters=60, restarts=2, seed=5)
    rows = scan("quantum", 3, [1.5, 2.0], **args)
    assert len(rows) == 4
    for row in rows:
        assert row.status == "ok"
        assert row.operator_class == "quantum"
        assert row.k_lower <= row.k_upper_eq10 + 1e-8
        assert row.quantum_margin > 0
    csv1 = scan_csv(rows)
    csv2 = scan_csv(scan("quantum", 3, [1.5, 2.0], **args))
    assert csv1 == csv2
    lines = csv1.strip().split("\n")
    assert lines[0] == SCAN_CSV_HEADER
    assert len(lines) == 5
    assert all(len(line.split(",")) == 12 for line in lines)


def test_scan_numerical_class():
    rows = scan("numerical", 2, [2.0], samples_per_R=1, degree=1, iters=60, restarts=2, seed=3)
    row = rows[0]
    assert row.operator_class == "numerical"
    assert row.numerical_margin > 0
    # The bound side always uses the tightest class the sample belongs to: a
    # numerical-class draw that happens to be a quantum member gets the
    # quantum closed form.
    if row.quantum_margin > 0:
        assert row.k_upper_closed == pytest.approx(1.0 + np.sqrt(1.4))
    else:
        assert row.k_upper_closed == pytest.approx(2.0 + np.sqrt(4.4))


def test_scan_validates_inputs():
    with pytest.raises(ValueError):
        scan("junk", 3, [2.0])
    with pytest.raises(ValueError):
        scan("quantum", 3, [2.0], degree=0)
