"""Self-verification suites: measured identities and bounds as CSV-able rows.

Each suite runs a seeded ensemble and reports one row per check:
(name, measured value, bound, pass).  Deviation-style checks pass when the
value is at most the bound; eigenvalue floors pass when the value is at least
the bound (the sign of the bound makes the direction unambiguous in the
output).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .bounds import (
    centering_constant_inner,
    min_shift_norm,
    unit_centered_gap,
    verify_conjugate_bounds,
    verify_double_layer_numerical,
    verify_double_layer_quantum,
)
from .calculus import (
    auto_grid,
    cauchy_matrix_function,
    conjugate_transform_exact,
    conjugate_transform_matrix,
    double_layer_transform,
    double_layer_transform_matrix,
)
from .functions import LaurentFunction, random_laurent
from .geometry import build_grid, integrate_matrices, make_annulus
from .kernels import (
    double_layer_kernel,
    double_layer_kernel_matrix,
    factored_kernel_numerical,
    factored_kernel_quantum,
    shifted_kernel_numerical,
    shifted_kernel_quantum,
    shifted_stack_numerical,
    shifted_stack_quantum,
    stack_psd_report,
)
from .membership import op_norm, sample_numerical, sample_quantum

SUITES = ("kernels", "lemma", "sbound", "all")


@dataclass(frozen=True)
class VerifyRow:
    name: str
    value: float
    bound: float
    passed: bool


def _row_max(name: str, value: float, bound: float) -> VerifyRow:
    """Deviation-style row: passes when value <= bound."""
    return VerifyRow(name, float(value), float(bound), bool(value <= bound))


def _row_min(name: str, value: float, bound: float) -> VerifyRow:
    """Floor-style row: passes when value >= bound."""
    return VerifyRow(name, float(value), float(bound), bool(value >= bound))


def _kernel_suite(R: float, dim: int, samples: int, seed: int, tol: float) -> list[VerifyRow]:
    annulus = make_annulus(R)
    grid = build_grid(annulus, 512)
    rng = np.random.default_rng(seed)
    rows: list[VerifyRow] = []

    # Scalar/matrix agreement on 1x1 matrices, and S(1, z) = 2, over random
    # interior points.
    z_pts = []
    while len(z_pts) < max(4, samples):
        z = rng.uniform(-R, R) + 1j * rng.uniform(-R, R)
        if annulus.contains(z, 0.05 * (R - 1.0)):
            z_pts.append(z)
    dev_scalar = 0.0
    dev_winding = 0.0
    one = LaurentFunction({0: 1.0})
    for z in z_pts:
        for j in (0, len(grid) // 3, len(grid) - 1):
            s = grid.sample(j)
            m = double_layer_kernel_matrix(s, np.array([[z]]))
            dev_scalar = max(dev_scalar, abs(m[0, 0] - double_layer_kernel(s, z)))
        dev_winding = max(dev_winding, abs(double_layer_transform(one, z, grid) - 2.0))
    rows.append(_row_max("kernel_matrix_scalar_agreement", dev_scalar, 1e-12))
    rows.append(_row_max("kernel_winding_integral", dev_winding, 1e-8))

    # Factored forms vs direct kernels and PSD floors, per class.
    dev_q = dev_n = 0.0
    min_eig_q = min_eig_n = np.inf
    asym = 0.0
    for j in range(samples):
        Aq = sample_quantum(dim, R, min(0.1, (R - 1) / 2), seed=seed + 100 + j)
        An = sample_numerical(dim, R, min(0.1, (R - 1) / 2), seed=seed + 200 + j)
        for idx in (0, len(grid) // 4, len(grid) // 2, len(grid) - 7):
            s = grid.sample(idx)
            nu_q = shifted_kernel_quantum(s, Aq)
            dev_q = max(dev_q, np.abs(nu_q - factored_kernel_quantum(s, Aq)).max())
            nu_n = shifted_kernel_numerical(s, An)
            dev_n = max(dev_n, np.abs(nu_n - factored_kernel_numerical(s, An)).max())
            if s.circle.value == "inner":
                dev_q = max(
                    dev_q, np.abs(nu_q - factored_kernel_quantum(s, Aq, inverse_form=True)).max()
                )
                dev_n = max(
                    dev_n,
                    np.abs(nu_n - factored_kernel_numerical(s, An, inverse_form=True)).max(),
                )
        rep_q = stack_psd_report(shifted_stack_quantum(grid, Aq), tol)
        rep_n = stack_psd_report(shifted_stack_numerical(grid, An), tol)
        min_eig_q = min(min_eig_q, rep_q.min_eigenvalue)
        min_eig_n = min(min_eig_n, rep_n.min_eigenvalue)
        asym = max(asym, rep_q.asymmetry, rep_n.asymmetry)
    rows.append(_row_max("kernel_factored_agreement_quantum", dev_q, 1e-10))
    rows.append(_row_max("kernel_factored_agreement_numerical", dev_n, 1e-10))
    rows.append(_row_min("kernel_psd_min_eig_quantum", min_eig_q, -1e-9))
    rows.append(_row_min("kernel_psd_min_eig_numerical", min_eig_n, -1e-9))
    rows.append(_row_max("kernel_asymmetry", asym, 1e-10))

    # Kernel mass: integral nu_q = 2I, integral nu_n = 4I.
    Aq = sample_quantum(dim, R, min(0.1, (R - 1) / 2), seed=seed + 11)
    An = sample_numerical(dim, R, min(0.1, (R - 1) / 2), seed=seed + 12)
    eye = np.eye(dim)
    dev2 = np.abs(integrate_matrices(grid, shifted_stack_quantum(grid, Aq)) - 2 * eye).max()
    dev4 = np.abs(integrate_matrices(grid, shifted_stack_numerical(grid, An)) - 4 * eye).max()
    rows.append(_row_max("kernel_mass_quantum", dev2, 1e-8))
    rows.append(_row_max("kernel_mass_numerical", dev4, 1e-8))

    # Contour calculus reproduces matrix powers, and sends 1 to 2I.
    gq = auto_grid(annulus, A=Aq)
    dev_pow = 0.0
    for k in range(-3, 4):
        direct = np.linalg.matrix_power(Aq, k)
        via = cauchy_matrix_function(LaurentFunction({k: 1.0}), Aq, gq)
        dev_pow = max(dev_pow, np.abs(via - direct).max() / max(1.0, op_norm(direct)))
    rows.append(_row_max("cauchy_monomial_error", dev_pow, 1e-9))
    dev_unit = np.abs(double_layer_transform_matrix(one, Aq, gq) - 2 * eye).max()
    rows.append(_row_max("transform_unit_matrix", dev_unit, 1e-9))
    return rows


def _lemma_suite(R: float, dim: int, samples: int, seed: int, tol: float) -> list[VerifyRow]:
    del dim  # scalar-function suite
    annulus = make_annulus(R)
    grid = auto_grid(annulus, z=complex(np.exp(0.37j)))
    rows: list[VerifyRow] = []
    worst_g = 0.0
    worst_centered = -np.inf
    worst_cross = 0.0
    bound = 2.0 / (R * R + 1.0)
    for j in range(samples):
        f = random_laurent(-4, 4, annulus, seed=seed + j)
        check = verify_conjugate_bounds(f, annulus, grid=grid, tol=tol)
        worst_g = max(worst_g, check.sup_g)
        worst_centered = max(worst_centered, check.sup_centered)
        worst_cross = max(worst_cross, check.cross_check_error)
    rows.append(_row_max("lemma_sup_g", worst_g, 1.0 + tol))
    rows.append(_row_max("lemma_sup_centered", worst_centered, bound + tol))
    rows.append(_row_max("lemma_cross_check", worst_cross, 1e-8))

    # Split identity at scalar points: S(f, z) = f(z) + conj(g(z)).  Points
    # range over most of the annulus, so use a dense fixed grid rather than
    # the mid-annulus auto grid.
    rng = np.random.default_rng(seed + 3000)
    split_grid = build_grid(annulus, 512)
    dev_split = 0.0
    for j in range(min(samples, 8)):
        f = random_laurent(-3, 3, annulus, seed=seed + 3100 + j)
        g = conjugate_transform_exact(f, annulus)
        rho = rng.uniform(annulus.r * 1.1, annulus.R * 0.9)
        z = rho * np.exp(2j * np.pi * rng.random())
        S = double_layer_transform(f, complex(z), split_grid)
        dev_split = max(dev_split, abs(S - f(complex(z)) - np.conj(g(complex(z)))))
    rows.append(_row_max("lemma_split_identity", dev_split, 1e-8))

    # Sharpness: the constant function attains the centered bound exactly,
    # and its centered gap has an explicit integral form equal to the bound.
    sharp = verify_conjugate_bounds(LaurentFunction({0: 1.0}), annulus, grid=grid, tol=tol)
    rows.append(_row_max("lemma_sharpness_gap", abs(sharp.sup_centered - bound), 1e-9))
    rows.append(_row_max("lemma_unit_gap_identity", abs(unit_centered_gap(annulus) - bound), 1e-10))
    return rows


def _sbound_suite(R: float, dim: int, samples: int, seed: int, tol: float) -> list[VerifyRow]:
    annulus = make_annulus(R)
    margin = min(0.1, (R - 1) / 2)
    rows: list[VerifyRow] = []
    worst_q = 0.0
    worst_n = 0.0
    worst_split = 0.0
    worst_center_id = 0.0
    for j in range(samples):
        f = random_laurent(-3, 3, annulus, seed=seed + 500 + j)
        Aq = sample_quantum(dim, R, margin, seed=seed + 700 + j)
        An = sample_numerical(dim, R, margin, seed=seed + 900 + j)
        grid_q = auto_grid(annulus, A=Aq)
        grid_n = auto_grid(annulus, A=An)
        worst_q = max(worst_q, verify_double_layer_quantum(f, Aq, grid_q, tol=tol).norm)
        worst_n = max(worst_n, verify_double_layer_numerical(f, An, grid_n, tol=tol).norm)

        # S(f, A) = f(A) + g(A)^* (both sides by quadrature).
        S = double_layer_transform_matrix(f, An, grid_n)
        split = cauchy_matrix_function(f, An, grid_n) + conjugate_transform_matrix(
            f, An, grid_n
        ).conj().T
        worst_split = max(worst_split, float(np.abs(S - split).max()))

        # The numerical-class kernel integrates f to S + gamma1 I.
        fv = f(grid_n.sigma)
        nu = shifted_stack_numerical(grid_n, An)
        lhs = integrate_matrices(grid_n, fv[:, None, None] * nu)
        g1 = centering_constant_inner(f, annulus)
        worst_center_id = max(
            worst_center_id, float(np.abs(lhs - (S + g1 * np.eye(dim))).max())
        )
    rows.append(_row_max("sbound_quantum_norm", worst_q, 2.0 + tol))
    rows.append(_row_max("sbound_numerical_min_shift_norm", worst_n, 4.0 + tol))
    rows.append(_row_max("sbound_split_identity", worst_split, 1e-8))
    rows.append(_row_max("sbound_centered_integral_identity", worst_center_id, 1e-8))

    # min_shift_norm sanity: never worse than the unshifted norm.
    f = random_laurent(-2, 2, annulus, seed=seed + 1)
    A = sample_quantum(dim, R, margin, seed=seed + 2)
    S = double_layer_transform_matrix(f, A, auto_grid(annulus, A=A))
    _, best = min_shift_norm(S)
    rows.append(_row_max("sbound_min_shift_le_plain", best - op_norm(S), 1e-12))
    return rows


def run_suite(
    suite: str,
    R: float = 2.0,
    dim: int = 6,
    samples: int = 20,
    seed: int = 7,
    tol: float = 1e-6,
) -> list[VerifyRow]:
    """Run one named suite ("kernels", "lemma", "sbound") or "all"."""
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {SUITES}")
    rows: list[VerifyRow] = []
    if suite in ("kernels", "all"):
        rows += _kernel_suite(R, dim, samples, seed, tol)
    if suite in ("lemma", "all"):
        rows += _lemma_suite(R, dim, samples, seed, tol)
    if suite in ("sbound", "all"):
        rows += _sbound_suite(R, dim, samples, seed, tol)
    return rows


def rows_to_csv(rows: Iterable[VerifyRow]) -> str:
    """Render verify rows as CSV with a fixed header and %.12g floats."""
    lines = ["name,value,bound,pass"]
    for row in rows:
        lines.append(
            f"{row.name},{row.value:.12g},{row.bound:.12g},{'true' if row.passed else 'false'}"
        )
    return "\n".join(lines) + "\n"
