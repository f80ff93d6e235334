"""Boundary-integral calculus: Cauchy, conjugate-Cauchy and double layer
transforms of Laurent polynomials, scalar and matrix versions.

For f analytic on the closed annulus and z (or a matrix A with spectrum)
strictly inside, the three transforms are

    f(z)  = (1/2 pi i) * integral f(sigma) (sigma - z)^{-1} dsigma
    g(z)  = (1/2 pi i) * integral conj(f(sigma)) (sigma - z)^{-1} dsigma
    S(f, z) = integral f(sigma) mu(sigma, z) ds(sigma)

with dsigma = sigma'(s) ds, so a single boundary grid serves all three.  They
are linked pointwise by ``S(f, z) = f(z) + conj(g(z))`` (matrix version:
``S(f, A) = f(A) + g(A)^*``), which the verification suite exercises.

The conjugate transform of a Laurent polynomial is itself a Laurent
polynomial with an exact closed form: conjugating ``z^k`` on the circle
``|z| = rho`` gives ``rho^{2k} z^{-k}``, and combining the two boundary
circles leaves

    g = conj(c_0) + sum_{k != 0} conj(c_k) R^{-2|k|} z^{-k}.

:func:`conjugate_transform_exact` builds that closed form; the quadrature
versions exist to validate it and to serve matrix arguments.
"""

from __future__ import annotations

import numpy as np

from .errors import PointOutside, SpectrumOutside
from .functions import LaurentFunction, evaluate
from .geometry import Annulus, QuadratureGrid, converge_grid, integrate_matrices
from .kernels import kernel_stack, resolvent_stack
from .membership import spectrum_inside

_TWO_PI_I = 2j * np.pi

#: Radial cushion required of evaluation points and spectra.
INTERIOR_MARGIN = 1e-8


def _check_point(z: complex, annulus: Annulus) -> complex:
    z = complex(z)
    if not annulus.contains(z, INTERIOR_MARGIN):
        raise PointOutside(f"point {z!r} is not strictly inside the annulus (R={annulus.R:g})")
    return z


def _check_spectrum(A, annulus: Annulus) -> np.ndarray:
    A = np.asarray(A, dtype=complex)
    if not spectrum_inside(A, annulus, INTERIOR_MARGIN):
        raise SpectrumOutside(f"spectrum not strictly inside the annulus (R={annulus.R:g})")
    return A


def cauchy_point(f: LaurentFunction, z: complex, grid: QuadratureGrid) -> complex:
    """Cauchy reproduction of f at an interior point (sanity transform)."""
    z = _check_point(z, grid.annulus)
    fv = evaluate(f, grid.sigma)
    vals = fv * grid.dsigma / (grid.sigma - z)
    return complex(np.dot(grid.weights, vals) / _TWO_PI_I)


def cauchy_matrix_function(f: LaurentFunction, A, grid: QuadratureGrid) -> np.ndarray:
    """f(A) via the Cauchy integral over the annulus boundary.

    Agrees with the power-sum definition ``sum c_k A^k`` to quadrature
    accuracy; the integral form is what generalizes to the shifted kernels.

    Raises
    ------
    SpectrumOutside
        If an eigenvalue of A is not strictly inside the annulus.
    """
    A = _check_spectrum(A, grid.annulus)
    res = resolvent_stack(grid, A)
    fv = evaluate(f, grid.sigma) * grid.dsigma
    stack = fv[:, None, None] * res
    return integrate_matrices(grid, stack) / _TWO_PI_I


def conjugate_transform(f: LaurentFunction, z: complex, grid: QuadratureGrid) -> complex:
    """g(z): Cauchy integral of the boundary-conjugated function."""
    z = _check_point(z, grid.annulus)
    gv = np.conj(evaluate(f, grid.sigma))
    vals = gv * grid.dsigma / (grid.sigma - z)
    return complex(np.dot(grid.weights, vals) / _TWO_PI_I)


def conjugate_transform_matrix(f: LaurentFunction, A, grid: QuadratureGrid) -> np.ndarray:
    """g(A) via the Cauchy integral (same contract as cauchy_matrix_function)."""
    A = _check_spectrum(A, grid.annulus)
    res = resolvent_stack(grid, A)
    gv = np.conj(evaluate(f, grid.sigma)) * grid.dsigma
    stack = gv[:, None, None] * res
    return integrate_matrices(grid, stack) / _TWO_PI_I


def conjugate_transform_exact(f: LaurentFunction, annulus: Annulus) -> LaurentFunction:
    """Closed form of the conjugate transform g of a Laurent polynomial.

    ``g = conj(c_0) + sum_{k != 0} conj(c_k) R^{-2|k|} z^{-k}``; exact, no
    quadrature involved.
    """
    R = annulus.R
    coeffs: dict[int, complex] = {0: np.conj(f.coeff(0))}
    for k, c in f.coeffs.items():
        if k == 0:
            continue
        coeffs[-k] = coeffs.get(-k, 0.0 + 0.0j) + np.conj(c) * R ** (-2 * abs(k))
    return LaurentFunction(coeffs)


def double_layer_transform(f: LaurentFunction, z: complex, grid: QuadratureGrid) -> complex:
    """S(f, z) = integral of f against the double layer kernel.

    Satisfies S(1, z) = 2 and S(f, z) = f(z) + conj(g(z)).
    """
    z = _check_point(z, grid.annulus)
    u = grid.dsigma / (grid.sigma - z)
    mu = np.imag(u) / np.pi
    fv = evaluate(f, grid.sigma)
    return complex(np.dot(grid.weights, fv * mu))


def double_layer_transform_matrix(f: LaurentFunction, A, grid: QuadratureGrid) -> np.ndarray:
    """S(f, A): matrix double layer transform, equal to f(A) + g(A)^*."""
    A = _check_spectrum(A, grid.annulus)
    mu = kernel_stack(grid, A)
    fv = evaluate(f, grid.sigma)
    return integrate_matrices(grid, fv[:, None, None] * mu)


def monomial_transform_stack(
    grid: QuadratureGrid, A, k_min: int, k_max: int
) -> dict[int, np.ndarray]:
    """Cauchy transforms of all monomials z^k, k_min <= k <= k_max, at once.

    One resolvent stack is factored out so the search loop can evaluate
    ``f(A)`` for any coefficient vector as a small linear combination.
    """
    A = _check_spectrum(A, grid.annulus)
    res = resolvent_stack(grid, A)
    wdsig = grid.weights * grid.dsigma / _TWO_PI_I
    out: dict[int, np.ndarray] = {}
    for k in range(int(k_min), int(k_max) + 1):
        fv = wdsig * grid.sigma**k
        out[k] = np.tensordot(fv, res, axes=(0, 0))
    return out


def auto_grid(
    annulus: Annulus,
    A=None,
    z: complex | None = None,
    tol: float = 1e-11,
    start: int = 64,
    cap: int = 2**16,
) -> QuadratureGrid:
    """Pick a grid by doubling until the double layer transform of 1 settles.

    The probe integrates the kernel itself (exactly 2, resp. 2I, in the
    continuum), which tracks how well the grid resolves the resolvent's
    boundary peaks for this particular matrix or point.  Accuracy for
    nontrivial integrands is asserted independently in the test suite.
    """
    if A is not None:
        A = _check_spectrum(A, annulus)

        def probe(g: QuadratureGrid) -> np.ndarray:
            return integrate_matrices(g, kernel_stack(g, A))

    elif z is not None:
        zz = _check_point(z, annulus)

        def probe(g: QuadratureGrid) -> np.ndarray:
            u = g.dsigma / (g.sigma - zz)
            return np.array([np.dot(g.weights, np.imag(u) / np.pi)])

    else:
        raise ValueError("auto_grid needs a matrix or a point to probe against")

    _, grid = converge_grid(annulus, probe, tol=tol, start=start, cap=cap)
    return grid
