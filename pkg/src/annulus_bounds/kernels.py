"""Double layer kernel on the annulus boundary, scalar and matrix versions.

For a boundary point sigma with unit tangent sigma' and an interior point z,
the double layer (Poisson-type) kernel is

    mu(sigma, z) = (1/pi) * Im( sigma' / (sigma - z) )
                 = (1/2 pi i) * ( sigma'/(sigma - z) - conj(sigma')/(conj(sigma) - conj(z)) ).

Integrated over the whole oriented boundary it reproduces harmonic functions;
in particular ``integral mu(., z) ds = 2`` for every interior z (the boundary
has two components, each contributing a full unit of winding in this
normalization).

Substituting a matrix A with spectrum inside the annulus for z gives the
self-adjoint matrix kernel

    mu(sigma, A) = (X - X^*) / (2 pi i),   X = sigma' (sigma I - A)^{-1},

which is Hermitian by construction but indefinite in general.  Two shifted
kernels restore positivity for the two operator classes handled by this
package:

* ``nu_q = mu - (1/2 pi i)(sigma'/sigma) I`` (both circles) is PSD whenever
  ``||A|| < R`` and ``||A^{-1}|| < R``; it integrates to 2I.
* ``nu_n = mu`` on the outer circle and ``mu + (1/(pi r)) I`` on the inner
  one is PSD whenever the numerical radii of A and A^{-1} are below R; it
  integrates to 4I.

Positivity follows from resolvent sandwich identities (all exact, used by the
verification suite): with Q = (sigma I - A)^{-1},

    outer:  2 pi R mu   = Q [ R(2R I - e^{-i t}A - e^{i t}A^*) ] Q^*
            2 pi R nu_q = Q [ R^2 I - A A^* ] Q^*
    inner:  2 pi r nu_q = Q [ A A^* - r^2 I ] Q^*
                        = r^2 Q A [ R^2 I - B B^* ] A^* Q^*,   B = A^{-1}
            2 pi r nu_n = Q [ 2 A A^* - r e^{i t}A - r e^{-i t}A^* ] Q^*
                        = Q A [ 2 I - r (e^{-i t}B + e^{i t}B^*) ] A^* Q^*.

The middle factors are PSD exactly when the class constraints hold (norms for
the first family, numerical radii for the second).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import OnBoundary, ResolventSingular, SingularMatrix
from .geometry import BoundarySample, Circle, QuadratureGrid

_TWO_PI_I = 2j * np.pi

#: Node-to-spectrum distance below which a resolvent is treated as singular.
RESOLVENT_CUTOFF = 1e-12


@dataclass(frozen=True)
class HermitianCheck:
    """Result of a positive-semidefiniteness check.

    ``min_eigenvalue`` is the smallest eigenvalue of the Hermitian part,
    ``asymmetry`` the spectral norm of H - H^*; ``passed`` requires the
    eigenvalue to clear -tol and the asymmetry to stay below tol.
    """

    min_eigenvalue: float
    asymmetry: float
    passed: bool


def psd_check(H: np.ndarray, tol: float = 1e-9) -> HermitianCheck:
    """Check that H is (numerically) Hermitian positive semidefinite."""
    H = np.asarray(H, dtype=complex)
    skew = H - H.conj().T
    asymmetry = float(np.linalg.norm(skew, 2)) if H.size else 0.0
    herm = 0.5 * (H + H.conj().T)
    min_eig = float(np.linalg.eigvalsh(herm)[0])
    return HermitianCheck(min_eig, asymmetry, bool(min_eig >= -tol and asymmetry <= tol))


def _as_matrix(A) -> np.ndarray:
    A = np.asarray(A, dtype=complex)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {A.shape}")
    return A


def _require_invertible(A: np.ndarray) -> None:
    s = np.linalg.svd(A, compute_uv=False)
    if s[-1] <= RESOLVENT_CUTOFF * max(1.0, s[0]):
        raise SingularMatrix("matrix is singular to working precision")


def _resolvent(sigma: complex, A: np.ndarray) -> np.ndarray:
    d = A.shape[0]
    lam = np.linalg.eigvals(A)
    if np.min(np.abs(lam - sigma)) < RESOLVENT_CUTOFF:
        raise ResolventSingular(f"boundary node {sigma:.6g} is an eigenvalue of A")
    return np.linalg.inv(sigma * np.eye(d) - A)


def double_layer_kernel(sample: BoundarySample, z: complex) -> float:
    """Scalar kernel mu(sigma, z); real-valued.

    Raises
    ------
    OnBoundary
        If z is within 1e-12 of the boundary node.
    """
    dz = sample.sigma - complex(z)
    if abs(dz) < 1e-12:
        raise OnBoundary(f"evaluation point {z!r} coincides with boundary node")
    return float((sample.dsigma / dz).imag / np.pi)


def double_layer_kernel_matrix(sample: BoundarySample, A) -> np.ndarray:
    """Matrix kernel mu(sigma, A) = (X - X^*)/(2 pi i); Hermitian.

    Raises
    ------
    ResolventSingular
        If sigma is (numerically) an eigenvalue of A.
    """
    A = _as_matrix(A)
    X = sample.dsigma * _resolvent(sample.sigma, A)
    return (X - X.conj().T) / _TWO_PI_I


def shifted_kernel_quantum(sample: BoundarySample, A) -> np.ndarray:
    """Kernel nu for the norm-bounded class: mu minus the scalar whirl term.

    The shift ``(1/2 pi i)(sigma'/sigma) I`` equals ``+1/(2 pi R) I`` on the
    outer circle and ``-1/(2 pi r) I`` on the inner one; the result is PSD
    whenever ``||A|| < R`` and ``||A^{-1}|| < R``.
    """
    A = _as_matrix(A)
    _require_invertible(A)
    mu = double_layer_kernel_matrix(sample, A)
    shift = (sample.dsigma / sample.sigma) / _TWO_PI_I
    return mu - shift * np.eye(A.shape[0])


def shifted_kernel_numerical(sample: BoundarySample, A) -> np.ndarray:
    """Kernel nu for the numerical-radius class.

    Equal to mu on the outer circle; on the inner circle the constant
    ``1/(pi r)`` times the identity is added.  PSD whenever the numerical
    radii of A and A^{-1} are below R.
    """
    A = _as_matrix(A)
    _require_invertible(A)
    mu = double_layer_kernel_matrix(sample, A)
    if sample.circle == Circle.INNER:
        r = abs(sample.sigma)
        mu = mu + np.eye(A.shape[0]) / (np.pi * r)
    return mu


def factored_kernel_quantum(sample: BoundarySample, A, inverse_form: bool = False) -> np.ndarray:
    """Evaluate nu_q via its resolvent sandwich factorization.

    With Q = (sigma I - A)^{-1}:
    outer circle: ``Q (R^2 I - A A^*) Q^* / (2 pi R)``;
    inner circle: ``Q (A A^* - r^2 I) Q^* / (2 pi r)``, or with
    ``inverse_form=True`` the equivalent
    ``r^2 Q A (R^2 I - B B^*) A^* Q^* / (2 pi r)`` with B = A^{-1}.

    Exists for verification: must agree with
    :func:`shifted_kernel_quantum` to rounding, and its middle factor is
    manifestly PSD for members of the norm-bounded class.
    """
    A = _as_matrix(A)
    _require_invertible(A)
    d = A.shape[0]
    Q = _resolvent(sample.sigma, A)
    rho = abs(sample.sigma)
    if sample.circle == Circle.OUTER:
        if inverse_form:
            raise ValueError("the inverse-based factorization is an inner-circle identity")
        R = rho
        middle = R * R * np.eye(d) - A @ A.conj().T
        return (Q @ middle @ Q.conj().T) / (2.0 * np.pi * R)
    r = rho
    if inverse_form:
        B = np.linalg.inv(A)
        R = 1.0 / r
        middle = r * r * (A @ (R * R * np.eye(d) - B @ B.conj().T) @ A.conj().T)
    else:
        middle = A @ A.conj().T - r * r * np.eye(d)
    return (Q @ middle @ Q.conj().T) / (2.0 * np.pi * r)


def factored_kernel_numerical(sample: BoundarySample, A, inverse_form: bool = False) -> np.ndarray:
    """Evaluate nu_n via its resolvent sandwich factorization.

    With Q = (sigma I - A)^{-1} and t the parameter angle:
    outer circle: ``Q R (2R I - e^{-i t}A - e^{i t}A^*) Q^* / (2 pi R)``;
    inner circle: ``Q (2 A A^* - r e^{i t}A - r e^{-i t}A^*) Q^* / (2 pi r)``,
    or with ``inverse_form=True`` the equivalent
    ``Q A (2 I - r e^{-i t}B - r e^{i t}B^*) A^* Q^*`` with B = A^{-1}
    (note which conjugate rides on B: expanding A(...)A^* forces e^{-i t}
    onto B, the opposite assignment is *not* an identity).

    The middle factors are PSD exactly when w(A) < R (outer) and
    w(A^{-1}) < R (inner).
    """
    A = _as_matrix(A)
    _require_invertible(A)
    d = A.shape[0]
    Q = _resolvent(sample.sigma, A)
    phase = np.exp(1j * sample.theta)
    if sample.circle == Circle.OUTER:
        if inverse_form:
            raise ValueError("the inverse-based factorization is an inner-circle identity")
        R = abs(sample.sigma)
        middle = R * (2.0 * R * np.eye(d) - A / phase - phase * A.conj().T)
        return (Q @ middle @ Q.conj().T) / (2.0 * np.pi * R)
    r = abs(sample.sigma)
    if inverse_form:
        B = np.linalg.inv(A)
        middle = A @ (2.0 * np.eye(d) - r * (B / phase + phase * B.conj().T)) @ A.conj().T
    else:
        middle = 2.0 * A @ A.conj().T - r * phase * A - (r / phase) * A.conj().T
    return (Q @ middle @ Q.conj().T) / (2.0 * np.pi * r)


# ---------------------------------------------------------------------------
# batched (whole grid) versions used by the calculus and verification layers
# ---------------------------------------------------------------------------


def resolvent_stack(grid: QuadratureGrid, A) -> np.ndarray:
    """(2n, d, d) stack of resolvents (sigma_j I - A)^{-1}.

    Raises
    ------
    ResolventSingular
        If any node is within 1e-12 of an eigenvalue of A.
    """
    A = _as_matrix(A)
    d = A.shape[0]
    lam = np.linalg.eigvals(A)
    dist = np.abs(grid.sigma[:, None] - lam[None, :]).min()
    if dist < RESOLVENT_CUTOFF:
        raise ResolventSingular("a quadrature node is an eigenvalue of A")
    M = grid.sigma[:, None, None] * np.eye(d) - A
    return np.linalg.inv(M)


def kernel_stack(grid: QuadratureGrid, A) -> np.ndarray:
    """(2n, d, d) stack of mu(sigma_j, A)."""
    res = resolvent_stack(grid, A)
    X = grid.dsigma[:, None, None] * res
    return (X - X.conj().transpose(0, 2, 1)) / _TWO_PI_I


def shifted_stack_quantum(grid: QuadratureGrid, A) -> np.ndarray:
    """(2n, d, d) stack of nu_q(sigma_j, A)."""
    A = _as_matrix(A)
    _require_invertible(A)
    d = A.shape[0]
    stack = kernel_stack(grid, A)
    shift = (grid.dsigma / grid.sigma) / _TWO_PI_I
    return stack - shift[:, None, None] * np.eye(d)


def shifted_stack_numerical(grid: QuadratureGrid, A) -> np.ndarray:
    """(2n, d, d) stack of nu_n(sigma_j, A)."""
    A = _as_matrix(A)
    _require_invertible(A)
    d = A.shape[0]
    stack = kernel_stack(grid, A)
    bump = np.zeros(len(grid))
    bump[grid.inner_slice] = 1.0 / (np.pi * grid.annulus.r)
    return stack + bump[:, None, None] * np.eye(d)


def stack_psd_report(stack: np.ndarray, tol: float = 1e-9) -> HermitianCheck:
    """Aggregate PSD check over a kernel stack.

    Reports the worst (smallest) Hermitian-part eigenvalue across all nodes
    and the largest per-node asymmetry norm.
    """
    stack = np.asarray(stack, dtype=complex)
    skew = stack - stack.conj().transpose(0, 2, 1)
    asym = float(np.max(np.linalg.norm(skew, ord=2, axis=(1, 2)))) if stack.size else 0.0
    herm = 0.5 * (stack + stack.conj().transpose(0, 2, 1))
    min_eig = float(np.linalg.eigvalsh(herm)[:, 0].min())
    return HermitianCheck(min_eig, asym, bool(min_eig >= -tol and asym <= tol))
