"""Operator-class membership on the annulus, plus random member generators.

Two classes of d x d matrices are handled, both pinned to the annulus
``1/R < |z| < R``:

* the *norm-bounded* class ("quantum"): ``||A|| < R`` and ``||A^{-1}|| < R``;
* the *numerical-radius-bounded* class ("numerical"): ``w(A) < R`` and
  ``w(A^{-1}) < R``, where w is the numerical radius.

Since ``w(A) <= ||A|| <= 2 w(A)``, every norm-bounded member is a
numerical-radius member but not conversely; both conditions force the
spectrum into the open annulus.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import SamplerExhausted
from .geometry import Annulus, make_annulus

_GOLDEN = (np.sqrt(5.0) - 1.0) / 2.0

#: Number of angles in the coarse sweep of the numerical-radius computation.
_SWEEP = 720


def _as_matrix(A) -> np.ndarray:
    A = np.asarray(A, dtype=complex)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {A.shape}")
    return A


def op_norm(A) -> float:
    """Spectral norm (largest singular value)."""
    return float(np.linalg.norm(_as_matrix(A), 2))


def _herm_top(A: np.ndarray, phi: float) -> float:
    """Largest eigenvalue of the Hermitian part of e^{i phi} A."""
    H = 0.5 * (np.exp(1j * phi) * A + np.exp(-1j * phi) * A.conj().T)
    return float(np.linalg.eigvalsh(H)[-1])


def numerical_radius(A, tol: float = 1e-12) -> float:
    """Numerical radius w(A) = max over phi of lambda_max(Herm(e^{i phi} A)).

    A vectorized 720-angle sweep locates the best rotation, then golden
    section search shrinks the surrounding bracket to width ``tol``.  The
    result never undershoots the sweep value.
    """
    A = _as_matrix(A)
    if not np.any(A):
        return 0.0
    phis = 2.0 * np.pi * np.arange(_SWEEP) / _SWEEP
    phase = np.exp(1j * phis)[:, None, None]
    H = 0.5 * (phase * A + np.conj(phase) * A.conj().T)
    tops = np.linalg.eigvalsh(H)[:, -1]
    j = int(np.argmax(tops))
    best = float(tops[j])

    # Golden-section refinement on the bracket around the winning angle.
    h = 2.0 * np.pi / _SWEEP
    a, b = phis[j] - h, phis[j] + h
    x1 = b - _GOLDEN * (b - a)
    x2 = a + _GOLDEN * (b - a)
    f1, f2 = _herm_top(A, x1), _herm_top(A, x2)
    while b - a > tol:
        if f1 < f2:
            a, x1, f1 = x1, x2, f2
            x2 = a + _GOLDEN * (b - a)
            f2 = _herm_top(A, x2)
        else:
            b, x2, f2 = x2, x1, f1
            x1 = b - _GOLDEN * (b - a)
            f1 = _herm_top(A, x1)
    return max(best, f1, f2)


@dataclass(frozen=True)
class ClassReport:
    """Membership report for one matrix against one annulus.

    Norm fields are ``inf`` when the matrix is singular (the inverse does not
    exist, so neither class can contain it).  Margins are ``R`` minus the
    binding quantity; strictly positive means member.
    """

    R: float
    op_norm: float
    inv_op_norm: float
    num_radius: float
    inv_num_radius: float
    quantum_member: bool
    numerical_member: bool
    quantum_margin: float
    numerical_margin: float


def classify(A, R: float, tol: float = 1e-12) -> ClassReport:
    """Measure both class memberships of A for the annulus of outer radius R.

    Membership uses strict inequalities on the computed quantities; ``tol``
    is the refinement tolerance handed to the numerical-radius computation.
    """
    A = _as_matrix(A)
    annulus = make_annulus(R)  # validates R
    norm_a = op_norm(A)
    w_a = numerical_radius(A, tol)
    try:
        Ainv = np.linalg.inv(A)
        s = np.linalg.svd(A, compute_uv=False)
        if s[-1] <= 1e-300:
            raise np.linalg.LinAlgError("effectively singular")
        norm_inv = op_norm(Ainv)
        w_inv = numerical_radius(Ainv, tol)
    except np.linalg.LinAlgError:
        norm_inv = np.inf
        w_inv = np.inf
    R = annulus.R
    q_margin = R - max(norm_a, norm_inv)
    n_margin = R - max(w_a, w_inv)
    return ClassReport(
        R=R,
        op_norm=norm_a,
        inv_op_norm=norm_inv,
        num_radius=w_a,
        inv_num_radius=w_inv,
        quantum_member=bool(norm_a < R and norm_inv < R),
        numerical_member=bool(w_a < R and w_inv < R),
        quantum_margin=float(q_margin),
        numerical_margin=float(n_margin),
    )


def spectrum_inside(A, annulus: Annulus, margin: float = 0.0) -> bool:
    """True if every eigenvalue lies in the annulus shrunk by ``margin``."""
    lam = np.linalg.eigvals(_as_matrix(A))
    return bool(np.all(annulus.contains(lam, margin)))


def haar_unitary(d: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-distributed d x d unitary (QR of a complex Ginibre matrix).

    The R-diagonal phase fix makes the distribution exactly Haar rather than
    merely orthogonalized Gaussian.
    """
    G = (rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))) / np.sqrt(2.0)
    Q, Rm = np.linalg.qr(G)
    diag = np.diagonal(Rm).copy()
    diag[diag == 0] = 1.0
    return Q * (diag / np.abs(diag))


def sample_quantum(d: int, R: float, margin: float = 0.1, seed: int = 0) -> np.ndarray:
    """Random member of the norm-bounded class, margin kept on both norms.

    Draws A = U diag(s) V^* with independent Haar U, V and singular values
    uniform in (1/(R - margin), R - margin), which pins ``||A||`` and
    ``||A^{-1}||`` below R - margin by construction; rejection only enforces
    the eigenvalue cushion used by downstream quadrature.

    Raises
    ------
    SamplerExhausted
        After 100 rejected draws (not expected in practice).
    ValueError
        If the margin leaves no room (needs 0 < margin < R - 1).
    """
    annulus = make_annulus(R)
    if not 0.0 < margin < R - 1.0:
        raise ValueError(f"margin must be in (0, R-1) = (0, {R - 1.0:g}), got {margin!r}")
    rng = np.random.default_rng(seed)
    hi = R - margin
    lo = 1.0 / hi
    for _ in range(100):
        U = haar_unitary(d, rng)
        V = haar_unitary(d, rng)
        s = rng.uniform(lo, hi, size=d)
        A = (U * s) @ V.conj().T
        if spectrum_inside(A, annulus, 1e-8):
            return A
    raise SamplerExhausted(f"no norm-bounded member found in 100 draws (d={d}, R={R})")


def sample_numerical(d: int, R: float, margin: float = 0.1, seed: int = 0) -> np.ndarray:
    """Random member of the numerical-radius class, margin kept on both radii.

    The base draw is a complex Ginibre matrix rescaled so ``w(A) = R - margin``
    exactly, accepted when ``w(A^{-1}) < R - margin`` too.  For d = 2 a
    closed-form family ``[[0, a], [1/a, 0]]`` with
    ``a + 1/a <= 2(R - margin)`` is mixed in with probability 1/4; its members
    sit deep in the class while staying outside the norm-bounded one for
    large a, which keeps test ensembles from clustering Gaussian-only.

    Plain Gaussian draws rarely satisfy both radius constraints when R is
    close to 1, so after 40 rejections each draw is progressively damped
    toward a Haar unitary (scaled unitaries meet both constraints whenever
    R - margin > 1, which the margin precondition guarantees); this keeps the
    sampler total while preserving the Gaussian distribution whenever it is
    feasible.

    Raises
    ------
    SamplerExhausted
        After 1000 rejected draws.
    ValueError
        If the margin leaves no room (needs 0 < margin < R - 1).
    """
    annulus = make_annulus(R)
    if not 0.0 < margin < R - 1.0:
        raise ValueError(f"margin must be in (0, R-1) = (0, {R - 1.0:g}), got {margin!r}")
    rng = np.random.default_rng(seed)
    target = R - margin
    for attempt in range(1, 1001):
        if d == 2 and rng.uniform() < 0.25:
            # Closed-form 2x2 family: w([[0, a], [1/a, 0]]) = (a + 1/a)/2.
            a_max = target + np.sqrt(target * target - 1.0)
            a = rng.uniform(1.0, a_max)
            A = np.array([[0.0, a], [1.0 / a, 0.0]], dtype=complex)
            return A
        G = (rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))) / np.sqrt(2.0 * d)
        if attempt > 40:
            eps = 0.5 ** (1 + (attempt - 41) // 5)
            G = haar_unitary(d, rng) + eps * G
        w = numerical_radius(G, 1e-10)
        if w == 0.0:
            continue
        A = G * (target / w)
        lam = np.linalg.eigvals(A)
        small = np.min(np.abs(lam))
        if small <= 0.0 or 1.0 / small >= target:  # w(A^{-1}) >= rho(A^{-1})
            continue
        if not spectrum_inside(A, annulus, 1e-8):
            continue
        Ainv = np.linalg.inv(A)
        if 0.5 * op_norm(Ainv) >= target:  # w >= ||.||/2
            continue
        if numerical_radius(Ainv, 1e-10) < target:
            return A
    raise SamplerExhausted(f"no numerical-radius member found in 1000 draws (d={d}, R={R})")


def matrix_to_payload(A) -> dict:
    """JSON-ready dict {dim, rows} with entries as [re, im] pairs."""
    A = _as_matrix(A)
    d = A.shape[0]
    rows = [[[float(A[i, j].real), float(A[i, j].imag)] for j in range(d)] for i in range(d)]
    return {"dim": d, "rows": rows}


def payload_to_matrix(obj: dict) -> np.ndarray:
    """Inverse of :func:`matrix_to_payload` (validates shape)."""
    d = int(obj["dim"])
    rows = obj["rows"]
    if d < 1 or len(rows) != d or any(len(row) != d for row in rows):
        raise ValueError(f"matrix payload must be {d} rows of {d} entries")
    A = np.empty((d, d), dtype=complex)
    for i, row in enumerate(rows):
        for j, entry in enumerate(row):
            re, im = entry
            A[i, j] = complex(float(re), float(im))
    return A
