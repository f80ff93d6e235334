"""Laurent polynomials on the annulus: evaluation, boundary sup, symmetries.

A trial function is a finite Laurent polynomial f(z) = sum_k c_k z^k with
integer exponents of either sign.  These are the only functions the package
evaluates — they are analytic on the closed annulus minus the origin, which
keeps every boundary integral spectrally convergent — and they are dense
enough in practice for the lower-bound search.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

import numpy as np

from .errors import DegenerateFunction, EvalAtZero
from .geometry import Annulus


@dataclass(frozen=True)
class LaurentFunction:
    """Finite Laurent polynomial, stored as an exponent -> coefficient map."""

    coeffs: Mapping[int, complex]
    _exponents: tuple[int, ...] = field(init=False, repr=False)

    def __post_init__(self):
        if not self.coeffs:
            raise DegenerateFunction("a Laurent function needs at least one coefficient")
        clean = {int(k): complex(c) for k, c in self.coeffs.items()}
        object.__setattr__(self, "coeffs", clean)
        object.__setattr__(self, "_exponents", tuple(sorted(clean)))

    @property
    def k_min(self) -> int:
        return self._exponents[0]

    @property
    def k_max(self) -> int:
        return self._exponents[-1]

    def coeff(self, k: int) -> complex:
        return self.coeffs.get(k, 0.0 + 0.0j)

    def __call__(self, z):
        return evaluate(self, z)


def evaluate(f: LaurentFunction, z):
    """Evaluate f at a point or ndarray of points.

    Uses Horner's scheme separately on the polynomial part (in z) and the
    principal part (in 1/z).

    Raises
    ------
    EvalAtZero
        If f has negative exponents and any evaluation point is 0.
    """
    z = np.asarray(z, dtype=complex)
    scalar = z.ndim == 0
    zv = np.atleast_1d(z)

    out = np.zeros_like(zv)
    if f.k_max >= 0:
        # Horner in z over exponents k_max ... 0.
        acc = np.zeros_like(zv)
        for k in range(f.k_max, -1, -1):
            acc = acc * zv + f.coeff(k)
        out += acc
    if f.k_min < 0:
        if np.any(zv == 0):
            raise EvalAtZero("negative exponents present; cannot evaluate at z = 0")
        u = 1.0 / zv
        acc = np.zeros_like(zv)
        for k in range(f.k_min, 0):  # ascending: k_min ... -1
            acc = acc * u + f.coeff(k)
        # acc now equals sum_{k<0} c_k u^{-k} / u ... fold the final power:
        out += acc * u
    return out[0] if scalar else out


def _circle_sup(f: LaurentFunction, rho: float, resolution: int) -> float:
    """Sup of |f| on the circle |z| = rho via dense sampling + local parabola.

    Samples |f| at ``resolution`` equispaced angles, then refines every
    discrete local maximum with one parabolic fit through its neighbors and
    re-evaluates f at the fitted angle.  For trigonometric polynomials this
    recovers the true sup to ~(grid spacing)^3 once the grid resolves all
    oscillations.
    """
    theta = 2.0 * np.pi * np.arange(resolution) / resolution
    y = np.abs(evaluate(f, rho * np.exp(1j * theta)))
    best = float(y.max())

    left = np.roll(y, 1)
    right = np.roll(y, -1)
    peaks = np.nonzero((y >= left) & (y >= right))[0]
    h = 2.0 * np.pi / resolution
    for j in peaks:
        denom = y[(j - 1) % resolution] - 2.0 * y[j] + y[(j + 1) % resolution]
        if denom >= 0.0:  # flat or concave-up: nothing to refine
            continue
        delta = 0.5 * h * (y[(j - 1) % resolution] - y[(j + 1) % resolution]) / denom
        if abs(delta) > h:
            continue
        cand = abs(evaluate(f, rho * np.exp(1j * (theta[j] + delta))))
        if cand > best:
            best = float(cand)
    return best


def boundary_sup(f: LaurentFunction, annulus: Annulus, resolution: int | None = None) -> float:
    """Sup of |f| over both boundary circles.

    ``resolution`` is the number of sample angles per circle; it is clamped
    from below to 8 per present exponent (aliasing floor) and defaults to
    max(4096, that floor).
    """
    floor = 8 * (f.k_max - f.k_min + 1)
    if resolution is None:
        resolution = max(4096, floor)
    resolution = max(int(resolution), floor, 16)
    return max(
        _circle_sup(f, annulus.R, resolution),
        _circle_sup(f, annulus.r, resolution),
    )


def rotate(f: LaurentFunction, phi: float) -> LaurentFunction:
    """Precompose with the rotation z -> e^{i phi} z."""
    w = np.exp(1j * float(phi))
    return LaurentFunction({k: c * w**k for k, c in f.coeffs.items()})


def invert(f: LaurentFunction) -> LaurentFunction:
    """Precompose with the inversion z -> 1/z (negates every exponent)."""
    return LaurentFunction({-k: c for k, c in f.coeffs.items()})


def scale(f: LaurentFunction, a: complex) -> LaurentFunction:
    """Multiply every coefficient by ``a``."""
    return LaurentFunction({k: a * c for k, c in f.coeffs.items()})


def add_constant(f: LaurentFunction, a: complex) -> LaurentFunction:
    """Add the constant ``a`` to f (shifts the k = 0 coefficient)."""
    coeffs = dict(f.coeffs)
    coeffs[0] = coeffs.get(0, 0.0 + 0.0j) + complex(a)
    return LaurentFunction(coeffs)


def normalized(f: LaurentFunction, annulus: Annulus, resolution: int | None = None) -> LaurentFunction:
    """Rescale f so its boundary sup is 1.

    Raises
    ------
    DegenerateFunction
        If every coefficient is (numerically) zero.
    """
    m = max(abs(c) for c in f.coeffs.values())
    if m == 0.0:
        raise DegenerateFunction("cannot normalize the zero function")
    s = boundary_sup(f, annulus, resolution)
    return scale(f, 1.0 / s)


def random_laurent(k_min: int, k_max: int, annulus: Annulus, seed: int) -> LaurentFunction:
    """Seeded random Laurent polynomial, normalized to boundary sup 1.

    Coefficients are iid standard complex Gaussians (real and imaginary parts
    N(0, 1/2)) on exponents k_min..k_max inclusive.
    """
    if k_max < k_min:
        raise ValueError(f"empty exponent range [{k_min}, {k_max}]")
    rng = np.random.default_rng(seed)
    n = k_max - k_min + 1
    c = (rng.standard_normal(n) + 1j * rng.standard_normal(n)) / np.sqrt(2.0)
    if not np.any(np.abs(c) > 0):
        raise DegenerateFunction("random draw produced the zero function")
    f = LaurentFunction({k_min + j: c[j] for j in range(n)})
    return normalized(f, annulus)


def to_triples(f: LaurentFunction) -> list[tuple[int, float, float]]:
    """Serialize as (exponent, Re c, Im c) triples, exponents ascending."""
    return [(k, float(f.coeffs[k].real), float(f.coeffs[k].imag)) for k in sorted(f.coeffs)]


def from_triples(triples: Iterable[Iterable[float]]) -> LaurentFunction:
    """Inverse of :func:`to_triples`; duplicate exponents are summed."""
    coeffs: dict[int, complex] = {}
    for k, re, im in triples:
        k = int(k)
        coeffs[k] = coeffs.get(k, 0.0 + 0.0j) + complex(float(re), float(im))
    return LaurentFunction(coeffs)
