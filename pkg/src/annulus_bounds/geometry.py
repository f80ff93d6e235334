"""Annulus geometry: oriented boundary parametrization and trapezoid quadrature.

The domain is the annulus ``{z : 1/R < |z| < R}``.  Its boundary has two
components: the outer circle of radius R traversed counterclockwise and the
inner circle of radius r = 1/R traversed clockwise, so that the domain stays
on the left.  Both components are parametrized by arclength; orientation is
carried entirely by the unit tangent ``dsigma`` while quadrature weights stay
positive.  Concretely,

    outer:  sigma(theta) = R e^{i theta},   dsigma = i e^{i theta},  ds = R dtheta
    inner:  sigma(theta) = r e^{-i theta},  dsigma = -i e^{-i theta}, ds = r dtheta

Periodic trapezoid rule on equispaced theta nodes is spectrally accurate for
the smooth (analytic) integrands used throughout this package, so grids are
small and refinement is done by doubling.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Callable, Sequence

import numpy as np

from .errors import GridTooCoarse, InvalidRadius, LengthMismatch

#: Minimal allowed gap between the outer radius and 1 (degenerate annuli are
#: rejected rather than produced with catastrophic cancellation).
MIN_THICKNESS = 1e-6


class Circle(str, Enum):
    """Which boundary component a sample lives on."""

    OUTER = "outer"
    INNER = "inner"


@dataclass(frozen=True)
class Annulus:
    """The annulus 1/R < |z| < R.

    The inner radius is always the reciprocal of the outer one; construct via
    :func:`make_annulus` which validates R.
    """

    R: float

    @property
    def r(self) -> float:
        """Inner radius, 1/R."""
        return 1.0 / self.R

    @property
    def boundary_length(self) -> float:
        """Total arclength of both boundary circles."""
        return 2.0 * np.pi * (self.R + self.r)

    def contains(self, z, margin: float = 0.0):
        """True where z is inside the annulus with the given radial margin.

        Works elementwise on arrays.  ``margin > 0`` shrinks the annulus on
        both sides before testing.
        """
        a = np.abs(np.asarray(z))
        return (a > self.r + margin) & (a < self.R - margin)


def make_annulus(R: float) -> Annulus:
    """Validated constructor for :class:`Annulus`.

    Raises
    ------
    InvalidRadius
        If ``R <= 1 + 1e-6`` (the annulus would be empty or too thin for
        stable boundary quadrature).
    """
    R = float(R)
    if not R > 1.0 + MIN_THICKNESS:
        raise InvalidRadius(f"outer radius must exceed 1 + {MIN_THICKNESS:g}, got {R!r}")
    return Annulus(R)


@dataclass(frozen=True)
class BoundarySample:
    """One boundary point with its tangent data.

    Attributes
    ----------
    circle : Circle
        Boundary component the point lies on.
    theta : float
        Parameter angle in [0, 2pi).
    sigma : complex
        The boundary point itself.
    dsigma : complex
        Unit tangent at ``sigma`` in the positive (domain-on-the-left)
        traversal: ``i e^{i theta}`` outside, ``-i e^{-i theta}`` inside.
    ds : float
        Arclength density with respect to theta (R outside, r inside).
    """

    circle: Circle
    theta: float
    sigma: complex
    dsigma: complex
    ds: float


def boundary_sample(annulus: Annulus, circle: Circle, theta: float) -> BoundarySample:
    """Boundary point + tangent for one parameter angle."""
    theta = float(theta) % (2.0 * np.pi)
    phase = np.exp(1j * theta)
    if circle == Circle.OUTER:
        return BoundarySample(Circle.OUTER, theta, annulus.R * phase, 1j * phase, annulus.R)
    return BoundarySample(Circle.INNER, theta, annulus.r / phase, -1j / phase, annulus.r)


@dataclass(frozen=True, eq=False)
class QuadratureGrid:
    """Equispaced boundary nodes for the periodic trapezoid rule.

    Nodes are ordered outer circle first, then inner circle, theta ascending
    within each.  The arrays are read-only views; a grid is immutable after
    construction.

    Attributes
    ----------
    annulus : Annulus
    n_per_circle : int
        Node count on each circle (total is twice this).
    theta, sigma, dsigma, weights : np.ndarray
        Node angles, points, unit tangents and positive quadrature weights
        (2*pi*R/n outer, 2*pi*r/n inner).  All have length 2*n_per_circle.
    """

    annulus: Annulus
    n_per_circle: int
    theta: np.ndarray
    sigma: np.ndarray
    dsigma: np.ndarray
    weights: np.ndarray

    def __len__(self) -> int:
        return 2 * self.n_per_circle

    @property
    def outer_slice(self) -> slice:
        return slice(0, self.n_per_circle)

    @property
    def inner_slice(self) -> slice:
        return slice(self.n_per_circle, 2 * self.n_per_circle)

    def circle_of(self, index: int) -> Circle:
        return Circle.OUTER if index < self.n_per_circle else Circle.INNER

    def sample(self, index: int) -> BoundarySample:
        """Materialize one node as a :class:`BoundarySample`."""
        circle = self.circle_of(index)
        ds = self.annulus.R if circle == Circle.OUTER else self.annulus.r
        return BoundarySample(
            circle,
            float(self.theta[index]),
            complex(self.sigma[index]),
            complex(self.dsigma[index]),
            ds,
        )

    def samples(self) -> list[BoundarySample]:
        """All nodes, in grid order."""
        return [self.sample(j) for j in range(len(self))]


def build_grid(annulus: Annulus, n_per_circle: int) -> QuadratureGrid:
    """Build the 2*n node trapezoid grid on the annulus boundary.

    Raises
    ------
    GridTooCoarse
        If fewer than 8 nodes per circle are requested.
    """
    n = int(n_per_circle)
    if n < 8:
        raise GridTooCoarse(f"need at least 8 nodes per circle, got {n}")
    theta = 2.0 * np.pi * np.arange(n) / n
    phase = np.exp(1j * theta)

    sigma = np.concatenate([annulus.R * phase, annulus.r / phase])
    dsigma = np.concatenate([1j * phase, -1j / phase])
    weights = np.concatenate(
        [
            np.full(n, 2.0 * np.pi * annulus.R / n),
            np.full(n, 2.0 * np.pi * annulus.r / n),
        ]
    )
    both_theta = np.concatenate([theta, theta])
    for arr in (both_theta, sigma, dsigma, weights):
        arr.setflags(write=False)
    return QuadratureGrid(annulus, n, both_theta, sigma, dsigma, weights)


def integrate(grid: QuadratureGrid, values: Sequence[complex]) -> complex:
    """Trapezoid integral of per-node scalar samples against arclength.

    ``values[j]`` is the integrand at ``grid.sigma[j]``; the result is
    ``sum_j w_j values[j]`` which approximates the boundary integral with
    spectral accuracy for analytic integrands.

    Raises
    ------
    LengthMismatch
        If ``values`` does not have one entry per node.
    """
    v = np.asarray(values)
    if v.shape != (len(grid),):
        raise LengthMismatch(f"expected {len(grid)} samples, got shape {v.shape}")
    return complex(np.dot(grid.weights, v))


def integrate_matrices(grid: QuadratureGrid, stack: np.ndarray) -> np.ndarray:
    """Trapezoid integral of a per-node stack of matrices.

    ``stack`` has shape (2n, d, d); returns the weighted sum along the node
    axis, shape (d, d).
    """
    stack = np.asarray(stack)
    if stack.shape[0] != len(grid):
        raise LengthMismatch(f"expected leading dimension {len(grid)}, got {stack.shape}")
    return np.tensordot(grid.weights, stack, axes=(0, 0))


def converge_grid(
    annulus: Annulus,
    evaluate: Callable[[QuadratureGrid], np.ndarray],
    tol: float = 1e-10,
    start: int = 64,
    cap: int = 2**16,
) -> tuple[np.ndarray, QuadratureGrid]:
    """Double the grid until ``evaluate`` stabilizes.

    ``evaluate(grid)`` may return a scalar or an array; doubling stops once
    the max-abs difference between successive evaluations drops below
    ``tol``, or at ``cap`` nodes per circle (the capped result is returned
    as-is; callers that need certainty should compare against ``tol``
    themselves).
    """
    n = max(8, int(start))
    prev = None
    while True:
        grid = build_grid(annulus, n)
        val = np.asarray(evaluate(grid))
        if prev is not None and np.max(np.abs(val - prev)) < tol:
            return val, grid
        if n >= cap:
            return val, grid
        prev = val
        n *= 2
