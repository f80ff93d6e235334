"""Lower-bound search: how badly can a Laurent polynomial amplify a matrix?

The spectral-set constant of a matrix A on the annulus is the sup of

    gain(f, A) = ||f(A)|| / sup_boundary |f|

over admissible f.  Any particular f certifies a lower bound, so the search
below climbs the gain over Laurent coefficients in a fixed exponent window
and reports the best witness it finds.  Upper bounds from the kernel
machinery (see :mod:`annulus_bounds.bounds`) bracket the same constant from
above; the scan driver emits both sides for ensembles of random members.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .bounds import OperatorClass, bound_report
from .calculus import auto_grid, cauchy_matrix_function, monomial_transform_stack
from .errors import DegenerateFunction, SamplerExhausted
from .functions import LaurentFunction, boundary_sup, normalized
from .geometry import Annulus, QuadratureGrid, make_annulus
from .membership import classify, op_norm, sample_numerical, sample_quantum


def gain(f: LaurentFunction, A, grid: QuadratureGrid) -> float:
    """||f(A)|| divided by the boundary sup of f.

    Raises
    ------
    DegenerateFunction
        If every coefficient of f is zero.
    SpectrumOutside
        If the spectrum of A is not strictly inside the grid's annulus.
    """
    if max(abs(c) for c in f.coeffs.values()) == 0.0:
        raise DegenerateFunction("gain of the zero function is undefined")
    s = boundary_sup(f, grid.annulus)
    return float(op_norm(cauchy_matrix_function(f, A, grid)) / s)


@dataclass(frozen=True)
class SearchResult:
    """Best witness found by :func:`search_lower_bound`.

    ``k_lower`` is ``gain(best_f, A)`` recomputed with the full-accuracy
    boundary sup (the climb itself uses a cheaper sup estimate);
    ``iterations_used`` counts objective evaluations across all restarts.
    """

    k_lower: float
    best_f: LaurentFunction
    iterations_used: int
    seed: int


def _hill_climb(c0, objective, max_passes, step0=0.25, decay=0.5, levels=20):
    """Coordinate ascent over complex coefficients with geometric step decay.

    Each pass tries, for every coefficient, additive moves along the real and
    imaginary axes plus multiplicative phase rotations, magnitude scalings,
    and a snap to exactly zero, keeping the best improvement per coordinate.
    The rotational moves matter: the gain is invariant under a global phase
    but sensitive to relative phases, and axis-aligned steps alone stall on
    that ridge.  The zero snap lets the climb drop an exponent entirely
    (witnesses are often sparse, and a leftover 1e-7 coefficient would
    otherwise pollute the boundary sup).  A pass with no improvement halves
    the step; the climb stops after ``levels`` halvings or ``max_passes``
    passes.
    """
    c = np.array(c0, dtype=complex)
    best = objective(c)
    evals = 1
    step = step0
    level = 0
    passes = 0
    while passes < max_passes and level < levels:
        improved = False
        for i in range(c.size):
            base = c[i]
            spin = np.exp(1j * step)
            cand_best = best
            value_best = None
            for cand in (
                base + step,
                base - step,
                base + 1j * step,
                base - 1j * step,
                base * spin,
                base * np.conj(spin),
                base * (1.0 + step),
                base * (1.0 - step),
                0.0,
            ):
                c[i] = cand
                v = objective(c)
                evals += 1
                if v > cand_best:
                    cand_best = v
                    value_best = cand
            c[i] = base if value_best is None else value_best
            if value_best is not None:
                best = cand_best
                improved = True
        passes += 1
        if not improved:
            step *= decay
            level += 1
    return c, best, evals


def search_lower_bound(
    A,
    annulus: Annulus,
    k_min: int,
    k_max: int,
    iters: int = 400,
    restarts: int = 8,
    seed: int = 0,
    grid: QuadratureGrid | None = None,
) -> SearchResult:
    """Climb the gain over Laurent coefficients on exponents k_min..k_max.

    Restart t draws its Gaussian start from seed + t, so runs are
    reproducible and restarts are independent.  The per-evaluation objective
    uses a precomputed monomial transform stack (one resolvent factorization
    for the whole search) and a dense boundary sup without refinement; the
    reported ``k_lower`` is recomputed with :func:`gain`.
    """
    if k_max < k_min:
        raise ValueError(f"empty exponent range [{k_min}, {k_max}]")
    if grid is None:
        grid = auto_grid(annulus, A=A)
    ks = np.arange(int(k_min), int(k_max) + 1)
    basis = monomial_transform_stack(grid, A, k_min, k_max)
    M = np.stack([basis[int(k)] for k in ks])

    m = max(256, 8 * ks.size)
    th = 2.0 * np.pi * np.arange(m) / m
    phases = np.exp(1j * np.outer(th, ks))
    ring_outer = (annulus.R**ks.astype(float))[None, :] * phases
    ring_inner = (annulus.r**ks.astype(float))[None, :] * phases

    def objective(c: np.ndarray) -> float:
        sup = max(
            np.abs(ring_outer @ c).max(),
            np.abs(ring_inner @ c).max(),
        )
        if sup == 0.0:
            return -np.inf
        fA = np.tensordot(c, M, axes=(0, 0))
        return float(np.linalg.norm(fA, 2) / sup)

    best_c = None
    best_val = -np.inf
    total_evals = 0
    for t in range(int(restarts)):
        rng = np.random.default_rng(seed + t)
        c0 = (rng.standard_normal(ks.size) + 1j * rng.standard_normal(ks.size)) / np.sqrt(2.0)
        c, val, evals = _hill_climb(c0, objective, int(iters))
        total_evals += evals
        if val > best_val:
            best_val = val
            best_c = c

    f_best = normalized(
        LaurentFunction({int(k): complex(c) for k, c in zip(ks, best_c)}), annulus
    )
    return SearchResult(
        k_lower=gain(f_best, A, grid),
        best_f=f_best,
        iterations_used=int(total_evals),
        seed=int(seed),
    )


@dataclass(frozen=True)
class ScanRow:
    """One (R, sample) cell of a scan: lower bound, upper bounds, margins.

    ``operator_class`` is the class the sampler was asked for (the ``class``
    CSV column); the margins record what the sample actually is.  ``status``
    is "ok" or "failed" (sampler exhausted; numeric fields are NaN then).
    """

    R: float
    dim: int
    index: int
    operator_class: str
    k_lower: float
    a: float
    b: float
    k_upper_eq10: float
    k_upper_closed: float
    quantum_margin: float
    numerical_margin: float
    status: str


#: Exact header of the scan CSV format, one column per ScanRow field.
SCAN_CSV_HEADER = (
    "R,dim,index,class,k_lower,a,b,k_upper_eq10,k_upper_closed,"
    "quantum_margin,numerical_margin,status"
)


def scan(
    operator_class: OperatorClass | str,
    dim: int,
    R_list: Sequence[float],
    samples_per_R: int = 3,
    degree: int = 2,
    iters: int = 400,
    restarts: int = 8,
    seed: int = 0,
) -> list[ScanRow]:
    """Sample members, search each one, and bound each one from above.

    For every radius in ``R_list`` draws ``samples_per_R`` members of the
    requested class (margin min(0.1, (R-1)/2)), runs the lower-bound search
    on exponents [-degree, degree], and assembles the bound report for the
    winning witness.  Rows are deterministic functions of ``seed``: row j
    (counted globally) uses seed + j for both its sampler and its search.
    A sampler failure produces a row with status "failed" and NaN numerics;
    the scan continues.
    """
    cls = OperatorClass(operator_class)
    degree = int(degree)
    if degree < 1:
        raise ValueError("degree must be at least 1")
    rows: list[ScanRow] = []
    counter = 0
    for R in R_list:
        annulus = make_annulus(R)
        margin = min(0.1, (annulus.R - 1.0) / 2.0)
        for idx in range(int(samples_per_R)):
            row_seed = int(seed) + counter
            counter += 1
            try:
                if cls == OperatorClass.QUANTUM:
                    A = sample_quantum(dim, annulus.R, margin, seed=row_seed)
                else:
                    A = sample_numerical(dim, annulus.R, margin, seed=row_seed)
            except SamplerExhausted:
                nan = float("nan")
                rows.append(
                    ScanRow(annulus.R, dim, idx, cls.value, nan, nan, nan, nan, nan, nan, nan, "failed")
                )
                continue
            grid = auto_grid(annulus, A=A)
            found = search_lower_bound(
                A, annulus, -degree, degree, iters=iters, restarts=restarts, seed=row_seed, grid=grid
            )
            report = classify(A, annulus.R)
            bounds_rep = bound_report(found.best_f, A, annulus.R, grid=grid)
            rows.append(
                ScanRow(
                    R=annulus.R,
                    dim=int(dim),
                    index=idx,
                    operator_class=cls.value,
                    k_lower=found.k_lower,
                    a=bounds_rep.a,
                    b=bounds_rep.b,
                    k_upper_eq10=bounds_rep.k_upper_eq10,
                    k_upper_closed=bounds_rep.k_upper_closed,
                    quantum_margin=report.quantum_margin,
                    numerical_margin=report.numerical_margin,
                    status="ok",
                )
            )
    return rows


def _fmt(x: float) -> str:
    return f"{x:.12g}"


def scan_csv(rows: Iterable[ScanRow]) -> str:
    """Render scan rows as CSV (deterministic %.12g float formatting)."""
    lines = [SCAN_CSV_HEADER]
    for row in rows:
        lines.append(
            ",".join(
                [
                    _fmt(row.R),
                    str(int(row.dim)),
                    str(int(row.index)),
                    row.operator_class,
                    _fmt(row.k_lower),
                    _fmt(row.a),
                    _fmt(row.b),
                    _fmt(row.k_upper_eq10),
                    _fmt(row.k_upper_closed),
                    _fmt(row.quantum_margin),
                    _fmt(row.numerical_margin),
                    row.status,
                ]
            )
        )
    return "\n".join(lines) + "\n"
