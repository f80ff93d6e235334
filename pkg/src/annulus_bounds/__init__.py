"""Spectral-set machinery on the annulus 1/R < |z| < R.

Core layers:

* :mod:`~annulus_bounds.geometry` — oriented boundary, trapezoid quadrature;
* :mod:`~annulus_bounds.functions` — Laurent polynomials and boundary sups;
* :mod:`~annulus_bounds.kernels` — double layer kernel and its PSD shifts;
* :mod:`~annulus_bounds.calculus` — Cauchy / conjugate / double layer
  transforms of functions of a matrix;
* :mod:`~annulus_bounds.membership` — operator classes, samplers;
* :mod:`~annulus_bounds.bounds` — certified norm bounds and K reports;
* :mod:`~annulus_bounds.search` — lower-bound search and scans;
* :mod:`~annulus_bounds.verification` — self-check suites.

A FastAPI service (:mod:`annulus_bounds.service`) exposes the lot over HTTP,
and the ``annulus-bounds`` CLI is a thin client for it.
"""

from .bounds import (
    BoundReport,
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
from .calculus import (
    auto_grid,
    cauchy_matrix_function,
    conjugate_transform,
    conjugate_transform_exact,
    conjugate_transform_matrix,
    double_layer_transform,
    double_layer_transform_matrix,
)
from .errors import AnnulusError
from .functions import (
    LaurentFunction,
    boundary_sup,
    evaluate,
    from_triples,
    invert,
    normalized,
    random_laurent,
    rotate,
    to_triples,
)
from .geometry import (
    Annulus,
    BoundarySample,
    Circle,
    QuadratureGrid,
    boundary_sample,
    build_grid,
    integrate,
    make_annulus,
)
from .kernels import (
    HermitianCheck,
    double_layer_kernel,
    double_layer_kernel_matrix,
    psd_check,
    shifted_kernel_numerical,
    shifted_kernel_quantum,
)
from .membership import (
    ClassReport,
    classify,
    numerical_radius,
    op_norm,
    sample_numerical,
    sample_quantum,
)
from .search import ScanRow, SearchResult, gain, scan, scan_csv, search_lower_bound
from .verification import VerifyRow, rows_to_csv, run_suite

__version__ = "0.1.0"

__all__ = [
    "Annulus",
    "AnnulusError",
    "BoundReport",
    "BoundarySample",
    "Circle",
    "ClassReport",
    "HermitianCheck",
    "LaurentFunction",
    "OperatorClass",
    "QuadratureGrid",
    "ScanRow",
    "SearchResult",
    "VerifyRow",
    "auto_grid",
    "bound_report",
    "boundary_sample",
    "boundary_sup",
    "build_grid",
    "cauchy_matrix_function",
    "centering_constant",
    "centering_constant_inner",
    "unit_centered_gap",
    "classify",
    "conjugate_transform",
    "conjugate_transform_exact",
    "conjugate_transform_matrix",
    "double_layer_kernel",
    "double_layer_kernel_matrix",
    "double_layer_transform",
    "double_layer_transform_matrix",
    "evaluate",
    "from_triples",
    "gain",
    "integrate",
    "invert",
    "k_upper_closed_form",
    "k_upper_from_ab",
    "make_annulus",
    "min_shift_norm",
    "normalized",
    "numerical_radius",
    "op_norm",
    "psd_check",
    "random_laurent",
    "rotate",
    "rows_to_csv",
    "run_suite",
    "sample_numerical",
    "sample_quantum",
    "scan",
    "scan_csv",
    "search_lower_bound",
    "shifted_kernel_numerical",
    "shifted_kernel_quantum",
    "to_triples",
    "verify_conjugate_bounds",
    "verify_double_layer_numerical",
    "verify_double_layer_quantum",
]
