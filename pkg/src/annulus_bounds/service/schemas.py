"""Pydantic request/response models for the HTTP service.

Wire conventions:

* complex scalars travel as ``[re, im]`` pairs;
* matrices as ``{"dim": d, "rows": [[[re, im], ...], ...]}`` (row-major);
* Laurent functions as arrays of ``[k, re, im]`` triples;
* floats that may be infinite or NaN in the core (inverse norms of singular
  matrices, numerics of failed scan rows) are ``null`` on the wire — strict
  JSON has no spelling for them.  CSV strings render them as ``inf``/``nan``.
"""

from __future__ import annotations

import math

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from ..bounds import BoundReport
from ..functions import LaurentFunction, from_triples, to_triples
from ..membership import ClassReport
from ..search import ScanRow, SearchResult
from ..verification import VerifyRow

ComplexPair = tuple[float, float]
Triple = tuple[int, float, float]


def _finite(x: float) -> float | None:
    return float(x) if math.isfinite(x) else None


class MatrixPayload(BaseModel):
    """Dense complex matrix: dim + row-major [re, im] entries."""

    dim: int = Field(ge=1)
    rows: list[list[ComplexPair]]

    @model_validator(mode="after")
    def _square(self) -> "MatrixPayload":
        if len(self.rows) != self.dim or any(len(r) != self.dim for r in self.rows):
            raise ValueError(f"rows must form a {self.dim} x {self.dim} matrix")
        return self

    def to_array(self) -> np.ndarray:
        return np.array(
            [[complex(re, im) for re, im in row] for row in self.rows], dtype=complex
        )

    @classmethod
    def from_array(cls, A: np.ndarray) -> "MatrixPayload":
        A = np.asarray(A, dtype=complex)
        return cls(
            dim=A.shape[0],
            rows=[[(float(v.real), float(v.imag)) for v in row] for row in A],
        )


class FunctionPayload(BaseModel):
    """Laurent polynomial as [k, re, im] coefficient triples."""

    triples: list[Triple] = Field(min_length=1)

    def to_function(self) -> LaurentFunction:
        return from_triples(self.triples)

    @classmethod
    def from_function(cls, f: LaurentFunction) -> "FunctionPayload":
        return cls(triples=to_triples(f))


class ClassifyRequest(BaseModel):
    matrix: MatrixPayload
    R: float = Field(gt=1.0)
    tol: float = Field(default=1e-12, gt=0.0)


class ClassifyResponse(BaseModel):
    R: float
    op_norm: float | None
    inv_op_norm: float | None
    num_radius: float | None
    inv_num_radius: float | None
    quantum_member: bool
    numerical_member: bool
    quantum_margin: float | None
    numerical_margin: float | None

    @classmethod
    def from_report(cls, rep: ClassReport) -> "ClassifyResponse":
        return cls(
            R=rep.R,
            op_norm=_finite(rep.op_norm),
            inv_op_norm=_finite(rep.inv_op_norm),
            num_radius=_finite(rep.num_radius),
            inv_num_radius=_finite(rep.inv_num_radius),
            quantum_member=rep.quantum_member,
            numerical_member=rep.numerical_member,
            quantum_margin=_finite(rep.quantum_margin),
            numerical_margin=_finite(rep.numerical_margin),
        )


class SearchRequest(BaseModel):
    matrix: MatrixPayload
    R: float = Field(gt=1.0)
    degree: int = Field(default=2, ge=1)
    iters: int = Field(default=400, ge=1)
    restarts: int = Field(default=8, ge=1)
    seed: int = 0


class SearchResponse(BaseModel):
    k_lower: float
    best_f: FunctionPayload
    iterations_used: int
    seed: int

    @classmethod
    def from_result(cls, res: SearchResult) -> "SearchResponse":
        return cls(
            k_lower=res.k_lower,
            best_f=FunctionPayload.from_function(res.best_f),
            iterations_used=res.iterations_used,
            seed=res.seed,
        )


class BoundRequest(BaseModel):
    """Bound report request; omit ``function`` to search for the witness."""

    matrix: MatrixPayload
    R: float = Field(gt=1.0)
    function: FunctionPayload | None = None
    degree: int = Field(default=2, ge=1)
    iters: int = Field(default=400, ge=1)
    restarts: int = Field(default=8, ge=1)
    seed: int = 0


class BoundResponse(BaseModel):
    class_used: str
    gamma: ComplexPair
    gamma1: ComplexPair
    c1: ComplexPair
    c2: ComplexPair
    a: float
    b: float
    k_upper_eq10: float
    k_upper_closed: float
    function: FunctionPayload
    k_lower: float | None = None

    @classmethod
    def from_report(
        cls,
        rep: BoundReport,
        f: LaurentFunction,
        k_lower: float | None = None,
    ) -> "BoundResponse":
        pair = lambda z: (float(z.real), float(z.imag))  # noqa: E731
        return cls(
            class_used=rep.class_used.value,
            gamma=pair(rep.gamma),
            gamma1=pair(rep.gamma1),
            c1=pair(rep.c1),
            c2=pair(rep.c2),
            a=rep.a,
            b=rep.b,
            k_upper_eq10=rep.k_upper_eq10,
            k_upper_closed=rep.k_upper_closed,
            function=FunctionPayload.from_function(f),
            k_lower=k_lower,
        )


class VerifyRequest(BaseModel):
    suite: str = Field(default="all", pattern="^(kernels|lemma|sbound|all)$")
    R: float = Field(default=2.0, gt=1.0)
    dim: int = Field(default=6, ge=1)
    samples: int = Field(default=20, ge=1)
    seed: int = 7
    tol: float = Field(default=1e-6, gt=0.0)


class VerifyRowModel(BaseModel):
    name: str
    value: float | None
    bound: float
    passed: bool

    @classmethod
    def from_row(cls, row: VerifyRow) -> "VerifyRowModel":
        return cls(name=row.name, value=_finite(row.value), bound=row.bound, passed=row.passed)


class VerifyResponse(BaseModel):
    rows: list[VerifyRowModel]
    all_pass: bool
    csv: str


class ScanRequest(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    operator_class: str = Field(alias="class", pattern="^(quantum|numerical)$")
    dim: int = Field(default=4, ge=1)
    R_list: list[float] = Field(min_length=1)
    samples_per_R: int = Field(default=3, ge=1)
    degree: int = Field(default=2, ge=1)
    iters: int = Field(default=400, ge=1)
    restarts: int = Field(default=8, ge=1)
    seed: int = 0

    @field_validator("R_list")
    @classmethod
    def _radii(cls, v: list[float]) -> list[float]:
        if any(not R > 1.0 for R in v):
            raise ValueError("every radius must exceed 1")
        return v


class ScanRowModel(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    R: float
    dim: int
    index: int
    operator_class: str = Field(alias="class")
    k_lower: float | None
    a: float | None
    b: float | None
    k_upper_eq10: float | None
    k_upper_closed: float | None
    quantum_margin: float | None
    numerical_margin: float | None
    status: str

    @classmethod
    def from_row(cls, row: ScanRow) -> "ScanRowModel":
        return cls(
            R=row.R,
            dim=row.dim,
            index=row.index,
            operator_class=row.operator_class,
            k_lower=_finite(row.k_lower),
            a=_finite(row.a),
            b=_finite(row.b),
            k_upper_eq10=_finite(row.k_upper_eq10),
            k_upper_closed=_finite(row.k_upper_closed),
            quantum_margin=_finite(row.quantum_margin),
            numerical_margin=_finite(row.numerical_margin),
            status=row.status,
        )


class ScanResponse(BaseModel):
    rows: list[ScanRowModel]
    csv: str
