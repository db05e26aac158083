"""Request/response models shared by the HTTP service and the CLI.

The request models double as the on-disk file formats (the CLI loads a JSON
document straight into them), and the response models are the JSON reports:
CLI `--format json` output is a response model serialized canonically.
"""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, Field

Matrix = list[list[float]]
Vector = list[float]


class CommonOptions(BaseModel):
    tolerance: float = Field(default=1e-9, ge=0.0)
    max_enumeration: int = Field(default=10**6, gt=0)


class ProblemRequest(CommonOptions):
    """One relational system: matrix, right-hand side, composition kind."""

    matrix: Matrix
    rhs: Vector
    kind: Literal["maxmin", "minmax"] = "maxmin"


class ChebyshevRequest(ProblemRequest):
    skip_minimal: bool = False


class TrainingRequest(CommonOptions):
    """Paired input/output rows; row counts must agree."""

    inputs: Matrix
    outputs: Matrix
    policy: Literal["greatest", "minimal"] = "greatest"


class RuleInstancePayload(BaseModel):
    gamma: Matrix
    target: Vector


class RulesRequest(CommonOptions):
    instances: list[RuleInstancePayload]


class OracleCheckRequest(ProblemRequest):
    pass


class SolveResponse(BaseModel):
    kind: str
    consistent: bool
    greatest: Vector | None = None
    lowest: Vector | None = None
    minimal_solutions: list[Vector] | None = None
    maximal_solutions: list[Vector] | None = None


class ChebyshevResponse(BaseModel):
    kind: str
    consistent: bool
    distance: float
    per_row: Vector
    lower_shift: Vector
    upper_shift: Vector
    greatest_cheb: Vector | None = None
    lowest_cheb: Vector | None = None
    greatest_approx: Vector | None = None
    lowest_approx: Vector | None = None
    minimal_chebs: list[Vector] | None = None
    maximal_chebs: list[Vector] | None = None
    minimal_approx: list[Vector] | None = None
    maximal_approx: list[Vector] | None = None


class LearnResponse(BaseModel):
    matrix: Matrix
    rhs_per_output: list[Vector]
    per_output_distance: Vector
    min_error: float
    weights: Matrix
    achieved_error: float
    residuals: Vector


class IntervalGroup(BaseModel):
    rhs: Vector
    lower: Vector
    uppers: list[Vector]


class RulesResponse(BaseModel):
    rows: int
    cols: int
    distance: float
    consistent: bool
    lowest_solution: Vector
    maximal_solutions: list[Vector]
    intervals: list[IntervalGroup]


class OracleCheckResponse(BaseModel):
    kind: str
    analytical_distance: float
    oracle_distance: float
    grid_distance: float
    grid_step: float
    distances_agree: bool
    minimal_solutions_checked: bool
    minimal_solutions_agree: bool | None = None
    agree: bool


class ErrorBody(BaseModel):
    error: str
    detail: str
