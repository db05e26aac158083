"""FastAPI application exposing the solver pipelines.

POST /solve, /chebyshev, /learn, /rules, /oracle-check; GET /health.
Domain errors map to 400, enumeration-budget exhaustion to 422 with a
machine-readable error slug.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from ..errors import (
    BudgetExceeded,
    DimensionMismatch,
    DomainError,
    EnumerationBudgetExceeded,
    SubsetCapExceeded,
)
from . import handlers, models


def create_app() -> FastAPI:
    app = FastAPI(
        title="fuzzrel",
        description="max-min / min-max relational equation systems: solving, "
        "Chebyshev approximation, weight learning, rule-parameter learning",
        version="0.1.0",
    )

    @app.exception_handler(DomainError)
    @app.exception_handler(DimensionMismatch)
    async def _bad_input(request: Request, exc: Exception):
        return JSONResponse(
            status_code=400,
            content=models.ErrorBody(error="invalid_input", detail=str(exc)).model_dump(),
        )

    @app.exception_handler(EnumerationBudgetExceeded)
    @app.exception_handler(BudgetExceeded)
    @app.exception_handler(SubsetCapExceeded)
    async def _budget(request: Request, exc: Exception):
        return JSONResponse(
            status_code=422,
            content=models.ErrorBody(error="budget_exceeded", detail=str(exc)).model_dump(),
        )

    @app.get("/health")
    def health() -> dict:
        return {"status": "ok"}

    @app.post("/solve", response_model=models.SolveResponse, response_model_exclude_none=True)
    def solve(req: models.ProblemRequest):
        return handlers.solve_system(req)

    @app.post(
        "/chebyshev", response_model=models.ChebyshevResponse, response_model_exclude_none=True
    )
    def chebyshev(req: models.ChebyshevRequest):
        return handlers.chebyshev_system(req)

    @app.post("/learn", response_model=models.LearnResponse)
    def learn(req: models.TrainingRequest):
        return handlers.learn_weights(req)

    @app.post("/rules", response_model=models.RulesResponse)
    def rules(req: models.RulesRequest):
        return handlers.learn_rules(req)

    @app.post("/oracle-check", response_model=models.OracleCheckResponse)
    def oracle_check(req: models.OracleCheckRequest):
        return handlers.oracle_check(req)

    return app


app = create_app()
