"""Service layer: one pure function per endpoint, shared with the CLI."""

from __future__ import annotations

from .. import consistency, learning, minmax, oracle, rules
from ..chebyshev import cheb_distance, cheb_report, shifted_bounds
from ..inequalities import minimal_solutions
from ..lattice import complement, linf_dist, maxmin_prod, unit_matrix, unit_vector
from . import models


def _vec(v) -> list[float]:
    return [float(x) for x in v]


def _mat(M) -> list[list[float]]:
    return [[float(x) for x in row] for row in M]


def _vecs(vs) -> list[list[float]]:
    return [_vec(v) for v in vs]


def solve_system(req: models.ProblemRequest) -> models.SolveResponse:
    problem = consistency.SystemProblem(req.matrix, req.rhs, req.kind)
    result = consistency.solve(problem, req.tolerance, req.max_enumeration)
    return models.SolveResponse(
        kind=req.kind,
        consistent=result.consistent,
        greatest=None if result.greatest is None else _vec(result.greatest),
        lowest=None if result.lowest is None else _vec(result.lowest),
        minimal_solutions=(
            _vecs(result.extremal_opposite)
            if result.consistent and req.kind == "maxmin"
            else None
        ),
        maximal_solutions=(
            _vecs(result.extremal_opposite)
            if result.consistent and req.kind == "minmax"
            else None
        ),
    )


def chebyshev_system(req: models.ChebyshevRequest) -> models.ChebyshevResponse:
    eps, cap = req.tolerance, req.max_enumeration
    include = not req.skip_minimal
    if req.kind == "maxmin":
        rep = cheb_report(req.matrix, req.rhs, eps=eps, cap=cap, include_minimal=include)
        window = shifted_bounds(unit_vector(req.rhs), rep.distance)
        return models.ChebyshevResponse(
            kind=req.kind,
            consistent=rep.distance <= eps,
            distance=rep.distance,
            per_row=_vec(rep.per_row),
            lower_shift=_vec(window.lower),
            upper_shift=_vec(window.upper),
            greatest_cheb=_vec(rep.greatest_cheb),
            greatest_approx=_vec(rep.greatest_approx),
            minimal_chebs=None if rep.minimal_chebs is None else _vecs(rep.minimal_chebs),
            minimal_approx=None if rep.minimal_approx is None else _vecs(rep.minimal_approx),
        )
    rep = minmax.dual_report(req.matrix, req.rhs, eps=eps, cap=cap, include_maximal=include)
    window = shifted_bounds(unit_vector(req.rhs), rep.distance)
    return models.ChebyshevResponse(
        kind=req.kind,
        consistent=rep.distance <= eps,
        distance=rep.distance,
        per_row=_vec(rep.per_row),
        lower_shift=_vec(window.lower),
        upper_shift=_vec(window.upper),
        lowest_cheb=_vec(rep.lowest_cheb),
        lowest_approx=_vec(rep.lowest_approx),
        maximal_chebs=None if rep.maximal_chebs is None else _vecs(rep.maximal_chebs),
        maximal_approx=None if rep.maximal_approx is None else _vecs(rep.maximal_approx),
    )


def learn_weights(req: models.TrainingRequest) -> models.LearnResponse:
    ts = learning.TrainingSet(req.inputs, req.outputs)
    report = learning.build_approximate_weights(
        ts, req.policy, eps=req.tolerance, cap=req.max_enumeration
    )
    residuals = [
        linf_dist(ts.outputs[i], maxmin_prod(report.weights, ts.inputs[i]))
        for i in range(ts.pair_count)
    ]
    return models.LearnResponse(
        matrix=_mat(report.matrix),
        rhs_per_output=_vecs(report.rhs_per_output),
        per_output_distance=_vec(report.per_output_distance),
        min_error=report.min_error,
        weights=_mat(report.weights),
        achieved_error=report.achieved_error,
        residuals=residuals,
    )


def learn_rules(req: models.RulesRequest) -> models.RulesResponse:
    instances = [rules.RuleInstance(inst.gamma, inst.target) for inst in req.instances]
    result = rules.learn_rule_parameters(instances, eps=req.tolerance, cap=req.max_enumeration)
    return models.RulesResponse(
        rows=result.stacked.matrix.shape[0],
        cols=result.stacked.matrix.shape[1],
        distance=result.distance,
        consistent=result.consistent,
        lowest_solution=_vec(result.lowest_solution),
        maximal_solutions=_vecs(result.maximal_solutions),
        intervals=[
            models.IntervalGroup(rhs=_vec(g.rhs), lower=_vec(g.lower), uppers=_vecs(g.uppers))
            for g in result.intervals
        ],
    )


def oracle_check(req: models.OracleCheckRequest) -> models.OracleCheckResponse:
    """Differential check of the analytical pipeline against the brute-force oracles."""
    eps = req.tolerance
    A = unit_matrix(req.matrix)
    b = unit_vector(req.rhs)
    if req.kind == "minmax":
        A, b = complement(A), complement(b)

    analytical = cheb_distance(A, b)[0]
    scanned = oracle.oracle_delta(A, b, eps)
    step = 1e-3
    gridded = oracle.oracle_delta_grid(A, b, step, eps)
    distances_agree = abs(analytical - scanned) <= eps and abs(analytical - gridded) <= step + eps

    lower = shifted_bounds(b, analytical).lower
    values = {0.0} | {float(v) for v in lower}
    minimal_agree: bool | None = None
    checked = len(values) ** A.shape[1] <= oracle.OracleBudget().max_grid_points
    if checked:
        fast = minimal_solutions(A, lower, eps=eps, cap=req.max_enumeration)
        brute = oracle.oracle_minimal_solutions(A, lower, eps=eps)
        minimal_agree = {tuple(v) for v in fast} == {tuple(v) for v in brute}

    return models.OracleCheckResponse(
        kind=req.kind,
        analytical_distance=float(analytical),
        oracle_distance=float(scanned),
        grid_distance=float(gridded),
        grid_step=step,
        distances_agree=distances_agree,
        minimal_solutions_checked=checked,
        minimal_solutions_agree=minimal_agree,
        agree=distances_agree and (minimal_agree is not False),
    )
