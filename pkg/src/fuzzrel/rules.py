"""Rule-parameter learning for possibilistic systems over several data.

Each training datum yields one min-max system: a premise-degree matrix
against an output possibility distribution, sharing the unknown rule
parameters.  Stacking the blocks vertically gives a single min-max system
whose solutions honour every datum at once.  When the stacked system is
inconsistent, the dual Chebyshev pipeline supplies the extremal
approximations of the stacked target, and each of them induces a consistent
system whose solution interval(s) are reported.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .consistency import Composition, SystemProblem, solve
from .errors import DimensionMismatch
from .lattice import DEFAULT_CAP, DEFAULT_EPS, unit_matrix, unit_vector
from .minmax import dual_report


@dataclass(frozen=True)
class RuleInstance:
    """Premise possibility degrees and target output distribution of one datum."""

    gamma: np.ndarray   # (rows, p)
    target: np.ndarray  # (rows,)

    def __post_init__(self):
        object.__setattr__(self, "gamma", unit_matrix(self.gamma))
        object.__setattr__(self, "target", unit_vector(self.target))
        if self.gamma.shape[0] != self.target.shape[0]:
            raise DimensionMismatch(
                f"gamma has {self.gamma.shape[0]} rows but target has "
                f"{self.target.shape[0]} entries"
            )


@dataclass(frozen=True)
class SolutionIntervals:
    """Solution intervals of the consistent system with right-hand side `rhs`.

    Solutions are exactly the x with lower <= x <= u for some u in uppers.
    """

    rhs: np.ndarray
    lower: np.ndarray
    uppers: tuple[np.ndarray, ...]

    @property
    def pairs(self) -> tuple[tuple[np.ndarray, np.ndarray], ...]:
        return tuple((self.lower, u) for u in self.uppers)


@dataclass(frozen=True)
class RuleLearningResult:
    stacked: SystemProblem
    distance: float                          # 0 exactly when the stack is consistent
    consistent: bool
    lowest_solution: np.ndarray              # lowest solution, or lowest approximate one
    maximal_solutions: tuple[np.ndarray, ...]
    intervals: tuple[SolutionIntervals, ...]  # one group per extremal target


def stack_systems(instances) -> SystemProblem:
    """Vertically stack instance systems into one min-max problem."""
    instances = tuple(instances)
    if not instances:
        raise DimensionMismatch("need at least one rule instance")
    width = instances[0].gamma.shape[1]
    for inst in instances:
        if inst.gamma.shape[1] != width:
            raise DimensionMismatch(
                f"instances disagree on parameter count: {inst.gamma.shape[1]} vs {width}"
            )
    matrix = np.vstack([inst.gamma for inst in instances])
    rhs = np.concatenate([inst.target for inst in instances])
    return SystemProblem(matrix, rhs, Composition.MINMAX)


def learn_rule_parameters(
    instances, *, eps: float = DEFAULT_EPS, cap: int = DEFAULT_CAP
) -> RuleLearningResult:
    """Exact or approximate rule parameters for the stacked system."""
    problem = stack_systems(instances)
    report = dual_report(problem.matrix, problem.rhs, eps=eps, cap=cap)

    if report.distance <= eps:
        sols = solve(problem, eps, cap)
        group = SolutionIntervals(
            rhs=problem.rhs, lower=sols.lowest, uppers=sols.extremal_opposite
        )
        return RuleLearningResult(
            stacked=problem,
            distance=0.0,
            consistent=True,
            lowest_solution=sols.lowest,
            maximal_solutions=sols.extremal_opposite,
            intervals=(group,),
        )

    groups = []
    targets = [report.lowest_cheb]
    targets += [c for c in report.maximal_chebs if tuple(c) != tuple(report.lowest_cheb)]
    for target in targets:
        sols = solve(SystemProblem(problem.matrix, target, Composition.MINMAX), eps, cap)
        groups.append(
            SolutionIntervals(rhs=target, lower=sols.lowest, uppers=sols.extremal_opposite)
        )
    return RuleLearningResult(
        stacked=problem,
        distance=report.distance,
        consistent=False,
        lowest_solution=report.lowest_approx,
        maximal_solutions=report.maximal_approx,
        intervals=tuple(groups),
    )
