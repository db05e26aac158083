"""Consistency tests and full solution sets for relational equation systems.

A max-min system  A x = b  is consistent iff its potential greatest solution
e = godel_min_prod(A^t, b) actually solves it; equivalently, iff b is a fixed
point of the floor map

    consistent_floor(A, c) = maxmin_prod(A, godel_min_prod(A^t, c)),

which sends any right-hand side c to the greatest consistent right-hand side
below it (decreasing, idempotent, monotone).  The solution set of a
consistent system is the union of intervals [v, e] over the finite antichain
of minimal solutions v.

Min-max systems are handled by complementing into max-min and complementing
results back; the complement switch is exact, so this is the single trusted
code path (direct dual formulas live in `minmax` as validators).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch
from .inequalities import minimal_solutions
from .lattice import (
    DEFAULT_CAP,
    DEFAULT_EPS,
    complement,
    eps_max_prod,
    godel_min_prod,
    maxmin_prod,
    minmax_prod,
    unit_matrix,
    unit_vector,
    veq,
)


class Composition(str, enum.Enum):
    """Which product/addition pair the system uses."""

    MAXMIN = "maxmin"
    MINMAX = "minmax"


@dataclass(frozen=True)
class SystemProblem:
    """A (matrix, right-hand side, composition kind) triple."""

    matrix: np.ndarray
    rhs: np.ndarray
    kind: Composition = Composition.MAXMIN

    def __post_init__(self):
        object.__setattr__(self, "matrix", unit_matrix(self.matrix))
        object.__setattr__(self, "rhs", unit_vector(self.rhs))
        object.__setattr__(self, "kind", Composition(self.kind))
        if self.matrix.shape[0] != self.rhs.shape[0]:
            raise DimensionMismatch(
                f"matrix has {self.matrix.shape[0]} rows but rhs has {self.rhs.shape[0]} entries"
            )


@dataclass(frozen=True)
class SolutionSet:
    """Extremal description of a system's solutions.

    For a consistent max-min system, `greatest` is the unique greatest
    solution and `extremal_opposite` the antichain of minimal solutions;
    for min-max, `lowest` and the maximal solutions.  Inconsistent systems
    carry no vectors.
    """

    kind: Composition
    consistent: bool
    greatest: np.ndarray | None = None
    lowest: np.ndarray | None = None
    extremal_opposite: tuple[np.ndarray, ...] = ()


def potential_greatest(A, b, eps: float = DEFAULT_EPS) -> np.ndarray:
    """Greatest solution candidate of the max-min system A x = b."""
    A = unit_matrix(A)
    return godel_min_prod(A.T, unit_vector(b), eps)


def potential_lowest(G, d, eps: float = DEFAULT_EPS) -> np.ndarray:
    """Lowest solution candidate of the min-max system G x = d."""
    return complement(potential_greatest(complement(unit_matrix(G)), complement(unit_vector(d)), eps))


def extremal_candidate(problem: SystemProblem, eps: float = DEFAULT_EPS) -> np.ndarray:
    """Potential greatest (max-min) or lowest (min-max) solution.

    No consistency claim is implied; the candidate solves the system iff the
    system is consistent at all.
    """
    if problem.kind is Composition.MAXMIN:
        return potential_greatest(problem.matrix, problem.rhs, eps)
    return potential_lowest(problem.matrix, problem.rhs, eps)


def consistent_floor(A, c, eps: float = DEFAULT_EPS) -> np.ndarray:
    """Greatest right-hand side <= c whose max-min system with A is consistent."""
    A = unit_matrix(A)
    c = unit_vector(c)
    if A.shape[0] != c.shape[0]:
        raise DimensionMismatch(f"matrix has {A.shape[0]} rows but vector has {c.shape[0]} entries")
    return maxmin_prod(A, godel_min_prod(A.T, c, eps))


def consistent_ceil(G, c, eps: float = DEFAULT_EPS) -> np.ndarray:
    """Lowest right-hand side >= c whose min-max system with G is consistent.

    Computed as the complement image of `consistent_floor`; the direct
    formula minmax_prod(G, eps_max_prod(G^t, c)) is checked against it in
    tests only.
    """
    return complement(consistent_floor(complement(unit_matrix(G)), complement(unit_vector(c)), eps))


def consistent_ceil_direct(G, c, eps: float = DEFAULT_EPS) -> np.ndarray:
    """Direct-formula twin of `consistent_ceil` (cross-check path)."""
    G = unit_matrix(G)
    c = unit_vector(c)
    if G.shape[0] != c.shape[0]:
        raise DimensionMismatch(f"matrix has {G.shape[0]} rows but vector has {c.shape[0]} entries")
    return minmax_prod(G, eps_max_prod(G.T, c, eps))


def is_consistent(problem: SystemProblem, eps: float = DEFAULT_EPS) -> bool:
    """Fixed-point consistency test on the problem's right-hand side."""
    if problem.kind is Composition.MAXMIN:
        return veq(consistent_floor(problem.matrix, problem.rhs, eps), problem.rhs, eps)
    return veq(consistent_ceil(problem.matrix, problem.rhs, eps), problem.rhs, eps)


def solve(problem: SystemProblem, eps: float = DEFAULT_EPS, cap: int = DEFAULT_CAP) -> SolutionSet:
    """Full extremal solution set of the system.

    Minimal solutions of a consistent max-min system are the minimal
    solutions of  b <= A x  under the bound x <= e: below e the composition
    never exceeds b, so the inequality forces equality.
    """
    if problem.kind is Composition.MINMAX:
        dual = solve(
            SystemProblem(complement(problem.matrix), complement(problem.rhs), Composition.MAXMIN),
            eps,
            cap,
        )
        if not dual.consistent:
            return SolutionSet(kind=Composition.MINMAX, consistent=False)
        return SolutionSet(
            kind=Composition.MINMAX,
            consistent=True,
            lowest=complement(dual.greatest),
            extremal_opposite=tuple(
                sorted((complement(v) for v in dual.extremal_opposite), key=tuple)
            ),
        )

    e = potential_greatest(problem.matrix, problem.rhs, eps)
    if not veq(maxmin_prod(problem.matrix, e), problem.rhs, eps):
        return SolutionSet(kind=Composition.MAXMIN, consistent=False)
    minimal = minimal_solutions(problem.matrix, problem.rhs, e, eps=eps, cap=cap)
    return SolutionSet(
        kind=Composition.MAXMIN, consistent=True, greatest=e, extremal_opposite=minimal
    )
