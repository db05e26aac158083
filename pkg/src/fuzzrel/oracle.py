"""Brute-force validators, independent of the analytical code paths.

These never run in production pipelines; the test-suite (and the
`oracle-check` CLI verb / service endpoint) uses them to cross-examine the
analytical results:

* `oracle_delta` scans the finite candidate set of the threshold condition
  lower(delta) <= consistent_floor(A, upper(delta)) for the smallest
  passing shift.  The condition is monotone in delta and can only change at
  a candidate value, so the scan is exact.
* `oracle_delta_grid` re-checks the same threshold on a uniform delta grid,
  independent even of the candidate-set reasoning.
* `oracle_minimal_solutions` enumerates the full value grid (minimal
  solutions only take components in {0} union the thresholds) and prunes.
* `oracle_mu_check` verifies a claimed least learning error by evaluation
  plus random sampling below it.

Random instances for differential tests draw entries from {k/20}, keeping
all desk-scale arithmetic exactly representable at tolerance.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .chebyshev import godel_gap, shifted_bounds
from .consistency import consistent_floor
from .errors import BudgetExceeded
from .lattice import DEFAULT_EPS, leq, unit_matrix, unit_vector
from .learning import TrainingSet, learning_error


@dataclass(frozen=True)
class OracleBudget:
    max_grid_points: int = 10**6
    max_samples: int = 10**3

    def __post_init__(self):
        if self.max_grid_points <= 0 or self.max_samples <= 0:
            raise ValueError("budgets must be positive")


def oracle_delta(A, b, eps: float = DEFAULT_EPS, budget: OracleBudget = OracleBudget()) -> float:
    """Smallest candidate shift satisfying the threshold condition."""
    A = unit_matrix(A)
    b = unit_vector(b)
    candidates = {0.0}
    n, m = A.shape
    if (n * m * (n + 1) + 1) > budget.max_grid_points:
        raise BudgetExceeded("candidate set larger than the grid budget")
    for i in range(n):
        for j in range(m):
            candidates.add(max(b[i] - A[i, j], 0.0))
            for k in range(n):
                candidates.add(godel_gap(b[i], A[k, j], b[k]))
    for delta in sorted(candidates):
        if _window_closes(A, b, delta, eps):
            return float(delta)
    return 1.0


def oracle_delta_grid(A, b, step: float = 1e-3, eps: float = DEFAULT_EPS) -> float:
    """Smallest grid multiple of `step` satisfying the threshold condition.

    Formula-independent sanity layer: within `step` of the true distance.
    """
    A = unit_matrix(A)
    b = unit_vector(b)
    k = 0
    while k * step < 1.0 + step:
        if _window_closes(A, b, min(k * step, 1.0), eps):
            return float(min(k * step, 1.0))
        k += 1
    return 1.0


def _window_closes(A, b, delta, eps) -> bool:
    window = shifted_bounds(b, delta)
    return leq(window.lower, consistent_floor(A, window.upper, eps), eps)


def oracle_minimal_solutions(
    A,
    threshold,
    bound=None,
    eps: float = DEFAULT_EPS,
    budget: OracleBudget = OracleBudget(),
) -> tuple[np.ndarray, ...]:
    """Grid enumeration of the minimal solutions of threshold <= A x, x <= bound."""
    A = unit_matrix(A)
    t = unit_vector(threshold)
    n, m = A.shape
    ub = np.ones(m) if bound is None else unit_vector(bound)
    values = sorted({0.0} | {float(v) for v in t})
    if len(values) ** m > budget.max_grid_points:
        raise BudgetExceeded(f"{len(values)}^{m} grid points exceed the budget")

    grid = np.array(list(itertools.product(values, repeat=m)))
    feasible = []
    for start in range(0, grid.shape[0], 1 << 16):
        chunk = grid[start : start + (1 << 16)]
        images = np.minimum(A[None, :, :], chunk[:, None, :]).max(axis=2)
        ok = (chunk <= ub[None, :] + eps).all(axis=1) & (images >= t[None, :] - eps).all(axis=1)
        feasible.append(chunk[ok])
    feasible = np.concatenate(feasible)

    # Ascending component-sum order puts every dominator before what it
    # dominates, so one pass against the kept antichain suffices.
    minimal: list[np.ndarray] = []
    for x in feasible[np.argsort(feasible.sum(axis=1), kind="stable")]:
        if not any(np.all(k <= x + eps) for k in minimal):
            minimal.append(x)
    return tuple(sorted(minimal, key=tuple))


def oracle_mu_check(
    ts: TrainingSet,
    claimed_min_error: float,
    weights,
    eps: float = DEFAULT_EPS,
    budget: OracleBudget = OracleBudget(),
    seed: int = 0,
) -> bool:
    """True iff the claimed least error is attained and never beaten by sampling."""
    if abs(learning_error(ts, weights) - claimed_min_error) > eps:
        return False
    rng = np.random.default_rng(seed)
    n_out, m = ts.outputs.shape[1], ts.inputs.shape[1]
    for _ in range(budget.max_samples):
        W = random_grid_matrix(rng, n_out, m)
        if learning_error(ts, W) < claimed_min_error - eps:
            return False
    return True


def random_grid_matrix(rng: np.random.Generator, n: int, m: int) -> np.ndarray:
    """Random (n, m) matrix with entries from {k/20 : 0 <= k <= 20}."""
    return rng.integers(0, 21, size=(n, m)) / 20.0


def random_grid_vector(rng: np.random.Generator, n: int) -> np.ndarray:
    """Random length-n vector with entries from {k/20 : 0 <= k <= 20}."""
    return rng.integers(0, 21, size=n) / 20.0
