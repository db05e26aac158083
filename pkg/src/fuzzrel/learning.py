"""Learning weight matrices from paired data under the L-infinity error.

Training pairs (x^(i), y^(i)) induce, per output coordinate k, one max-min
system  L u = b^(k)  where the rows of L are the transposed inputs and
b^(k) stacks the k-th output coordinates.  The worst-case residual of any
weight matrix W equals the worst residual of its rows on those systems, so
the least achievable learning error is

    min_error = max_k cheb_distance(L, b^(k)),

and a matrix attaining it is assembled row by row: the greatest solution of
each consistent system, and for an inconsistent one the greatest solution
of the system whose right-hand side is a chosen Chebyshev approximation of
b^(k) (greatest by default; its minimal approximations on request).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .chebyshev import cheb_distance, greatest_cheb_approx, minimal_cheb_approximations
from .errors import DimensionMismatch
from .lattice import (
    DEFAULT_CAP,
    DEFAULT_EPS,
    godel_min_prod,
    linf_dist,
    maxmin_prod,
    unit_matrix,
)

#: Chebyshev-approximation choice for inconsistent per-output systems.
POLICIES = ("greatest", "minimal")


@dataclass(frozen=True)
class TrainingSet:
    """N input vectors (length m) paired with N output vectors (length n)."""

    inputs: np.ndarray   # (N, m), one input per row
    outputs: np.ndarray  # (N, n), one output per row

    def __post_init__(self):
        object.__setattr__(self, "inputs", unit_matrix(self.inputs))
        object.__setattr__(self, "outputs", unit_matrix(self.outputs))
        if self.inputs.shape[0] != self.outputs.shape[0]:
            raise DimensionMismatch(
                f"{self.inputs.shape[0]} inputs but {self.outputs.shape[0]} outputs"
            )

    @property
    def pair_count(self) -> int:
        return self.inputs.shape[0]


def build_systems(ts: TrainingSet) -> tuple[np.ndarray, tuple[np.ndarray, ...]]:
    """(L, per-output right-hand sides) for the induced max-min systems."""
    L = ts.inputs
    return L, tuple(ts.outputs[:, k].copy() for k in range(ts.outputs.shape[1]))


def learning_error(ts: TrainingSet, W) -> float:
    """Worst residual max_i || y^(i) - W x^(i) || of a candidate matrix."""
    W = unit_matrix(W)
    n_out, m = ts.outputs.shape[1], ts.inputs.shape[1]
    if W.shape != (n_out, m):
        raise DimensionMismatch(f"weights must be {(n_out, m)}, got {W.shape}")
    return max(
        linf_dist(ts.outputs[i], maxmin_prod(W, ts.inputs[i])) for i in range(ts.pair_count)
    )


def minimal_learning_error(ts: TrainingSet) -> tuple[float, np.ndarray]:
    """(least achievable error, per-output Chebyshev distances)."""
    L, rhs = build_systems(ts)
    per_output = np.array([cheb_distance(L, b)[0] for b in rhs])
    return float(per_output.max()), per_output


@dataclass(frozen=True)
class LearningReport:
    matrix: np.ndarray                      # L, (N, m)
    rhs_per_output: tuple[np.ndarray, ...]  # b^(k)
    per_output_distance: np.ndarray
    min_error: float
    weights: np.ndarray
    achieved_error: float


def build_approximate_weights(
    ts: TrainingSet,
    policy: str = "greatest",
    *,
    eps: float = DEFAULT_EPS,
    cap: int = DEFAULT_CAP,
) -> LearningReport:
    """Assemble a weight matrix whose learning error equals `min_error`.

    policy "greatest" replaces each inconsistent right-hand side with its
    greatest Chebyshev approximation (enumeration-free); "minimal" uses the
    lexicographically first minimal one.
    """
    if policy not in POLICIES:
        raise ValueError(f"unknown policy {policy!r}; expected one of {POLICIES}")
    L, rhs = build_systems(ts)
    per_output = np.array([cheb_distance(L, b)[0] for b in rhs])
    rows = []
    for k, b in enumerate(rhs):
        delta = float(per_output[k])
        if delta <= eps:
            target = b
        elif policy == "greatest":
            target = greatest_cheb_approx(L, b, delta, eps)
        else:
            target = minimal_cheb_approximations(L, b, delta, eps, cap)[0][0]
        rows.append(godel_min_prod(L.T, target, eps))
    W = np.vstack(rows)
    return LearningReport(
        matrix=L,
        rhs_per_output=rhs,
        per_output_distance=per_output,
        min_error=float(per_output.max()),
        weights=W,
        achieved_error=learning_error(ts, W),
    )
