"""Order-dual Chebyshev toolkit for min-max systems  G x = d.

Every quantity is the complement image of its max-min counterpart computed
on (1 - G, 1 - d): distance, lowest Chebyshev approximation, lowest
approximate solution, maximal Chebyshev approximations and the maximal
approximate solutions.  The complement switch is exact, so the primal
pipeline is the single source of truth; the direct dual formulas
(`eps_gap`, `dual_cheb_distance_direct`) are kept as redundant validators.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .chebyshev import cheb_distance, cheb_report, shifted_bounds
from .errors import DimensionMismatch
from .lattice import (
    DEFAULT_CAP,
    DEFAULT_EPS,
    complement,
    leq,
    minmax_prod,
    pos,
    unit_matrix,
    unit_vector,
)


def eps_gap(u: float, v: float, w: float) -> float:
    """min((w - u)^+ / 2, (w - v)^+); equals godel_gap(1-u, 1-v, 1-w)."""
    return min(max(w - u, 0.0) / 2.0, max(w - v, 0.0))


def dual_cheb_distance(G, d) -> tuple[float, np.ndarray]:
    """Chebyshev distance of d for the min-max system (complement path)."""
    return cheb_distance(complement(unit_matrix(G)), complement(unit_vector(d)))


def dual_cheb_distance_direct(G, d) -> tuple[float, np.ndarray]:
    """Direct closed-form twin of `dual_cheb_distance` (cross-check path)."""
    G = unit_matrix(G)
    d = unit_vector(d)
    if G.shape[0] != d.shape[0]:
        raise DimensionMismatch(f"matrix has {G.shape[0]} rows but vector has {d.shape[0]} entries")
    direct = pos(G - d[:, None])                        # (g_ij - d_i)^+
    half = pos(d[None, :] - d[:, None]) / 2.0           # (d_k - d_i)^+ / 2
    over = pos(d[:, None] - G)                          # (d_k - g_kj)^+
    gaps = np.minimum(half[:, :, None], over[None, :, :]).max(axis=1)
    per_row = np.maximum(direct, gaps).min(axis=1)
    return float(per_row.max()), per_row


@dataclass(frozen=True)
class DualChebyshevReport:
    """Mirror image of ChebyshevReport for a min-max system."""

    distance: float
    per_row: np.ndarray
    lowest_cheb: np.ndarray
    lowest_approx: np.ndarray
    maximal_chebs: tuple[np.ndarray, ...] | None
    maximal_approx: tuple[np.ndarray, ...] | None


def dual_report(
    G,
    d,
    *,
    eps: float = DEFAULT_EPS,
    cap: int = DEFAULT_CAP,
    include_maximal: bool = True,
) -> DualChebyshevReport:
    """Full dual pipeline: complement, run primal, complement back."""
    primal = cheb_report(
        complement(unit_matrix(G)),
        complement(unit_vector(d)),
        eps=eps,
        cap=cap,
        include_minimal=include_maximal,
    )
    return DualChebyshevReport(
        distance=primal.distance,
        per_row=primal.per_row,
        lowest_cheb=complement(primal.greatest_cheb),
        lowest_approx=complement(primal.greatest_approx),
        maximal_chebs=_complement_all(primal.minimal_chebs),
        maximal_approx=_complement_all(primal.minimal_approx),
    )


def _complement_all(vectors):
    if vectors is None:
        return None
    return tuple(sorted((complement(v) for v in vectors), key=tuple))


def is_dual_approx_solution(
    G, d, report: DualChebyshevReport, x, eps: float = DEFAULT_EPS
) -> bool:
    """True iff the image of x sits at distance exactly `report.distance` from d.

    Dual window characterization: G x <= upper(distance) and
    x >= lowest_approx.
    """
    G = unit_matrix(G)
    x = unit_vector(x)
    upper = shifted_bounds(d, report.distance).upper
    return leq(minmax_prod(G, x), upper, eps) and leq(report.lowest_approx, x, eps)
